"""Basepoint trees of plane linear series, through iterated blowups.

A basepoint of a system F is a common zero of all members; blowing it up
and dividing the exceptional factor out of the pullbacks exposes any
basepoints infinitely near it, which live on the exceptional line in one
of the two charts.  The tree collects every such point with its
multiplicity, all coordinates embedded in one final field tower.
"""

from __future__ import annotations

from . import parsing
from .bipoly import (
    BiPoly,
    UniPoly,
    common_tower,
    exact_div_power,
    gcd_tuple,
    pullback_blowup,
    uni_gcd_list,
)
from .errors import (
    InvalidInput,
    NotABasepoint,
    RecursionLimitExceeded,
)
from .numfield import FieldElement, FieldTower
from .zeroset import zero_set

DEFAULT_MAX_DEPTH = 32

_CHARTS = ("t", "s")


class BasepointNode:
    """One basepoint: its blowup sequence, coordinates and multiplicity."""

    __slots__ = ("sequence", "point", "mult", "children_t", "children_s")

    def __init__(self, sequence, point, mult, children_t=(), children_s=()):
        self.sequence = tuple(sequence)
        self.point = tuple(point)
        self.mult = mult
        self.children_t = tuple(children_t)
        self.children_s = tuple(children_s)

    def children(self):
        return self.children_t + self.children_s

    def __eq__(self, other):
        if not isinstance(other, BasepointNode):
            return NotImplemented
        return (
            self.sequence == other.sequence
            and self.point == other.point
            and self.mult == other.mult
            and self.children_t == other.children_t
            and self.children_s == other.children_s
        )

    def __hash__(self):
        return hash((self.sequence, self.point, self.mult))

    def __repr__(self):
        path = "".join(ch for _, ch in self.sequence)
        return (
            f"<node [{path or 'root'}] ({self.point[0]}, {self.point[1]})"
            f" mult {self.mult}>"
        )


class BasepointTree:
    """All basepoints of a system, with the tower their coordinates live in."""

    __slots__ = ("roots", "tower")

    def __init__(self, roots, tower: FieldTower):
        self.roots = tuple(roots)
        self.tower = tower

    def nodes(self):
        """Every node in depth-first order, T-branches before S-branches."""
        out = []

        def walk(node):
            out.append(node)
            for child in node.children_t:
                walk(child)
            for child in node.children_s:
                walk(child)

        for root in self.roots:
            walk(root)
        return out

    def is_empty(self) -> bool:
        return not self.roots

    def node_count(self) -> int:
        return len(self.nodes())

    def multiplicities(self):
        return [n.mult for n in self.nodes()]

    def with_multiplicities(self, mults) -> "BasepointTree":
        """The same tree shape carrying a new multiplicity per node.

        Multiplicities are consumed in this tree's node order and may be
        zero: a zero node imposes no conditions but keeps its place in
        the recursion.
        """
        mults = list(mults)
        if len(mults) != self.node_count():
            raise InvalidInput(
                f"expected {self.node_count()} multiplicities, got {len(mults)}"
            )
        if any(not isinstance(m, int) or m < 0 for m in mults):
            raise InvalidInput("multiplicities must be nonnegative integers")
        it = iter(mults)

        def rebuild(node):
            m = next(it)
            return BasepointNode(
                node.sequence,
                node.point,
                m,
                tuple(rebuild(c) for c in node.children_t),
                tuple(rebuild(c) for c in node.children_s),
            )

        return BasepointTree(tuple(rebuild(r) for r in self.roots), self.tower)

    def __eq__(self, other):
        if not isinstance(other, BasepointTree):
            return NotImplemented
        return self.tower == other.tower and self.roots == other.roots

    def __repr__(self):
        return f"<BasepointTree of {self.node_count()} nodes over {self.tower!r}>"


def _pure_power_degree(g: BiPoly, var: str) -> int:
    """Degree of a gcd known to be a power of one variable."""
    if g.is_constant():
        return 0
    terms = g.terms()
    assert len(terms) == 1, f"gcd {g} is not a pure power of {var}"
    ((du, dv),) = terms
    if var == "v":
        assert du == 0, f"gcd {g} is not a pure power of v"
        return dv
    assert dv == 0, f"gcd {g} is not a pure power of u"
    return du


def _prepare(F, tower: FieldTower | None):
    polys = list(F)
    if not polys:
        raise InvalidInput("empty system")
    t = polys[0].tower
    for f in polys[1:]:
        t = common_tower(t, f.tower)
    if tower is not None:
        t = common_tower(t, tower)
    polys = [f.embed(t) for f in polys]
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise InvalidInput("every polynomial in the system is zero")
    return nonzero, t


def multiplicity(F, point) -> int:
    """Order of vanishing at a point of a generic member of the system.

    Zero when the point is not a basepoint.
    """
    polys, t = _prepare(F, None)
    g = gcd_tuple(pullback_blowup(polys, point, "t"))
    return g.degree() if not g.is_constant() else 0


def strict_transform(F, sequence):
    """Transform a system along a blowup sequence of (point, chart) steps.

    Each step pulls the system back through its chart and divides out the
    full power of the exceptional coordinate.  A step whose point is not
    a basepoint of the running system raises NotABasepoint.
    """
    polys, t = _prepare(F, None)
    for step in sequence:
        try:
            point, chart = step
        except (TypeError, ValueError):
            raise InvalidInput(f"bad blowup step {step!r}") from None
        chart = str(chart).lower()
        if chart not in _CHARTS:
            raise InvalidInput(f"unknown chart {chart!r}; expected 't' or 's'")
        pulled = pullback_blowup(polys, point, chart)
        var = "v" if chart == "t" else "u"
        m = _pure_power_degree(gcd_tuple(pulled), var)
        if m == 0:
            raise NotABasepoint(
                f"({point[0]}, {point[1]}) is not a basepoint of the transform"
            )
        polys = exact_div_power(pulled, var, m)
    return polys


def get_basepoints(F, tower: FieldTower | None = None,
                   max_depth: int = DEFAULT_MAX_DEPTH) -> BasepointTree:
    """The complete basepoint tree of a system with constant gcd.

    Top-level basepoints are the common zeros of the system; under each,
    the two blowup charts are searched recursively for zeros on the
    exceptional line.  The S-chart skips the points the T-chart already
    produced, so no direction is reported twice.
    """
    if not isinstance(max_depth, int) or isinstance(max_depth, bool) or max_depth < 1:
        raise InvalidInput("max_depth must be a positive integer")
    polys, t = _prepare(F, tower)
    records, chain = zero_set(polys, tower=t)
    roots = []
    for rec in records:
        node, chain = _build_node(
            rec.embed(chain),
            [f.embed(chain) for f in polys],
            (),
            chain,
            1,
            max_depth,
        )
        roots.append(node)
    return BasepointTree(tuple(_embed_node(n, chain) for n in roots), chain)


def _build_node(point, transforms, sequence, chain, depth, max_depth):
    if depth > max_depth:
        raise RecursionLimitExceeded(
            f"blowup recursion passed depth {max_depth}"
        )
    pulled_t = pullback_blowup(transforms, point, "t")
    m = _pure_power_degree(gcd_tuple(pulled_t), "v")
    assert m >= 1, "zero multiplicity for a verified common zero"
    pulled_s = pullback_blowup(transforms, point, "s")
    ms = _pure_power_degree(gcd_tuple(pulled_s), "u")
    assert ms == m, "chart multiplicities disagree"
    strict_t = exact_div_power(pulled_t, "v", m)
    strict_s = exact_div_power(pulled_s, "u", m)

    t_recs, chain = zero_set(strict_t, tower=chain, restriction="v")
    child_seq = sequence + ((point, "t"),)
    children_t = []
    for rec in t_recs:
        child, chain = _build_node(
            rec.embed(chain),
            [f.embed(chain) for f in strict_t],
            child_seq,
            chain,
            depth + 1,
            max_depth,
        )
        children_t.append(child)

    # Points already found on the T-side exceptional line reappear in the
    # S-chart at inverted coordinates; exclude exactly those.
    at_zero = [f.substitute("v", chain.zero()) for f in strict_t]
    at_zero = [p for p in at_zero if not p.is_zero()]
    drop = None
    if at_zero:
        g_line = uni_gcd_list(at_zero)
        if g_line.degree() > 0:
            drop = g_line.shifted_reverse()
            if drop.degree() <= 0:
                drop = None

    s_recs, chain = zero_set(
        strict_s, tower=chain, restriction="u", drop_roots_of=drop
    )
    child_seq = sequence + ((point, "s"),)
    children_s = []
    for rec in s_recs:
        child, chain = _build_node(
            rec.embed(chain),
            [f.embed(chain) for f in strict_s],
            child_seq,
            chain,
            depth + 1,
            max_depth,
        )
        children_s.append(child)

    node = BasepointNode(sequence, point, m, tuple(children_t), tuple(children_s))
    return node, chain


def _embed_node(node: BasepointNode, tower: FieldTower) -> BasepointNode:
    seq = tuple(
        ((a.embed(tower), b.embed(tower)), ch) for (a, b), ch in node.sequence
    )
    pt = (node.point[0].embed(tower), node.point[1].embed(tower))
    return BasepointNode(
        seq,
        pt,
        node.mult,
        tuple(_embed_node(c, tower) for c in node.children_t),
        tuple(_embed_node(c, tower) for c in node.children_s),
    )


# -- serialization ---------------------------------------------------------------


def _node_to_json(node: BasepointNode) -> dict:
    return {
        "sequence": [
            [[str(a), str(b)], ch] for (a, b), ch in node.sequence
        ],
        "point": [str(node.point[0]), str(node.point[1])],
        "mult": node.mult,
        "children_t": [_node_to_json(c) for c in node.children_t],
        "children_s": [_node_to_json(c) for c in node.children_s],
    }


def tree_to_json(tree: BasepointTree) -> dict:
    """JSON-ready dict: the tower declaration plus the node forest."""
    return {
        "tower": parsing.tower_to_json(tree.tower),
        "tree": [_node_to_json(n) for n in tree.roots],
    }


def _parse_point(data, tower: FieldTower):
    if (
        not isinstance(data, (list, tuple))
        or len(data) != 2
        or not all(isinstance(c, str) for c in data)
    ):
        raise InvalidInput(f"a point must be a pair of expression strings: {data!r}")
    return (
        parsing.parse_element(data[0], tower),
        parsing.parse_element(data[1], tower),
    )


def _node_from_json(data, tower, parent_seq, parent_point, chart, depth, max_depth):
    if depth > max_depth:
        raise RecursionLimitExceeded(
            f"tree input passed the depth limit of {max_depth}"
        )
    if not isinstance(data, dict) or set(data) != {
        "sequence",
        "point",
        "mult",
        "children_t",
        "children_s",
    }:
        raise InvalidInput(
            "tree nodes need exactly the fields sequence, point, mult, "
            "children_t, children_s"
        )
    if parent_point is None:
        expected_seq = ()
    else:
        expected_seq = parent_seq + ((parent_point, chart),)
    raw_seq = data["sequence"]
    if not isinstance(raw_seq, list):
        raise InvalidInput("node sequence must be a list")
    seq = []
    for entry in raw_seq:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InvalidInput(f"bad sequence entry {entry!r}")
        pt_data, ch = entry
        if ch not in _CHARTS:
            raise InvalidInput(f"unknown chart {ch!r} in sequence")
        seq.append((_parse_point(pt_data, tower), ch))
    seq = tuple(seq)
    if seq != expected_seq:
        raise InvalidInput("node sequence does not match its position in the tree")
    point = _parse_point(data["point"], tower)
    if chart == "t" and point[1]:
        raise InvalidInput("a T-branch child must have v-coordinate 0")
    if chart == "s" and point[0]:
        raise InvalidInput("an S-branch child must have u-coordinate 0")
    mult = data["mult"]
    if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
        raise InvalidInput(f"multiplicity must be a positive integer: {mult!r}")
    for key in ("children_t", "children_s"):
        if not isinstance(data[key], list):
            raise InvalidInput(f"{key} must be a list")
    children_t = tuple(
        _node_from_json(c, tower, seq, point, "t", depth + 1, max_depth)
        for c in data["children_t"]
    )
    children_s = tuple(
        _node_from_json(c, tower, seq, point, "s", depth + 1, max_depth)
        for c in data["children_s"]
    )
    return BasepointNode(seq, point, mult, children_t, children_s)


def tree_from_json(data, max_depth: int = DEFAULT_MAX_DEPTH) -> BasepointTree:
    """Rebuild and validate a tree; raises on any structural defect."""
    if not isinstance(max_depth, int) or isinstance(max_depth, bool) or max_depth < 1:
        raise InvalidInput("max_depth must be a positive integer")
    if not isinstance(data, dict) or set(data) != {"tower", "tree"}:
        raise InvalidInput("tree document needs exactly the fields tower and tree")
    tower = parsing.tower_from_json(data["tower"])
    if not isinstance(data["tree"], list):
        raise InvalidInput("tree must be a list of root nodes")
    roots = tuple(
        _node_from_json(n, tower, (), None, None, 1, max_depth)
        for n in data["tree"]
    )
    return BasepointTree(roots, tower)
