"""Polynomials in u and v over a number field tower.

BiPoly is a sparse bivariate polynomial with FieldElement coefficients.
UniPoly is a dense univariate polynomial used for coefficient arithmetic,
factoring and root work.  The module also provides the handful of global
operations the blowup machinery needs: gcds, resultants, chart pullbacks,
exact division by a power of a variable and derivative evaluation.
"""

from __future__ import annotations

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    NotDivisible,
)
from .numfield import QQ, FieldElement, FieldTower, Rational

VARS = ("u", "v")


def _check_var(var: str) -> str:
    if var not in VARS:
        raise InvalidInput(f"unknown variable {var!r}; expected 'u' or 'v'")
    return var


def common_tower(a: FieldTower, b: FieldTower) -> FieldTower:
    """The larger of two towers when one extends the other."""
    if a.extends(b):
        return a
    if b.extends(a):
        return b
    raise FieldMismatch("towers are not nested")


class UniPoly:
    """Dense univariate polynomial, coefficients low degree first."""

    __slots__ = ("tower", "var", "coeffs")

    def __init__(self, tower: FieldTower, var: str, coeffs):
        self.tower = tower
        self.var = var
        cs = [self._coerce_coeff(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    def _coerce_coeff(self, c) -> FieldElement:
        if isinstance(c, FieldElement):
            if c.tower is not self.tower:
                if not c.tower.extends(self.tower) and not self.tower.extends(c.tower):
                    raise FieldMismatch("coefficient from an unrelated tower")
                if not self.tower.extends(c.tower):
                    raise FieldMismatch("coefficient tower exceeds polynomial tower")
                return c.embed(self.tower)
            return c
        if isinstance(c, (int, Rational)):
            return self.tower.rational(c)
        raise InvalidInput(f"cannot use {type(c).__name__} as a coefficient")

    @classmethod
    def zero(cls, tower: FieldTower, var: str) -> "UniPoly":
        return cls(tower, var, ())

    @classmethod
    def one(cls, tower: FieldTower, var: str) -> "UniPoly":
        return cls(tower, var, (tower.one(),))

    @classmethod
    def constant(cls, tower: FieldTower, var: str, value) -> "UniPoly":
        return cls(tower, var, (value,))

    @classmethod
    def variable(cls, tower: FieldTower, var: str) -> "UniPoly":
        return cls(tower, var, (tower.zero(), tower.one()))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise InvalidInput("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else self.tower.zero()

    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> FieldElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.tower.zero()

    def _same(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            raise InvalidInput("expected a univariate polynomial")
        if other.var != self.var:
            raise InvalidInput(f"variable mismatch: {self.var!r} vs {other.var!r}")
        if other.tower is not self.tower:
            t = common_tower(self.tower, other.tower)
            return other.embed(t)
        return other

    def _pair(self, other):
        if isinstance(other, (int, Rational, FieldElement)):
            other = UniPoly.constant(self.tower, self.var, other)
        other = self._same(other)
        if other.tower is self.tower:
            return self, other
        return self.embed(other.tower), other

    def __add__(self, other):
        a, b = self._pair(other)
        n = max(len(a.coeffs), len(b.coeffs))
        return UniPoly(a.tower, a.var, [a.coeff(k) + b.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.tower, self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._pair(other)[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a.is_zero() or b.is_zero():
            return UniPoly.zero(a.tower, a.var)
        out = [a.tower.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca.is_zero():
                continue
            for j, cb in enumerate(b.coeffs):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(a.tower, a.var, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers must be nonnegative integers")
        result = UniPoly.one(self.tower, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UniPoly"):
        a, b = self._pair(other)
        if b.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q = [a.tower.zero()] * max(len(a.coeffs) - len(b.coeffs) + 1, 0)
        rem = list(a.coeffs)
        inv_lc = b.lc().inverse()
        db = b.degree()
        while len(rem) - 1 >= db and rem:
            shift = len(rem) - 1 - db
            factor = rem[-1] * inv_lc
            q[shift] = factor
            for k in range(db + 1):
                rem[shift + k] = rem[shift + k] - factor * b.coeffs[k]
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(a.tower, a.var, q), UniPoly(a.tower, a.var, rem)

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise NotDivisible("univariate division left a remainder")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.lc()
        if lead == 1:
            return self
        inv = lead.inverse()
        return UniPoly(self.tower, self.var, [c * inv for c in self.coeffs])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self._pair(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "UniPoly":
        return UniPoly(
            self.tower, self.var, [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def eval(self, x) -> FieldElement:
        if isinstance(x, (int, Rational)):
            x = self.tower.rational(x)
        t = common_tower(self.tower, x.tower)
        x = x.embed(t)
        acc = t.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c.embed(t)
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        a, b = self._pair(other)
        acc = UniPoly.zero(b.tower, b.var)
        for c in reversed(a.coeffs):
            acc = acc * b + c
        return acc

    def shifted_reverse(self) -> "UniPoly":
        """Strip the root at zero, then reverse the coefficients.

        The roots of the result are exactly the inverses of the nonzero
        roots of self.
        """
        if self.is_zero():
            return self
        k = 0
        while self.coeffs[k].is_zero():
            k += 1
        return UniPoly(self.tower, self.var, self.coeffs[k:][::-1])

    def embed(self, tower: FieldTower) -> "UniPoly":
        if tower is self.tower:
            return self
        return UniPoly(tower, self.var, [c.embed(tower) for c in self.coeffs])

    def sort_key(self):
        return (
            len(self.coeffs),
            tuple(c.sort_key() for c in reversed(self.coeffs)),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.var != other.var:
            return False
        if self.tower is not other.tower:
            try:
                t = common_tower(self.tower, other.tower)
            except FieldMismatch:
                return False
            return self.embed(t).coeffs == other.embed(t).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __str__(self) -> str:
        items = [((k,), c) for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return _render_terms(items[::-1], (self.var,))

    def __repr__(self) -> str:
        return f"UniPoly({self})"


class BiPoly:
    """Sparse polynomial in u and v with coefficients in a field tower."""

    __slots__ = ("tower", "_terms", "_hash")

    def __init__(self, tower: FieldTower, terms=None):
        self.tower = tower
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                du, dv = key
                if not isinstance(du, int) or not isinstance(dv, int) or du < 0 or dv < 0:
                    raise InvalidInput(f"bad exponent pair {key!r}")
                if isinstance(c, (int, Rational)):
                    c = tower.rational(c)
                elif not isinstance(c, FieldElement):
                    raise InvalidInput(f"cannot use {type(c).__name__} as a coefficient")
                elif c.tower is not tower:
                    c = c.embed(tower)
                if not c.is_zero():
                    clean[(du, dv)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, tower: FieldTower) -> "BiPoly":
        return cls(tower)

    @classmethod
    def one(cls, tower: FieldTower) -> "BiPoly":
        return cls(tower, {(0, 0): tower.one()})

    @classmethod
    def constant(cls, tower: FieldTower, value) -> "BiPoly":
        return cls(tower, {(0, 0): value})

    @classmethod
    def variable(cls, tower: FieldTower, var: str) -> "BiPoly":
        _check_var(var)
        key = (1, 0) if var == "u" else (0, 1)
        return cls(tower, {key: tower.one()})

    @classmethod
    def from_unipoly(cls, p: UniPoly, var: str | None = None) -> "BiPoly":
        var = _check_var(var or p.var)
        if var == "u":
            terms = {(k, 0): c for k, c in enumerate(p.coeffs)}
        else:
            terms = {(0, k): c for k, c in enumerate(p.coeffs)}
        return cls(p.tower, terms)

    def terms(self):
        return dict(self._terms)

    def coeff(self, du: int, dv: int) -> FieldElement:
        return self._terms.get((du, dv), self.tower.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise InvalidInput("polynomial is not constant")
        return self._terms.get((0, 0), self.tower.zero())

    def degree(self, var: str | None = None) -> int:
        """Degree in one variable, or total degree when var is None."""
        if not self._terms:
            return -1
        if var is None:
            return max(du + dv for du, dv in self._terms)
        _check_var(var)
        idx = 0 if var == "u" else 1
        return max(k[idx] for k in self._terms)

    def min_degree(self, var: str) -> int:
        if not self._terms:
            return 0
        _check_var(var)
        idx = 0 if var == "u" else 1
        return min(k[idx] for k in self._terms)

    def lex_leading(self):
        """Leading (exponents, coefficient) for lex order with u above v."""
        if not self._terms:
            raise InvalidInput("zero polynomial has no leading term")
        key = max(self._terms)
        return key, self._terms[key]

    def monic_lex(self) -> "BiPoly":
        if self.is_zero():
            return self
        _, lead = self.lex_leading()
        if lead == 1:
            return self
        inv = lead.inverse()
        return BiPoly(self.tower, {k: c * inv for k, c in self._terms.items()})

    def _pair(self, other):
        if isinstance(other, (int, Rational, FieldElement)):
            other = BiPoly.constant(self.tower, other)
        if not isinstance(other, BiPoly):
            raise InvalidInput("expected a bivariate polynomial")
        if other.tower is self.tower:
            return self, other
        t = common_tower(self.tower, other.tower)
        return self.embed(t), other.embed(t)

    def __add__(self, other):
        a, b = self._pair(other)
        out = dict(a._terms)
        for k, c in b._terms.items():
            out[k] = out.get(k, a.tower.zero()) + c
        return BiPoly(a.tower, out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.tower, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._pair(other)[1])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        out = {}
        for (i1, j1), c1 in a._terms.items():
            for (i2, j2), c2 in b._terms.items():
                k = (i1 + i2, j1 + j2)
                prod = c1 * c2
                if k in out:
                    out[k] = out[k] + prod
                else:
                    out[k] = prod
        return BiPoly(a.tower, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise InvalidInput("polynomial powers must be nonnegative integers")
        result = BiPoly.one(self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, var: str, order: int = 1) -> "BiPoly":
        _check_var(var)
        if not isinstance(order, int) or order < 0:
            raise InvalidInput("derivative order must be a nonnegative integer")
        idx = 0 if var == "u" else 1
        cur = self
        for _ in range(order):
            out = {}
            for (du, dv), c in cur._terms.items():
                e = (du, dv)[idx]
                if e == 0:
                    continue
                k = (du - 1, dv) if idx == 0 else (du, dv - 1)
                out[k] = out.get(k, self.tower.zero()) + e * c
            cur = BiPoly(self.tower, out)
        return cur

    def substitute(self, var: str, value) -> UniPoly:
        """Set one variable to a field element, leaving a UniPoly in the other."""
        _check_var(var)
        if isinstance(value, (int, Rational)):
            value = self.tower.rational(value)
        t = common_tower(self.tower, value.tower)
        value = value.embed(t)
        idx = 0 if var == "u" else 1
        other = "v" if var == "u" else "u"
        n = self.degree(other)
        out = [t.zero()] * (n + 1)
        powers = {0: t.one()}

        def pw(e):
            if e not in powers:
                powers[e] = pw(e - 1) * value
            return powers[e]

        for (du, dv), c in self._terms.items():
            e = (du, dv)[idx]
            k = (du, dv)[1 - idx]
            out[k] = out[k] + c.embed(t) * pw(e)
        return UniPoly(t, other, out)

    def eval(self, point) -> FieldElement:
        xu, xv = point
        t = self.tower
        for x in (xu, xv):
            if isinstance(x, FieldElement):
                t = common_tower(t, x.tower)
        if isinstance(xu, (int, Rational)):
            xu = t.rational(xu)
        if isinstance(xv, (int, Rational)):
            xv = t.rational(xv)
        xu = xu.embed(t)
        xv = xv.embed(t)
        pu = {0: t.one()}
        pv = {0: t.one()}

        def pw(cache, base, e):
            if e not in cache:
                cache[e] = pw(cache, base, e - 1) * base
            return cache[e]

        acc = t.zero()
        for (du, dv), c in self._terms.items():
            acc = acc + c.embed(t) * pw(pu, xu, du) * pw(pv, xv, dv)
        return acc

    def subs_polys(self, pu: "BiPoly", pv: "BiPoly") -> "BiPoly":
        """Evaluate at a pair of polynomials: self(pu, pv)."""
        t = common_tower(common_tower(self.tower, pu.tower), pv.tower)
        pu = pu.embed(t)
        pv = pv.embed(t)
        cu = {0: BiPoly.one(t)}
        cv = {0: BiPoly.one(t)}

        def pw(cache, base, e):
            if e not in cache:
                cache[e] = pw(cache, base, e - 1) * base
            return cache[e]

        acc = BiPoly.zero(t)
        for (du, dv), c in sorted(self._terms.items()):
            acc = acc + BiPoly.constant(t, c.embed(t)) * pw(cu, pu, du) * pw(cv, pv, dv)
        return acc

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Divide by a known divisor; raises NotDivisible otherwise."""
        a, b = self._pair(other)
        if b.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if b.is_constant():
            inv = b.constant_value().inverse()
            return BiPoly(a.tower, {k: c * inv for k, c in a._terms.items()})
        if a.is_zero():
            return a
        main = "u" if b.degree("u") > 0 else "v"
        other_var = "v" if main == "u" else "u"
        da = _dense_main(a, main)
        db = _dense_main(b, main)
        if len(da) < len(db):
            raise NotDivisible("divisor degree exceeds dividend degree")
        lead = db[-1]
        q = [UniPoly.zero(a.tower, other_var)] * (len(da) - len(db) + 1)
        rem = list(da)
        while len(rem) >= len(db):
            if rem[-1].is_zero():
                rem.pop()
                continue
            k = len(rem) - len(db)
            f = rem[-1].exact_div(lead)
            q[k] = f
            for i in range(len(db)):
                rem[k + i] = rem[k + i] - f * db[i]
            rem.pop()
        if any(not r.is_zero() for r in rem):
            raise NotDivisible("bivariate division left a remainder")
        return _from_dense(q, main, a.tower)

    def shift_down(self, var: str, m: int) -> "BiPoly":
        """Divide by var**m, discarding terms of lower degree in var."""
        _check_var(var)
        if not isinstance(m, int) or m < 0:
            raise InvalidInput("shift amount must be a nonnegative integer")
        idx = 0 if var == "u" else 1
        out = {}
        for (du, dv), c in self._terms.items():
            e = (du, dv)[idx]
            if e < m:
                continue
            k = (du - m, dv) if idx == 0 else (du, dv - m)
            out[k] = c
        return BiPoly(self.tower, out)

    def as_unipoly(self, var: str) -> UniPoly:
        _check_var(var)
        other = "v" if var == "u" else "u"
        if self.degree(other) > 0:
            raise InvalidInput(f"polynomial involves {other!r}")
        idx = 0 if var == "u" else 1
        n = self.degree(var)
        out = [self.tower.zero()] * (n + 1)
        for k, c in self._terms.items():
            out[k[idx]] = c
        return UniPoly(self.tower, var, out)

    def embed(self, tower: FieldTower) -> "BiPoly":
        if tower is self.tower:
            return self
        return BiPoly(tower, {k: c.embed(tower) for k, c in self._terms.items()})

    def sort_key(self):
        items = sorted(self._terms.items(), reverse=True)
        return tuple((k, c.sort_key()) for k, c in items)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Rational)):
            other = BiPoly.constant(self.tower, other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.tower is not other.tower:
            try:
                t = common_tower(self.tower, other.tower)
            except FieldMismatch:
                return False
            return self.embed(t)._terms == other.embed(t)._terms
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        items = [((du, dv), c) for (du, dv), c in self._terms.items()]
        items.sort(key=lambda t: t[0], reverse=True)
        return _render_terms(items, ("u", "v"))

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _render_terms(items, varnames) -> str:
    """Shared rendering for UniPoly and BiPoly.

    items: list of (exponent tuple, nonzero FieldElement), already ordered.
    """
    if not items:
        return "0"
    pieces = []
    for exps, c in items:
        mono = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(varnames, exps)
            if e > 0
        )
        sign, body = _render_coeff(c, mono)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign < 0 else "") + first_body
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


def _render_coeff(c: FieldElement, mono: str):
    """Render one term as (sign, body without sign)."""
    terms = c._terms
    if len(terms) > 1:
        body = f"({c})"
        return 1, f"{body}*{mono}" if mono else body
    ((exps, q),) = terms.items()
    sign = -1 if q < 0 else 1
    mag = -q if q < 0 else q
    gen_part = "*".join(
        name if e == 1 else f"{name}^{e}"
        for name, e in zip(c.tower.names(), exps)
        if e > 0
    )
    factors = []
    if mag != 1 or (not gen_part and not mono):
        factors.append(str(mag))
    if gen_part:
        factors.append(gen_part)
    if mono:
        factors.append(mono)
    return sign, "*".join(factors)


def uni_gcd_list(polys) -> UniPoly:
    """Monic gcd of a nonempty list of UniPoly in one shared variable."""
    polys = list(polys)
    if not polys:
        raise InvalidInput("gcd of an empty list")
    g = polys[0]
    for p in polys[1:]:
        if not g.is_zero() and g.is_constant():
            break
        g = g.gcd(p)
    return g.monic()


def _dense_main(f: BiPoly, main: str):
    """Coefficient list of f in the main variable, entries UniPoly in the other."""
    other = "v" if main == "u" else "u"
    idx = 0 if main == "u" else 1
    n = f.degree(main)
    m = f.degree(other)
    rows = [[f.tower.zero()] * (m + 1) for _ in range(n + 1)]
    for (du, dv), c in f._terms.items():
        e = (du, dv)[idx]
        k = (du, dv)[1 - idx]
        rows[e][k] = c
    return [UniPoly(f.tower, other, r) for r in rows]


def _from_dense(coeffs, main: str, tower: FieldTower) -> BiPoly:
    idx = 0 if main == "u" else 1
    out = {}
    for e, p in enumerate(coeffs):
        for k, c in enumerate(p.coeffs):
            key = (e, k) if idx == 0 else (k, e)
            out[key] = c
    return BiPoly(tower, out)


def _trim(cs):
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def _prem(a, b):
    """Pseudo-remainder of dense UniPoly-coefficient lists, lc(b)^(da-db+1) scaling."""
    da = len(a) - 1
    db = len(b) - 1
    lb = b[-1]
    rem = list(a)
    scale = da - db + 1
    while len(rem) - 1 >= db and rem:
        s = rem[-1]
        rem = [lb * c for c in rem]
        shift = len(rem) - 1 - db
        for k in range(db + 1):
            rem[shift + k] = rem[shift + k] - s * b[k]
        _trim(rem)
        scale -= 1
    if scale > 0:
        mult = lb ** scale
        rem = [mult * c for c in rem]
    return rem


def _primitive(coeffs, tower, other):
    """Split a dense coefficient list into (content UniPoly, primitive list)."""
    cont = uni_gcd_list([c for c in coeffs if not c.is_zero()])
    if cont.is_constant():
        return UniPoly.one(tower, other), list(coeffs)
    return cont, [
        c.exact_div(cont) if not c.is_zero() else c for c in coeffs
    ]


def _prs_gcd(a, b, tower, other):
    """Subresultant gcd of primitive dense lists; returns a primitive dense list."""
    if len(a) < len(b):
        a, b = b, a
    g = UniPoly.one(tower, other)
    h = UniPoly.one(tower, other)
    while True:
        delta = (len(a) - 1) - (len(b) - 1)
        rem = _prem(a, b)
        if not rem:
            break
        if len(rem) == 1:
            return [UniPoly.one(tower, other)]
        divisor = g * h ** delta
        a, b = b, [c.exact_div(divisor) for c in rem]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g ** delta).exact_div(h ** (delta - 1))
    return _primitive(b, tower, other)[1]


def _gcd2(f: BiPoly, g: BiPoly) -> BiPoly:
    t = f.tower
    if max(f.degree("v"), g.degree("v")) >= max(f.degree("u"), g.degree("u")):
        main = "v"
    else:
        main = "u"
    other = "v" if main == "u" else "u"
    da = _dense_main(f, main)
    db = _dense_main(g, main)
    cont_a, pa = _primitive(da, t, other)
    cont_b, pb = _primitive(db, t, other)
    cont = cont_a.gcd(cont_b)
    if len(pa) == 1 or len(pb) == 1:
        pg = [UniPoly.one(t, other)]
    else:
        pg = _prs_gcd(pa, pb, t, other)
    result = _from_dense(pg, main, t)
    if not cont.is_constant():
        result = result * BiPoly.from_unipoly(cont, other)
    return result


def gcd_tuple(polys) -> BiPoly:
    """Gcd of a nonempty collection of BiPoly, monic in its lex leading term."""
    polys = list(polys)
    if not polys:
        raise InvalidInput("gcd of an empty collection")
    t = polys[0].tower
    for f in polys[1:]:
        t = common_tower(t, f.tower)
    polys = [f.embed(t) for f in polys]
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise InvalidInput("gcd of all-zero collection")
    g = nonzero[0]
    for f in nonzero[1:]:
        if g.is_constant():
            break
        g = _gcd2(g, f)
    if g.is_constant():
        return BiPoly.one(t)
    return g.monic_lex()


def _bareiss_det(mat, tower, other) -> UniPoly:
    """Determinant of a square matrix of UniPoly via fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return UniPoly.one(tower, other)
    m = [list(row) for row in mat]
    sign = 1
    prev = None
    for k in range(n - 1):
        if m[k][k].is_zero():
            pr = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pr is None:
                return UniPoly.zero(tower, other)
            m[k], m[pr] = m[pr], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if prev is not None else num
            m[i][k] = UniPoly.zero(tower, other)
        prev = piv
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: BiPoly, g: BiPoly, eliminate: str) -> UniPoly:
    """Resultant of f and g with respect to one variable.

    Returns a UniPoly in the remaining variable.  The Sylvester matrix is
    laid out with the block of g-coefficient rows on top.
    """
    _check_var(eliminate)
    t = common_tower(f.tower, g.tower)
    f = f.embed(t)
    g = g.embed(t)
    if f.is_zero() or g.is_zero():
        raise InvalidInput("resultant of the zero polynomial")
    other = "v" if eliminate == "u" else "u"
    n = f.degree(eliminate)
    m = g.degree(eliminate)
    if n == 0 and m == 0:
        raise InvalidInput("neither argument involves the eliminated variable")
    if n == 0:
        return f.as_unipoly(other) ** m
    if m == 0:
        return g.as_unipoly(other) ** n
    fc = _dense_main(f, eliminate)[::-1]
    gc = _dense_main(g, eliminate)[::-1]
    size = n + m
    zero = UniPoly.zero(t, other)
    rows = []
    for i in range(n):
        rows.append([zero] * i + gc + [zero] * (size - (m + 1) - i))
    for i in range(m):
        rows.append([zero] * i + fc + [zero] * (size - (n + 1) - i))
    return _bareiss_det(rows, t, other)


def pullback_blowup(polys, point, chart: str):
    """Pull a collection of BiPoly back through one blowup chart.

    Chart "t" substitutes (v*u + x, v + y), chart "s" substitutes
    (u + x, u*v + y), where (x, y) is the center being blown up.
    """
    if chart not in ("t", "s"):
        raise InvalidInput(f"unknown chart {chart!r}; expected 't' or 's'")
    polys = list(polys)
    if not polys:
        raise InvalidInput("empty collection")
    t = polys[0].tower
    for f in polys[1:]:
        t = common_tower(t, f.tower)
    px, py = point
    for x in (px, py):
        if isinstance(x, FieldElement):
            t = common_tower(t, x.tower)
    if isinstance(px, (int, Rational)):
        px = t.rational(px)
    if isinstance(py, (int, Rational)):
        py = t.rational(py)
    u = BiPoly.variable(t, "u")
    v = BiPoly.variable(t, "v")
    if chart == "t":
        pu = v * u + BiPoly.constant(t, px.embed(t))
        pv = v + BiPoly.constant(t, py.embed(t))
    else:
        pu = u + BiPoly.constant(t, px.embed(t))
        pv = u * v + BiPoly.constant(t, py.embed(t))
    return [f.embed(t).subs_polys(pu, pv) for f in polys]


def exact_div_power(polys, var: str, m: int):
    """Divide each polynomial by var**m, requiring exact divisibility."""
    _check_var(var)
    if not isinstance(m, int) or m < 0:
        raise InvalidInput("power must be a nonnegative integer")
    out = []
    for f in polys:
        if not f.is_zero() and f.min_degree(var) < m:
            raise NotDivisible(f"polynomial is not divisible by {var}^{m}")
        out.append(f.shift_down(var, m))
    return out


def deriv_eval(g: BiPoly, a: int, b: int, point) -> FieldElement:
    """Evaluate the (a, b) mixed partial of g at a point."""
    return g.derivative("u", a).derivative("v", b).eval(point)
