"""Univariate factorization over the rationals and over field towers.

The rational case reduces to factoring a monic squarefree integer
polynomial: reduce mod a good prime, split with Berlekamp's algorithm,
lift the factors with quadratic Hensel steps past the Mignotte bound,
then recombine subsets by trial division.  The tower case maps the
problem through a primitive element and a squarefree norm down to the
rational case, then pulls factors back with gcds over the tower.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from . import _gauss
from .bipoly import BiPoly, UniPoly, resultant
from .errors import InvalidInput
from .numfield import QQ, FieldElement, FieldTower, Rational, extend_field

# -- dense integer polynomials (lists, low degree first) ----------------------


def _z_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _z_trim(out)


def _z_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _z_trim(out)


def _z_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _z_trim(out)


def _z_mod(a, m):
    return _z_trim([c % m for c in a])


def _balanced(a, m):
    half = m // 2
    return _z_trim([c - m if c > half else c for c in _z_mod(a, m)])


def _z_divmod_monic(a, b, m=None):
    """Divide by a monic divisor, over the integers or mod m."""
    r = list(a)
    if m is not None:
        r = [c % m for c in r]
    _z_trim(r)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        f = r[-1]
        k = len(r) - len(b)
        q[k] = f
        for i, bc in enumerate(b):
            r[k + i] -= f * bc
            if m is not None:
                r[k + i] %= m
        _z_trim(r)
    return _z_trim(q), r


# -- dense polynomials over a prime field --------------------------------------


def _gf_norm(a, p):
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _gf_norm(out, p)


def _gf_divmod(a, b, p):
    a = _gf_norm(a, p)
    b = _gf_norm(b, p)
    if not b:
        raise ZeroDivisionError("gf division by zero")
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        f = r[-1] * inv % p
        k = len(r) - len(b)
        q[k] = f
        for i, bc in enumerate(b):
            r[k + i] = (r[k + i] - f * bc) % p
        while r and r[-1] == 0:
            r.pop()
    return q, r


def _gf_monic(a, p):
    a = _gf_norm(a, p)
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gf_gcd(a, b, p):
    a = _gf_norm(a, p)
    b = _gf_norm(b, p)
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_ext_gcd(a, b, p):
    """(g, s, t) with s*a + t*b == g, g monic."""
    r0, s0, t0 = _gf_norm(a, p), [1], []
    r1, s1, t1 = _gf_norm(b, p), [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_norm(_z_sub(s0, _z_mul(q, s1)), p)
        t0, t1 = t1, _gf_norm(_z_sub(t0, _z_mul(q, t1)), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [c * inv % p for c in r0]
        s0 = [c * inv % p for c in s0]
        t0 = [c * inv % p for c in t0]
    return r0, s0, t0


def _gf_pow_mod(base, e, mod, p):
    result = [1]
    base = _gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_kernel(rows, n, p):
    """Basis of the right kernel of an n-column matrix over F_p."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        if r == len(mat):
            break
        pr = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    basis = []
    for j in range(n):
        if j in pivset:
            continue
        v = [0] * n
        v[j] = 1
        for i, c in enumerate(pivots):
            v[c] = (-mat[i][j]) % p
        basis.append(v)
    return basis


# -- primes ---------------------------------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def _choose_prime(g):
    """Smallest prime at least 5 where g stays squarefree after reduction."""
    deriv = _z_trim([k * c for k, c in enumerate(g)][1:])
    p = 5
    while True:
        if _is_prime(p):
            gp = _gf_norm(g, p)
            dp = _gf_norm(deriv, p)
            if len(gp) == len(g) and dp and len(_gf_gcd(gp, dp, p)) == 1:
                return p
        p += 1


# -- Berlekamp over F_p ----------------------------------------------------------


def _berlekamp(g, p):
    """Monic irreducible factors of a monic squarefree g over F_p."""
    n = len(g) - 1
    if n <= 1:
        return [g]
    xp = _gf_pow_mod([0, 1], p, g, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(cur + [0] * (n - len(cur)))
        cur = _gf_divmod(_gf_mul(cur, xp, p), g, p)[1]
    mt = [
        [(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)]
        for j in range(n)
    ]
    basis = sorted(_gf_kernel(mt, n, p))
    r = len(basis)
    factors = [g]
    if r == 1:
        return factors
    for v in basis:
        if len(factors) == r:
            break
        if not any(v[1:]):
            continue
        new = []
        for f in factors:
            if len(f) - 1 == 1:
                new.append(f)
                continue
            rem = f
            pieces = []
            for s in range(p):
                if len(rem) - 1 <= 0:
                    break
                vs = list(v)
                vs[0] = (vs[0] - s) % p
                w = _gf_gcd(rem, _gf_norm(vs, p), p)
                dw = len(w) - 1
                if dw == len(rem) - 1:
                    break
                if dw > 0:
                    pieces.append(w)
                    rem = _gf_divmod(rem, w, p)[0]
            if len(rem) - 1 > 0:
                pieces.append(_gf_monic(rem, p))
            new.extend(pieces if pieces else [f])
        factors = sorted(new, key=lambda f: (len(f), tuple(f)))
    return factors


# -- Hensel lifting ----------------------------------------------------------------


def _hensel_step(f, g, h, s, t, m):
    """One quadratic lift: from mod m to mod m*m.

    Requires f == g*h and s*g + t*h == 1 mod m, with g and h monic.
    """
    m2 = m * m
    e = _z_mod(_z_sub(f, _z_mul(g, h)), m2)
    q, r = _z_divmod_monic(_z_mul(s, e), h, m2)
    g1 = _z_mod(_z_add(_z_add(g, _z_mul(t, e)), _z_mul(q, g)), m2)
    h1 = _z_mod(_z_add(h, r), m2)
    b = _z_mod(_z_sub(_z_add(_z_mul(s, g1), _z_mul(t, h1)), [1]), m2)
    c, d = _z_divmod_monic(_z_mul(s, b), h1, m2)
    s1 = _z_mod(_z_sub(s, d), m2)
    t1 = _z_mod(_z_sub(_z_sub(t, _z_mul(t, b)), _z_mul(c, g1)), m2)
    return g1, h1, s1, t1


def _lift_split(f, facs, p, target):
    """Lift a mod-p factorization of f up to a modulus of at least target."""
    if len(facs) == 1:
        return [f]
    mid = len(facs) // 2
    a = [1]
    for fac in facs[:mid]:
        a = _gf_mul(a, fac, p)
    b = [1]
    for fac in facs[mid:]:
        b = _gf_mul(b, fac, p)
    _, s, t = _gf_ext_gcd(a, b, p)
    m = p
    while m < target:
        a, b, s, t = _hensel_step(f, a, b, s, t, m)
        m = m * m
    return _lift_split(a, facs[:mid], p, target) + _lift_split(b, facs[mid:], p, target)


def _factor_int_monic_squarefree(g):
    """Monic irreducible integer factors of a monic squarefree integer poly."""
    n = len(g) - 1
    if n <= 1:
        return [g]
    p = _choose_prime(g)
    modfacs = _berlekamp(_gf_norm(g, p), p)
    modfacs.sort(key=lambda f: (len(f), tuple(f)))
    if len(modfacs) == 1:
        return [g]
    norm2 = math.isqrt(sum(c * c for c in g)) + 1
    bound = 2 * (2 ** n) * norm2
    target = p
    while target <= bound:
        target = target * target
    lifted = _lift_split(_z_mod(g, target), modfacs, p, target)
    out = []
    h = list(g)
    idx = list(range(len(lifted)))
    size = 1
    while 2 * size <= len(idx):
        hit = False
        for combo in itertools.combinations(idx, size):
            cand = [1]
            for i in combo:
                cand = _z_mul(cand, lifted[i])
            cand = _balanced(cand, target)
            if not cand or cand[-1] != 1:
                continue
            q, r = _z_divmod_monic(h, cand)
            if not r:
                out.append(cand)
                h = q
                for i in combo:
                    idx.remove(i)
                hit = True
                break
        if not hit:
            size += 1
    if len(h) > 1:
        out.append(h)
    return out


# -- rational and tower factorization ----------------------------------------------


def _rational_coeffs(f: UniPoly):
    return [c.as_rational() for c in f.coeffs]


def _factor_rational_squarefree(f: UniPoly):
    """Monic irreducible factors of a monic squarefree UniPoly over QQ."""
    if f.degree() <= 1:
        return [f]
    coeffs = _rational_coeffs(f)
    b = 1
    for c in coeffs:
        b = b * c.denominator // math.gcd(b, c.denominator)
    n = len(coeffs) - 1
    g = [int(coeffs[i] * b ** (n - i)) for i in range(n + 1)]
    parts = _factor_int_monic_squarefree(g)
    out = []
    for part in parts:
        d = len(part) - 1
        cs = [Rational(part[i], b ** (d - i)) for i in range(d + 1)]
        out.append(UniPoly(f.tower, f.var, cs))
    return out


_SHIFT_LIMIT = 400


def _shifts():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


@lru_cache(maxsize=None)
def _tower_data(tower: FieldTower):
    """Primitive element data: (gamma, minpoly coeffs over QQ, P inverse, basis)."""
    gens = tower._gens
    basis = list(itertools.product(*[range(g.degree) for g in gens]))
    index = {e: i for i, e in enumerate(basis)}
    dim = len(basis)

    def coords(x: FieldElement):
        vec = [Rational(0)] * dim
        for e, c in x._terms.items():
            vec[index[e]] = c
        return vec

    def minpoly_of(elem: FieldElement):
        rows = [coords(tower.one())]
        power = tower.one()
        for k in range(1, dim + 1):
            power = power * elem
            target = coords(power)
            aug = [
                [rows[i][j] for i in range(len(rows))] + [target[j]]
                for j in range(dim)
            ]
            reduced, pivots = _gauss.rref(aug)
            if len(rows) not in pivots:
                if pivots != list(range(len(rows))):
                    return None
                sol = [reduced[i][len(rows)] for i in range(len(rows))]
                return [-c for c in sol] + [Rational(1)]
            rows.append(target)
        return None

    gamma = tower.gen(0)
    expected = gens[0].degree
    for j in range(1, len(gens)):
        expected *= gens[j].degree
        for c in _shifts():
            cand = tower.gen(j) + c * gamma
            mp = minpoly_of(cand)
            if mp is not None and len(mp) - 1 == expected:
                gamma = cand
                break
        else:
            raise InvalidInput("no primitive element found")
    minpoly = minpoly_of(gamma)
    if minpoly is None or len(minpoly) - 1 != dim:
        raise InvalidInput("primitive element search failed")

    pmat = []
    power = tower.one()
    for i in range(dim):
        pmat.append(coords(power))
        power = power * gamma
    aug = [row + [Rational(int(i == j)) for j in range(dim)] for i, row in enumerate(pmat)]
    reduced, pivots = _gauss.rref(aug)
    if pivots != list(range(dim)):
        raise InvalidInput("primitive element powers are dependent")
    pinv = [row[dim:] for row in reduced]

    def express(x: FieldElement):
        vec = coords(x)
        return [
            sum(vec[j] * pinv[j][k] for j in range(dim))
            for k in range(dim)
        ]

    return gamma, tuple(minpoly), pinv, index, express


def _factor_tower_squarefree(f: UniPoly):
    """Monic irreducible factors of a monic squarefree UniPoly over a tower."""
    tower = f.tower
    if f.degree() <= 1:
        return [f]
    gamma, minpoly, _, _, express = _tower_data(tower)
    dim = len(minpoly) - 1

    fhat_terms = {}
    for k, c in enumerate(f.coeffs):
        for i, q in enumerate(express(c)):
            if q:
                fhat_terms[(k, i)] = q
    fhat = BiPoly(QQ, fhat_terms)
    mv = BiPoly(QQ, {(0, i): q for i, q in enumerate(minpoly) if q})

    u = BiPoly.variable(QQ, "u")
    v = BiPoly.variable(QQ, "v")
    for tries, s in enumerate(_shifts()):
        if tries >= _SHIFT_LIMIT:
            break
        shifted = fhat.subs_polys(u - s * v, v)
        norm = resultant(mv, shifted, "v").monic()
        if norm.gcd(norm.derivative()).degree() != 0:
            continue
        nfacs = _factor_rational_squarefree(norm)
        if len(nfacs) == 1:
            return [f.monic()]
        sgamma = tower.rational(s) * gamma
        shift_poly = UniPoly(tower, f.var, [sgamma, tower.one()])
        out = []
        for nf in nfacs:
            base = UniPoly(tower, f.var, [c.as_rational() for c in nf.coeffs])
            g = f.gcd(base.compose(shift_poly))
            if g.degree() > 0:
                out.append(g)
        if sum(g.degree() for g in out) == f.degree():
            out.sort(key=UniPoly.sort_key)
            return out
    raise InvalidInput(f"norm stayed degenerate while factoring {f}")


def squarefree_decomposition(f: UniPoly):
    """Pairwise coprime squarefree parts with multiplicities, by Yun's method."""
    f = f.monic()
    if f.degree() <= 0:
        return []
    if f.degree() == 1:
        return [(f, 1)]
    d = f.derivative()
    a = f.gcd(d)
    b = f.exact_div(a)
    c = d.exact_div(a)
    rest = c - b.derivative()
    out = []
    i = 1
    while not b.is_constant():
        g = b.gcd(rest)
        if g.degree() > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = rest.exact_div(g)
        rest = c - b.derivative()
        i += 1
    return out


def squarefree_part(f: UniPoly) -> UniPoly:
    """The monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise InvalidInput("squarefree part of zero")
    if f.degree() <= 0:
        return UniPoly.one(f.tower, f.var)
    return f.monic().exact_div(f.gcd(f.derivative())).monic()


def factor_univariate(f: UniPoly, tower: FieldTower | None = None):
    """Factor into monic irreducibles: a sorted list of (factor, multiplicity).

    The leading coefficient is dropped, so the product of the factors is
    the monic normalization of the input.
    """
    if tower is not None:
        f = f.embed(tower)
    if f.is_zero():
        raise InvalidInput("cannot factor the zero polynomial")
    if f.degree() == 0:
        return []
    out = []
    for part, mult in squarefree_decomposition(f):
        if part.tower.width == 0:
            irs = _factor_rational_squarefree(part)
        else:
            irs = _factor_tower_squarefree(part)
        out.extend((g.monic(), mult) for g in irs)
    out.sort(key=lambda pair: pair[0].sort_key())
    return out


def adjoin_roots(f: UniPoly, tower: FieldTower | None = None):
    """All roots of f, adjoining new generators until every factor is linear.

    Returns (roots, final tower): the roots are distinct elements of the
    final tower, sorted, and the final tower extends the starting one by
    one fresh generator per irreducible factor that had to be split.
    """
    t = tower if tower is not None else f.tower
    if not t.extends(f.tower):
        t = f.tower if f.tower.extends(t) else None
        if t is None:
            raise InvalidInput("tower does not match the polynomial")
    if f.is_zero():
        raise InvalidInput("every value is a root of the zero polynomial")
    roots: list[FieldElement] = []
    work = [f.embed(t)]
    while work:
        g = work.pop(0).embed(t)
        if g.degree() <= 0:
            continue
        nonlinear = []
        for fac, _ in factor_univariate(g):
            if fac.degree() == 1:
                root = -fac.coeffs[0]
                if all(root != r for r in roots):
                    roots.append(root)
            else:
                nonlinear.append(fac)
        if nonlinear:
            t, _, _ = extend_field(t, nonlinear[0])
            roots = [r.embed(t) for r in roots]
            work = [h.embed(t) for h in nonlinear] + work
    roots.sort(key=FieldElement.sort_key)
    return roots, t
