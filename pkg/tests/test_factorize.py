"""Tests for univariate factorization over the rationals and their extensions."""

import random
from fractions import Fraction

import pytest

from linser.bipoly import UniPoly
from linser.errors import InvalidInput
from linser.factorize import (
    adjoin_roots,
    factor_univariate,
    squarefree_decomposition,
    squarefree_part,
)
from linser.numfield import QQ, extend_field
from linser.parsing import parse_unipoly


def up(text, tower=QQ):
    return parse_unipoly(text, tower, "t")


def rebuild(f, factors):
    prod = UniPoly.constant(f.tower, "t", f.lc())
    for fac, mult in factors:
        prod = prod * fac ** mult
    return prod


def test_quadratic_split():
    factors = factor_univariate(up("t^2 - 1"))
    assert [(str(f), m) for f, m in factors] == [("t - 1", 1), ("t + 1", 1)]


def test_multiplicities():
    f = up("t - 2") ** 2 * up("t + 1") ** 3 * up("t^2 + 1")
    factors = factor_univariate(f)
    assert [(str(g), m) for g, m in factors] == [
        ("t - 2", 2),
        ("t + 1", 3),
        ("t^2 + 1", 1),
    ]
    assert rebuild(f, factors) == f


def test_irreducible_quartic_stays_whole():
    # Minimal polynomial of sqrt(2) + sqrt(3); it factors modulo every
    # prime, so it exercises the recombination search.
    f = up("t^4 - 10*t^2 + 1")
    factors = factor_univariate(f)
    assert [(str(g), m) for g, m in factors] == [("t^4 - 10*t^2 + 1", 1)]


def test_fractional_coefficients():
    factors = factor_univariate(up("t^2 - 1/4"))
    assert [(str(g), m) for g, m in factors] == [("t - 1/2", 1), ("t + 1/2", 1)]


def test_factor_ordering_is_deterministic():
    f = up("(2*t + 2)*(2*t + 1)")
    factors = factor_univariate(f)
    assert [str(g) for g, _ in factors] == ["t + 1", "t + 1/2"]
    assert rebuild(f, factors) == f


def test_factor_over_gaussian_field():
    tower, _, i = extend_field(QQ, [1, 0, 1], "i")
    factors = factor_univariate(up("t^2 + 1", tower))
    assert [(str(g), m) for g, m in factors] == [("t - i", 1), ("t + i", 1)]


def test_irreducible_over_gaussian_field():
    tower, _, _ = extend_field(QQ, [1, 0, 1], "i")
    factors = factor_univariate(up("t^2 - 2", tower))
    assert [(str(g), m) for g, m in factors] == [("t^2 - 2", 1)]


def test_factor_over_nested_tower():
    tower, _, _ = extend_field(QQ, [1, 0, 1], "i")
    tower2, _, s = extend_field(tower, [-2, 0, 1], "s")
    factors = factor_univariate(up("t^2 - 2", tower2))
    assert [(str(g), m) for g, m in factors] == [("t - s", 1), ("t + s", 1)]
    assert all(g.eval(r).is_zero() for g, r in [(up("t^2 - 2", tower2), s)])


def test_factor_with_repeated_factor_over_extension():
    tower, _, i = extend_field(QQ, [1, 0, 1], "i")
    f = up("(t^2 + 1)^2", tower)
    factors = factor_univariate(f)
    assert [(str(g), m) for g, m in factors] == [("t - i", 2), ("t + i", 2)]
    assert rebuild(f, factors) == f


def test_factor_rejects_zero():
    with pytest.raises(InvalidInput):
        factor_univariate(UniPoly.zero(QQ, "t"))


def test_squarefree_decomposition():
    f = up("t - 2") ** 2 * up("t + 1") ** 3 * up("t^2 + 1")
    parts = squarefree_decomposition(f)
    assert [(str(g), m) for g, m in parts] == [
        ("t^2 + 1", 1),
        ("t - 2", 2),
        ("t + 1", 3),
    ]
    assert rebuild(f, parts) == f


def test_squarefree_part():
    f = up("(t - 1)^3*(t + 2)")
    assert str(squarefree_part(f)) == "t^2 + t - 2"


def test_adjoin_roots_rational():
    roots, tower = adjoin_roots(up("t^2 - 1"))
    assert tower == QQ
    assert sorted(str(r) for r in roots) == ["-1", "1"]


def test_adjoin_roots_single_extension():
    f = up("t^2 + 1")
    roots, tower = adjoin_roots(f)
    assert tower.degree() == 2
    assert len(roots) == 2
    assert roots[0] == -roots[1]
    for r in roots:
        assert f.embed(tower).eval(r).is_zero()


def test_adjoin_roots_two_extensions():
    f = up("(t^2 + 1)*(t^2 - 2)")
    roots, tower = adjoin_roots(f)
    assert tower.degree() == 4
    assert tower.names() == ("a0", "a1")
    assert len(roots) == 4
    g = f.embed(tower)
    for r in roots:
        assert g.eval(r).is_zero()


def _random_monic(rng, tower, max_deg=4):
    deg = rng.randint(1, max_deg)
    coeffs = [
        tower.rational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)))
        for _ in range(deg)
    ]
    return UniPoly(tower, "t", coeffs + [tower.one()])


def test_factor_product_round_trip():
    rng = random.Random(99)
    gaussian, _, _ = extend_field(QQ, [1, 0, 1], "i")
    for k in range(30):
        tower = gaussian if k % 3 == 0 else QQ
        f = _random_monic(rng, tower) * _random_monic(rng, tower)
        factors = factor_univariate(f)
        assert rebuild(f, factors) == f
        for g, _ in factors:
            assert g.lc() == tower.one()
