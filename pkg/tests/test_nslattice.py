"""Tests for divisor class arithmetic on blown-up planes and quadrics."""

import pytest

from linser.baselocus import BasepointNode, BasepointTree, get_basepoints
from linser.errors import BasisMismatch, ConjugationUnavailable, InvalidInput
from linser.linseries import Bidegree, LinearSeries, TotalDegree, decremented_tree
from linser.nslattice import (
    NSClass,
    adjoint_class,
    arithmetic_genus,
    class_from_json,
    class_of_series,
    class_to_json,
    degree_of_surface,
    h0_of_class,
    intersect,
    involution_image,
    sectional_genus,
)
from linser.numfield import QQ, extend_field
from linser.parsing import parse_bipoly, parse_element

CONIC_TEXTS = ("u^2", "u*v", "u", "v^2", "v")

QUINTIC_TEXTS = (
    "u^5", "u^4*v", "u^4", "u^3*v^2", "u^3*v", "u^3", "u^2*v^3", "u^2*v^2",
    "u^2*v", "u^2", "u*v^4", "u*v^3", "u*v^2", "u*v", "v^5 - v^2",
    "v^4 - v^2", "v^3 - v^2",
)


def series(texts, tower=QQ):
    return [parse_bipoly(s, tower) for s in texts]


def conic_context():
    tree = get_basepoints(series(CONIC_TEXTS))
    return tree, class_of_series(tree, TotalDegree(2))


def quintic_context():
    tree = get_basepoints(series(QUINTIC_TEXTS))
    return tree, class_of_series(tree, TotalDegree(5))


def product_context():
    tower, _, _ = extend_field(QQ, [1, 0, 1], "i")
    a = (parse_element("i", tower), parse_element("-i", tower))
    b = (parse_element("-i", tower), parse_element("i", tower))
    gamma = BasepointTree(
        (BasepointNode((), a, 1), BasepointNode((), b, 1)), tower
    )
    return gamma, class_of_series(gamma, Bidegree(2, 2))


def test_class_validation():
    with pytest.raises(InvalidInput):
        NSClass("type1", ())
    with pytest.raises(InvalidInput):
        NSClass("type2", (1,))
    with pytest.raises(InvalidInput):
        NSClass("type3", (1, 2))
    with pytest.raises(InvalidInput):
        NSClass("type1", (1, True))


def test_class_rendering():
    assert str(NSClass("type1", (5, -2, -1))) == "5*e0 - 2*e1 - e2"
    assert str(NSClass("type1", (0, 1))) == "e1"
    assert str(NSClass("type1", (-1, 0))) == "-e0"
    assert str(NSClass("type2", (2, 2, -1, -1))) == "2*l0 + 2*l1 - e1 - e2"
    assert str(NSClass("type2", (0, 0))) == "0"


def test_class_arithmetic():
    a = NSClass("type1", (2, -1))
    b = NSClass("type1", (1, 1))
    assert a + b == NSClass("type1", (3, 0))
    assert a - b == NSClass("type1", (1, -2))
    assert -a == NSClass("type1", (-2, 1))
    with pytest.raises(BasisMismatch):
        a + NSClass("type2", (1, 1))


def test_intersection_goldens():
    h = NSClass("type1", (2, -1))
    assert intersect(h, h) == 3
    assert intersect(NSClass("type1", (1, 0)), NSClass("type1", (0, 1))) == 0
    hs = NSClass("type2", (2, 2, -1, -1))
    assert intersect(hs, hs) == 6
    with pytest.raises(BasisMismatch):
        intersect(h, hs)


def test_intersection_bilinear():
    a = NSClass("type1", (2, -1, 3))
    b = NSClass("type1", (1, 1, -2))
    c = NSClass("type1", (0, 2, 1))
    assert intersect(a + b, c) == intersect(a, c) + intersect(b, c)
    assert intersect(a, b) == intersect(b, a)


def test_gram_determinant_type1():
    basis = [NSClass("type1", tuple(int(i == j) for j in range(4))) for i in range(4)]
    gram = [[intersect(x, y) for y in basis] for x in basis]
    assert gram == [
        [1, 0, 0, 0],
        [0, -1, 0, 0],
        [0, 0, -1, 0],
        [0, 0, 0, -1],
    ]


def test_gram_determinant_type2():
    basis = [NSClass("type2", tuple(int(i == j) for j in range(4))) for i in range(4)]
    gram = [[intersect(x, y) for y in basis] for x in basis]
    assert gram == [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, -1, 0],
        [0, 0, 0, -1],
    ]


def test_conic_invariants():
    tree, (h, k, ctx) = conic_context()
    assert h == NSClass("type1", (2, -1))
    assert k == NSClass("type1", (-3, 1))
    assert degree_of_surface(ctx) == 3
    assert intersect(h, k) == -5
    assert sectional_genus(ctx) == 0
    assert arithmetic_genus(ctx, 5) == 0
    assert adjoint_class(ctx) == NSClass("type1", (-1, 0))
    assert ctx.involution == (0,)


def test_quintic_invariants():
    tree, (h, k, ctx) = quintic_context()
    assert h.coeffs[0] == 5
    assert sorted(h.coeffs[1:]) == [-2, -1]
    assert k == NSClass("type1", (-3, 1, 1))
    assert degree_of_surface(ctx) == 20
    assert intersect(h, k) == -12
    assert sectional_genus(ctx) == 5
    assert arithmetic_genus(ctx, 17) == 0


def test_adjoint_class_matches_decremented_tree():
    tree, (h, k, ctx) = quintic_context()
    adj = adjoint_class(ctx)
    assert adj.coeffs[0] == 2
    assert sorted(adj.coeffs[1:]) == [-1, 0]
    decr = decremented_tree(tree)
    h2, _, _ = class_of_series(decr, TotalDegree(2))
    nonzero = tuple(x for x in adj.coeffs[1:] if x)
    assert (adj.coeffs[0],) + nonzero == h2.coeffs


def test_product_surface_context():
    gamma, (h, k, ctx) = product_context()
    assert h == NSClass("type2", (2, 2, -1, -1))
    assert k == NSClass("type2", (-2, -2, 1, 1))
    assert (h + k).coeffs == (0, 0, 0, 0)
    assert degree_of_surface(ctx) == 6
    assert ctx.involution == (1, 0)


def test_involution_swaps_conjugate_points():
    gamma, (h, k, ctx) = product_context()
    eps1 = NSClass("type2", (0, 0, 1, 0))
    eps2 = NSClass("type2", (0, 0, 0, 1))
    assert involution_image(ctx, eps1) == eps2
    assert involution_image(ctx, eps2) == eps1
    assert involution_image(ctx, h) == h
    # applying it twice is the identity
    for c in (eps1, eps2, h, k, h - eps1):
        assert involution_image(ctx, involution_image(ctx, c)) == c


def test_involution_unknown_for_unpaired_points():
    tower, _, _ = extend_field(QQ, [1, 0, 1], "i")
    a = (parse_element("i", tower), parse_element("-i", tower))
    lone = BasepointTree((BasepointNode((), a, 1),), tower)
    _, _, ctx = class_of_series(lone, Bidegree(1, 1))
    assert ctx.involution is None
    with pytest.raises(ConjugationUnavailable):
        involution_image(ctx, NSClass("type2", (1, 1, 0)))


def test_involution_identity_over_rationals():
    tree, (_, _, ctx) = conic_context()
    assert ctx.involution == (0,)
    e1 = NSClass("type1", (0, 1))
    assert involution_image(ctx, e1) == e1


def test_empty_tree_contexts():
    empty = BasepointTree((), QQ)
    h, k, ctx = class_of_series(empty, Bidegree(1, 1))
    assert h == NSClass("type2", (1, 1))
    assert k == NSClass("type2", (-2, -2))
    assert ctx.involution == ()
    h1, k1, _ = class_of_series(empty, TotalDegree(4))
    assert h1 == NSClass("type1", (4,))
    assert k1 == NSClass("type1", (-3,))


def test_arithmetic_genus_needs_a_section():
    _, (_, _, ctx) = conic_context()
    with pytest.raises(InvalidInput):
        arithmetic_genus(ctx, 0)
    with pytest.raises(InvalidInput):
        arithmetic_genus(ctx, "5")


def test_h0_on_blown_up_plane():
    tree, (h, _, _) = conic_context()
    assert h0_of_class(h, tree) == 5
    # a positive coefficient on the exceptional class has no sections
    assert h0_of_class(NSClass("type1", (2, 1)), tree) == 0
    # negative degree has none either
    assert h0_of_class(NSClass("type1", (-1, 0)), tree) == 0
    # ignoring the basepoint frees all six conics
    assert h0_of_class(NSClass("type1", (2, 0)), tree) == 6


def test_h0_on_product():
    gamma, (h, _, _) = product_context()
    assert h0_of_class(h, gamma) == 7
    assert h0_of_class(NSClass("type2", (1, 1, -1, -1)), gamma) == 2


def test_h0_without_basepoints():
    empty = BasepointTree((), QQ)
    for alpha in range(5):
        expected = (alpha + 1) * (alpha + 2) // 2
        assert h0_of_class(NSClass("type1", (alpha,)), empty) == expected
    assert h0_of_class(NSClass("type1", (-1,)), empty) == 0


def test_h0_rank_mismatch():
    tree, _ = conic_context()
    with pytest.raises(InvalidInput):
        h0_of_class(NSClass("type1", (2, -1, -1)), tree)


def test_h0_quintic():
    tree, (h, _, _) = quintic_context()
    assert h0_of_class(h, tree) == 17


def test_riemann_roch_on_goldens():
    for tree, (h, k, ctx) in (conic_context(), quintic_context(), product_context()):
        rr = (intersect(h, h) - intersect(h, k)) // 2 + 1
        assert h0_of_class(h, tree) == rr


def test_class_json_round_trip():
    h = NSClass("type1", (5, -2, -1))
    doc = class_to_json(h)
    assert doc == {"basis": "type1", "coeffs": [5, -2, -1]}
    assert class_from_json(doc) == h
    with pytest.raises(InvalidInput):
        class_from_json({"basis": "type1"})
    with pytest.raises(InvalidInput):
        class_from_json({"basis": "type1", "coeffs": [1, 0.5]})
