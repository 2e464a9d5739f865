"""Tests for linear series with assigned basepoints."""

import pytest

from linser import _gauss
from linser.baselocus import BasepointNode, BasepointTree, get_basepoints
from linser.errors import InvalidInput, NoAdjoint
from linser.linseries import (
    Bidegree,
    LinearSeries,
    TotalDegree,
    adjoint_series,
    complete_series,
    decremented_tree,
    fits_degree,
    kernel_basis,
    monomial_basis,
    series_through,
    set_basepoints,
    span_contains,
    spans_equal,
)
from linser.numfield import QQ, extend_field
from linser.parsing import parse_bipoly, parse_element


def bp(text, tower=QQ):
    return parse_bipoly(text, tower)


def series(texts, tower=QQ):
    return LinearSeries([bp(s, tower) for s in texts])


QUINTIC_TEXTS = (
    "u^5", "u^4*v", "u^4", "u^3*v^2", "u^3*v", "u^3", "u^2*v^3", "u^2*v^2",
    "u^2*v", "u^2", "u*v^4", "u*v^3", "u*v^2", "u*v", "v^5 - v^2",
    "v^4 - v^2", "v^3 - v^2",
)

CONIC_TEXTS = ("u^2", "u*v", "u", "v^2", "v")


def gaussian():
    return extend_field(QQ, [1, 0, 1], "i")


def conjugate_pair_tree():
    tower, _, _ = gaussian()
    a = (parse_element("i", tower), parse_element("-i", tower))
    b = (parse_element("-i", tower), parse_element("i", tower))
    return BasepointTree((BasepointNode((), a, 1), BasepointNode((), b, 1)), tower)


def test_monomial_basis_orders():
    assert [str(g) for g in monomial_basis(TotalDegree(2))] == [
        "u^2", "u*v", "u", "v^2", "v", "1",
    ]
    assert [str(g) for g in monomial_basis(Bidegree(2, 2))] == [
        "1", "v", "v^2", "u", "u*v", "u*v^2", "u^2", "u^2*v", "u^2*v^2",
    ]
    assert [str(g) for g in monomial_basis(TotalDegree(0))] == ["1"]
    assert len(monomial_basis(TotalDegree(5))) == 21


def test_degree_spec_validation():
    with pytest.raises(InvalidInput):
        TotalDegree(-1)
    with pytest.raises(InvalidInput):
        TotalDegree(True)
    with pytest.raises(InvalidInput):
        Bidegree(1, -2)


def test_fits_degree():
    assert fits_degree(bp("u^2*v"), TotalDegree(3))
    assert not fits_degree(bp("u^2*v"), TotalDegree(2))
    assert fits_degree(bp("u^2*v"), Bidegree(2, 1))
    assert not fits_degree(bp("u^2*v"), Bidegree(1, 1))


def test_linear_series_rejects_dependence():
    with pytest.raises(InvalidInput):
        series(("u", "2*u"))
    with pytest.raises(InvalidInput):
        series(("u + v", "u - v", "u"))


def test_linear_series_basics():
    s = series(CONIC_TEXTS)
    assert len(s) == 5
    assert s.tower == QQ
    empty = LinearSeries([])
    assert len(empty) == 0


def test_constraint_matrix_golden():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    M = set_basepoints(tree, monomial_basis(TotalDegree(2)))
    assert [[str(e) for e in row] for row in M.rows] == [
        ["0", "0", "0", "0", "0", "1"],
        ["0", "0", "0", "0", "1", "0"],
        ["1", "-i", "1", "-1", "-i", "1"],
        ["1", "i", "1", "-1", "i", "1"],
    ]
    assert M.ncols == 6


def test_kernel_golden():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    M = set_basepoints(tree, monomial_basis(TotalDegree(2)))
    K = kernel_basis(M)
    assert [[str(e) for e in vec] for vec in K] == [
        ["1", "0", "0", "1", "0", "0"],
        ["0", "0", "1", "1", "0", "0"],
    ]


def test_kernel_annihilates_matrix():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    M = set_basepoints(tree, monomial_basis(TotalDegree(2)))
    for vec in kernel_basis(M):
        for row in M.rows:
            total = tower.zero()
            for c, x in zip(row, vec):
                total = total + c * x
            assert total.is_zero()


def test_rank_nullity():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    for spec in (TotalDegree(2), TotalDegree(3), Bidegree(2, 2)):
        M = set_basepoints(tree, monomial_basis(spec))
        rank = _gauss.rank([list(r) for r in M.rows])
        assert rank + len(kernel_basis(M)) == M.ncols


def test_series_through_golden():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    S = series_through(tree, monomial_basis(TotalDegree(2)))
    assert spans_equal(S, series(("u^2 + v^2", "u + v^2"), tower))


def test_single_simple_basepoint_row():
    tree = get_basepoints([bp(s) for s in CONIC_TEXTS])
    M = set_basepoints(tree, monomial_basis(TotalDegree(2)))
    assert [[str(e) for e in row] for row in M.rows] == [
        ["0", "0", "0", "0", "0", "1"]
    ]


def test_empty_tree_keeps_everything():
    tree = get_basepoints([bp("1"), bp("u")])
    basis = monomial_basis(TotalDegree(2))
    M = set_basepoints(tree, basis)
    assert M.rows == ()
    assert len(kernel_basis(M)) == 6
    assert spans_equal(series_through(tree, basis), basis)


def test_multiple_rows_per_fat_point():
    tree = get_basepoints([bp("u^2"), bp("u*v"), bp("v^2")])
    assert tree.multiplicities() == [2]
    M = set_basepoints(tree, monomial_basis(TotalDegree(2)))
    # orders (0,0), (0,1), (1,0) in that order
    assert [[str(e) for e in row] for row in M.rows] == [
        ["0", "0", "0", "0", "0", "1"],
        ["0", "0", "0", "0", "1", "0"],
        ["0", "0", "1", "0", "0", "0"],
    ]


def test_conjugate_pair_series():
    gamma = conjugate_pair_tree()
    S = series_through(gamma, series(("1", "v", "u", "u*v")))
    assert spans_equal(S, series(("1 - u*v", "u + v")))


def test_conjugate_pair_bidegree_dimension():
    gamma = conjugate_pair_tree()
    S = series_through(gamma, monomial_basis(Bidegree(2, 2)))
    assert len(S) == 7


def test_series_coefficients_stay_rational_when_possible():
    # the conjugate pair imposes conjugate conditions, so the kernel of the
    # constraint matrix is spanned by vectors with rational entries
    gamma = conjugate_pair_tree()
    S = series_through(gamma, series(("1", "v", "u", "u*v")))
    for g in S:
        for _, c in g.terms().items():
            assert c.is_rational()


def test_complete_series_conic():
    F = series(("u^2 - u*v", "u", "v^2", "v"))
    C = complete_series(F, TotalDegree(2))
    assert spans_equal(C, series(CONIC_TEXTS))
    assert span_contains(C, F)


def test_complete_series_round_trip():
    tower, _, _ = gaussian()
    S = series(("u^2 + v^2", "u + v^2"), tower)
    C = complete_series(S, TotalDegree(2))
    assert spans_equal(C, S)


def test_complete_series_quintic():
    F = series(QUINTIC_TEXTS)
    C = complete_series(F, TotalDegree(5))
    assert len(C) == 17
    assert spans_equal(C, F)


def test_complete_series_degree_zero():
    C = complete_series(series(("1",)), TotalDegree(0))
    assert [str(g) for g in C] == ["1"]


def test_complete_series_fit_validation():
    with pytest.raises(InvalidInput):
        complete_series(series(("u^3", "u")), TotalDegree(2))
    with pytest.raises(InvalidInput):
        complete_series(LinearSeries([]), TotalDegree(2))


def test_adjoint_requires_room():
    F = series(("u^2 - u*v", "u", "v^2", "v"))
    with pytest.raises(NoAdjoint):
        adjoint_series(F, TotalDegree(2))


def test_adjoint_requires_total_degree():
    F = series(("u", "v"))
    with pytest.raises(InvalidInput):
        adjoint_series(F, Bidegree(1, 1))


def test_adjoint_without_basepoints():
    F = series(("u^3 + 1", "v", "u - v"))
    A = adjoint_series(F, TotalDegree(3))
    assert [str(g) for g in A] == ["1"]


def test_adjoint_of_quintic():
    F = series(QUINTIC_TEXTS)
    A = adjoint_series(F, TotalDegree(5))
    assert spans_equal(A, series(CONIC_TEXTS))


def test_decremented_tree():
    tower, _, _ = gaussian()
    tree = get_basepoints([bp("u^2 + v^2", tower), bp("v^2 + u", tower)])
    assert decremented_tree(tree).is_empty()
    scaled = tree.with_multiplicities([3, 2, 1, 1])
    assert decremented_tree(scaled).multiplicities() == [2, 1]


def test_quintic_tree_shape():
    F = series(QUINTIC_TEXTS)
    tree = get_basepoints(list(F.generators))
    assert len(tree.roots) == 2
    pts = {(str(n.point[0]), str(n.point[1])): n.mult for n in tree.roots}
    assert pts == {("0", "0"): 2, ("0", "1"): 1}
    assert tree.node_count() == 2


def test_span_containment():
    big = series(CONIC_TEXTS)
    small = series(("u^2 - u*v", "u", "v^2", "v"))
    assert span_contains(big, small)
    assert not span_contains(small, big)
    assert span_contains(big, LinearSeries([]))
    assert not spans_equal(big, small)
