from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import H6, H8
from kunzkit.common import DimensionError
from kunzkit.exactmath import IntMatrix, bareiss_echelon, kernel_basis, matvec, rank, rowspan_contains, rref

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_rows=8, max_cols=8):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(small_ints, min_size=c, max_size=c)) for _ in range(r)]


def test_rank_examples():
    assert rank(H8) == 5
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rank(IntMatrix([[0] * 4, [0] * 4])) == 0
    assert rank(IntMatrix([], ncols=3)) == 0


def test_rowspan_examples():
    assert not rowspan_contains([[1, 0]], [0, 1])
    assert rowspan_contains([[1, 0], [0, 1]], [1, 1])
    assert rowspan_contains(H6, [0, 1, 1, 0, -1])
    with pytest.raises(DimensionError):
        rowspan_contains([[1, 0]], [1, 0, 0])


def test_kernel_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    assert kernel_basis([[1, -1]]) == [(1, 1)]
    basis = kernel_basis(H8)
    assert len(basis) == 2
    for v in basis:
        assert matvec(H8, v) == [0] * len(H8)


def test_labels():
    M = IntMatrix([[2, 0, 0, -2], [3, -1, -1, 0]], labels=[3, 4, 5, 7])
    assert M.entry(1, 4) == -1
    assert M.shape == (2, 4)
    assert M.with_row([1, 1, 1, 1]).nrows == 3


def test_bareiss_is_integral_echelon():
    rows, pivots = bareiss_echelon(H8)
    assert len(pivots) == 5
    assert pivots == sorted(pivots)
    for r in rows:
        assert all(isinstance(x, int) for x in r)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_sympy(M):
    assert rank(M) == sympy.Matrix(M).rank()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    basis = kernel_basis(M)
    assert rank(M) + len(basis) == len(M[0])
    for v in basis:
        assert matvec(M, v) == [0] * len(M)
    if basis:
        assert rank(basis) == len(basis)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.lists(small_ints, min_size=8, max_size=8))
def test_rowspan_contains_combinations(M, coeffs):
    c = len(M[0])
    v = [sum(k * row[j] for k, row in zip(coeffs, M)) for j in range(c)]
    assert rowspan_contains(M, v)
    assert rowspan_contains(M, v) == (rank(M + [v]) == rank(M))


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_matches_sympy(M):
    R, pivots = rref(M)
    S, spiv = sympy.Matrix(M).rref()
    assert tuple(pivots) == spiv
    for i, row in enumerate(R[: len(pivots)]):
        assert [Fraction(int(x.p), int(x.q)) for x in S.row(i)] == row
