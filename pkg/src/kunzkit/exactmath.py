"""Exact integer and rational linear algebra.

Everything here works on Python integers (arbitrary precision) or
``fractions.Fraction``; nothing is ever converted to floating point.
Pivoting is deterministic: the first nonzero entry, scanning columns left
to right and rows top to bottom.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Sequence

from .common import DimensionError


class IntMatrix:
    """An immutable rectangular integer matrix with labelled columns."""

    __slots__ = ("rows", "labels", "_col")

    def __init__(self, rows: Iterable[Sequence[int]], labels: Sequence[Hashable] | None = None,
                 ncols: int | None = None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if labels is None:
            if ncols is None:
                if not rows:
                    raise DimensionError("column count of an empty matrix is ambiguous; pass ncols or labels")
                ncols = len(rows[0])
            labels = tuple(range(ncols))
        labels = tuple(labels)
        if ncols is not None and ncols != len(labels):
            raise DimensionError(f"ncols={ncols} does not match {len(labels)} labels")
        if len(set(labels)) != len(labels):
            raise DimensionError("column labels must be unique")
        for r in rows:
            if len(r) != len(labels):
                raise DimensionError(f"row of length {len(r)} in a matrix with {len(labels)} columns")
        self.rows = rows
        self.labels = labels
        self._col = {lab: j for j, lab in enumerate(labels)}

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.labels)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, row: int, label: Hashable) -> int:
        return self.rows[row][self._col[label]]

    def column_index(self, label: Hashable) -> int:
        return self._col[label]

    def with_row(self, v: Sequence[int]) -> "IntMatrix":
        return IntMatrix(self.rows + (tuple(v),), self.labels)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows and self.labels == other.labels

    def __hash__(self):
        return hash((self.rows, self.labels))

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r}, labels={list(self.labels)!r})"


def _as_matrix(M) -> IntMatrix:
    return M if isinstance(M, IntMatrix) else IntMatrix(M)


def bareiss_echelon(M) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns (echelon rows, pivot columns).

    Each step divides exactly by the previous pivot, so every intermediate
    entry is an integer (a minor of the input).
    """
    M = _as_matrix(M)
    a = [list(r) for r in M.rows]
    nrows, ncols = M.nrows, M.ncols
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        # columns of skipped pivots (left of c) in rows below are already zero
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(M) -> int:
    """Rank over the rationals."""
    M = _as_matrix(M)
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return len(bareiss_echelon(M)[1])


def rowspan_contains(M, v: Sequence[int]) -> bool:
    """True iff ``v`` is a rational linear combination of the rows of ``M``."""
    M = _as_matrix(M)
    if len(v) != M.ncols:
        raise DimensionError(f"vector of length {len(v)} against a matrix with {M.ncols} columns")
    if not any(v):
        return True
    return rank(M.with_row(v)) == rank(M)


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals, zero rows dropped."""
    M = _as_matrix(M)
    echelon, pivots = bareiss_echelon(M)
    rows = [[Fraction(x) for x in echelon[i]] for i in range(len(pivots))]
    for i, c in enumerate(pivots):
        inv = 1 / rows[i][c]
        rows[i] = [x * inv for x in rows[i]]
        for k in range(len(rows)):
            if k != i and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
    return rows, pivots


def primitive(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def kernel_basis(M) -> list[tuple[int, ...]]:
    """Primitive integer basis of the rational null space of ``M``.

    One vector per free column of the reduced echelon form, in column
    order; the free coordinate of each vector is positive.
    """
    M = _as_matrix(M)
    n = M.ncols
    if M.nrows == 0:
        return [tuple(int(i == j) for i in range(n)) for j in range(n)]
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(primitive(v))
    return basis


def matvec(M, v: Sequence) -> list:
    M = _as_matrix(M)
    if len(v) != M.ncols:
        raise DimensionError(f"vector of length {len(v)} against a matrix with {M.ncols} columns")
    return [sum(a * b for a, b in zip(r, v)) for r in M.rows]
