"""Faces of the group cone C(Z_m): hyperplane matrices, position of a
point relative to a face, and searching a face for numerical semigroups.

Points are handled in Apery (group-cone) coordinates a_1, ..., a_{m-1};
Kunz tuples are converted on the way in.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .common import DimensionError
from .exactmath import IntMatrix, rank, rowspan_contains, rref
from .semigroup import AperyTuple, KunzTuple, NumericalSemigroup, apery, semigroup_of_apery


def facet_pairs(m: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i <= j, of the facets x_i + x_j >= x_{i+j} of C(Z_m)."""
    return [(i, j) for i in range(1, m) for j in range(i, m) if (i + j) % m]


def facet_form(m: int, i: int, j: int) -> tuple[int, ...]:
    v = [0] * (m - 1)
    v[i - 1] += 1
    v[j - 1] += 1
    v[(i + j) % m - 1] -= 1
    return tuple(v)


def tight_facets(m: int, a: Sequence[int]) -> list[tuple[int, int]]:
    """Facets containing the point whose full Apery vector (a_0 = 0 first) is ``a``."""
    return [(i, j) for i, j in facet_pairs(m) if a[i] + a[j] == a[(i + j) % m]]


@dataclass(frozen=True)
class Face:
    m: int
    equalities: IntMatrix

    @classmethod
    def from_rows(cls, m: int, rows) -> "Face":
        return cls(m, IntMatrix(rows, labels=range(1, m), ncols=m - 1))

    @classmethod
    def from_json(cls, obj) -> "Face":
        if isinstance(obj, str):
            obj = json.loads(obj)
        rows = obj.get("equalities", obj.get("hyperplanes"))
        if rows is None:
            return face_of_semigroup(NumericalSemigroup.from_json(obj))
        return cls.from_rows(int(obj["m"]), rows)

    def to_json(self) -> dict:
        return {"m": self.m, "equalities": self.equalities.tolist()}

    @property
    def dimension(self) -> int:
        return self.m - 1 - rank(self.equalities)


def face_of_apery(a: AperyTuple) -> Face:
    return Face.from_rows(a.m, [facet_form(a.m, i, j) for i, j in tight_facets(a.m, a.full)])


def face_of_semigroup(S: NumericalSemigroup) -> Face:
    return face_of_apery(apery(S))


class FacePosition(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OFF = "off"


def on_face(F: Face, x) -> FacePosition:
    """Where a point sits relative to F.

    INTERIOR: every row of F vanishes and every facet form outside the row
    span of F is strictly positive.  BOUNDARY: the rows vanish but some
    other facet form vanishes too.  OFF: anything else.
    """
    if isinstance(x, KunzTuple):
        x = x.to_apery()
    vals = tuple(x.values) if isinstance(x, AperyTuple) else tuple(x)
    m = F.m
    if len(vals) != m - 1:
        raise DimensionError(f"point has {len(vals)} coordinates, face lives in dimension {m - 1}")
    for row in F.equalities.rows:
        if sum(r * v for r, v in zip(row, vals)):
            return FacePosition.OFF
    position = FacePosition.INTERIOR
    for i, j in facet_pairs(m):
        f = facet_form(m, i, j)
        val = sum(c * v for c, v in zip(f, vals))
        if val < 0:
            return FacePosition.OFF
        if val == 0 and not rowspan_contains(F.equalities, f):
            position = FacePosition.BOUNDARY
    return position


class Verdict(enum.Enum):
    FOUND = "found"
    PROVABLY_NONE = "provably_none"
    NONE_WITHIN_BOUND = "none_within_bound"


@dataclass(frozen=True)
class FaceSearchResult:
    verdict: Verdict
    semigroup: NumericalSemigroup | None = None
    witness: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.semigroup is not None:
            out["generators"] = list(self.semigroup.generators)
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def obstruction(F: Face) -> tuple[int, ...] | None:
    """A vector in the row span of F that rules out numerical semigroups, if any.

    Either e_h (the Kunz subgroup is nontrivial) or e_i - e_j (forces two
    Apery coordinates of different residues to agree).
    """
    m = F.m
    H = F.equalities
    for h in range(1, m):
        e = tuple(int(c == h) for c in range(1, m))
        if rowspan_contains(H, e):
            return e
    for j in range(m - 1, 0, -1):
        for i in range(j - 1, 0, -1):
            v = tuple(int(c == i) - int(c == j) for c in range(1, m))
            if rowspan_contains(H, v):
                return v
    return None


def _shells(d: int, bound: int):
    """Tuples in [1, bound]^d by increasing max entry, lexicographic within a shell."""
    for s in range(1, bound + 1):
        for t in product(range(1, s + 1), repeat=d):
            if max(t) == s:
                yield t


def find_semigroup_on_face(F: Face, bound: int = 6) -> FaceSearchResult:
    """Look for a numerical semigroup of multiplicity m in the relative interior of F.

    The face is parametrized by the free columns of the reduced echelon
    form of its equalities; free Kunz coordinates range over 1..bound.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    w = obstruction(F)
    if w is not None:
        return FaceSearchResult(Verdict.PROVABLY_NONE, witness=w)
    m = F.m
    n = m - 1
    if F.equalities.nrows:
        R, pivots = rref(F.equalities)
    else:
        R, pivots = [], []
    free = [c for c in range(n) if c not in set(pivots)]
    for t in _shells(len(free), bound):
        a: list = [None] * n
        for c, tc in zip(free, t):
            a[c] = m * tc + c + 1
        ok = True
        for row, p in zip(R, pivots):
            val = -sum((row[c] * a[c] for c in free), Fraction(0))
            if val.denominator != 1 or val <= m or int(val) % m != p + 1:
                ok = False
                break
            a[p] = int(val)
        if not ok:
            continue
        point = AperyTuple(m, tuple(a))
        if on_face(F, point) is FacePosition.INTERIOR:
            return FaceSearchResult(Verdict.FOUND, semigroup=semigroup_of_apery(point))
    return FaceSearchResult(Verdict.NONE_WITHIN_BOUND)
