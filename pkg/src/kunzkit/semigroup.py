"""Numerical semigroups: normalization, Apery sets, Kunz coordinates,
factorizations, and the classical Betti-element computation.

The classical routines here enumerate factorizations element by element.
They are slow compared to the poset route in :mod:`kunzkit.presentation`
and serve as its reference.
"""

from __future__ import annotations

import heapq
import json
import warnings
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .common import (
    DimensionError,
    NotAnElement,
    NotInPolyhedron,
    NotNumerical,
    Trade,
    support_components,
)


class MultiplicityWarning(UserWarning):
    """A Kunz or Apery tuple produced a semigroup of smaller multiplicity."""


def _apery_dijkstra(m: int, steps: Iterable[int]) -> list[int]:
    """Least element of <m, steps> in each class mod m (index = residue)."""
    steps = sorted({s for s in steps if s % m})
    dist: list[int | None] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    done = [False] * m
    while heap:
        d, r = heapq.heappop(heap)
        if done[r]:
            continue
        done[r] = True
        for s in steps:
            t = (r + s) % m
            nd = d + s
            if dist[t] is None or nd < dist[t]:
                dist[t] = nd
                heapq.heappush(heap, (nd, t))
    if any(d is None for d in dist):
        raise NotNumerical("generators have gcd > 1; the semigroup is not cofinite")
    return dist  # type: ignore[return-value]


@dataclass(frozen=True)
class AperyTuple:
    """Apery coordinates (a_1, ..., a_{m-1}) with a_i the least element = i mod m."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.m < 1 or len(self.values) != self.m - 1:
            raise DimensionError(f"an Apery tuple for m={self.m} has {self.m - 1} entries, got {len(self.values)}")

    @property
    def full(self) -> tuple[int, ...]:
        """(0, a_1, ..., a_{m-1}), indexed by residue."""
        return (0,) + self.values

    def as_set(self) -> set[int]:
        return set(self.full)

    def check(self) -> None:
        """Raise NotInPolyhedron unless this is the Apery tuple of a semigroup containing m."""
        m, a = self.m, self.full
        for i in range(1, m):
            if a[i] <= 0 or a[i] % m != i:
                raise NotInPolyhedron(f"a_{i} = {a[i]} is not a positive integer congruent to {i} mod {m}")
        for i in range(1, m):
            for j in range(i, m):
                s = (i + j) % m
                if s and a[i] + a[j] < a[s]:
                    raise NotInPolyhedron(f"a_{i} + a_{j} >= a_{s} fails ({a[i]} + {a[j]} < {a[s]})")


@dataclass(frozen=True)
class KunzTuple:
    """Kunz coordinates x_i = (a_i - i) / m."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.m < 1 or len(self.values) != self.m - 1:
            raise DimensionError(f"a Kunz tuple for m={self.m} has {self.m - 1} entries, got {len(self.values)}")

    def to_apery(self) -> AperyTuple:
        return AperyTuple(self.m, tuple(self.m * x + i for i, x in enumerate(self.values, start=1)))


class NumericalSemigroup:
    """A numerical semigroup stored by its minimal generators and Apery set.

    ``generators`` is sorted ascending, so ``generators[0]`` is the
    multiplicity.  Factorization coordinates follow this order.
    """

    __slots__ = ("generators", "_apery")

    def __init__(self, gens: Iterable[int]):
        gens = [int(g) for g in gens]
        if not gens:
            raise NotNumerical("empty generator list")
        if any(g <= 0 for g in gens):
            raise NotNumerical(f"generators must be positive integers, got {gens}")
        if reduce(gcd, gens) != 1:
            raise NotNumerical(f"gcd of {sorted(set(gens))} is {reduce(gcd, gens)}, not 1")
        m = min(gens)
        ap = _apery_dijkstra(m, gens)
        # minimal generators: m plus the atoms of the Apery poset
        minimal = [m]
        for r in range(1, m):
            if not any(ap[i] + ap[(r - i) % m] == ap[r] for i in range(1, m) if (r - i) % m):
                minimal.append(ap[r])
        self.generators = tuple(sorted(minimal))
        self._apery = tuple(ap)

    @classmethod
    def from_json(cls, obj) -> "NumericalSemigroup":
        """Accepts {"generators": [...]}, {"m": m, "kunz": [...]}, or {"m": m, "apery": [...]}."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if "generators" in obj:
            return cls(obj["generators"])
        if "kunz" in obj:
            return semigroup_of_kunz(KunzTuple(int(obj["m"]), obj["kunz"]))
        if "apery" in obj:
            vals = list(obj["apery"])
            m = int(obj["m"])
            if len(vals) == m and vals[0] == 0:
                vals = vals[1:]
            return semigroup_of_apery(AperyTuple(m, vals))
        raise ValueError("semigroup JSON needs 'generators', 'kunz' or 'apery'")

    def to_json(self) -> dict:
        return {"generators": list(self.generators)}

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def frobenius(self) -> int:
        return max(self._apery) - self.multiplicity

    @property
    def apery_set(self) -> tuple[int, ...]:
        """Apery set w.r.t. the multiplicity, indexed by residue."""
        return self._apery

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"


def normalize(gens: Sequence[int]) -> NumericalSemigroup:
    return NumericalSemigroup(gens)


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0:
        return False
    m = S.multiplicity
    return n >= S.apery_set[n % m]


def apery(S: NumericalSemigroup) -> AperyTuple:
    return AperyTuple(S.multiplicity, S.apery_set[1:])


def kunz_tuple(S: NumericalSemigroup) -> KunzTuple:
    m = S.multiplicity
    return KunzTuple(m, tuple((a - i) // m for i, a in enumerate(S.apery_set) if i))


def apery_of_kunz(x: KunzTuple) -> AperyTuple:
    a = x.to_apery()
    a.check()
    return a


def semigroup_of_apery(a: AperyTuple) -> NumericalSemigroup:
    a.check()
    S = NumericalSemigroup((a.m,) + a.values)
    if S.multiplicity != a.m:
        warnings.warn(f"tuple yields {S!r}, whose multiplicity {S.multiplicity} is smaller than m={a.m}",
                      MultiplicityWarning, stacklevel=2)
    return S


def semigroup_of_kunz(x: KunzTuple) -> NumericalSemigroup:
    return semigroup_of_apery(x.to_apery())


def factorizations(S: NumericalSemigroup, n: int) -> list[tuple[int, ...]]:
    """All factorizations of ``n`` over the minimal generators.

    Generators are consumed from the largest down, exponents tried from
    the largest down, so the result comes out lexicographically descending.
    """
    if not contains(S, n):
        raise NotAnElement(f"{n} is not an element of {S!r}")
    gens = S.generators
    k = len(gens)
    out: list[tuple[int, ...]] = []
    z = [0] * k

    def rec(i: int, rest: int):
        g = gens[i]
        if i == 0:
            if rest % g == 0:
                z[0] = rest // g
                out.append(tuple(z))
            return
        for c in range(rest // g, -1, -1):
            r = rest - c * g
            # the remainder has to be an element of <gens[0..i-1]>; S-membership is a cheap necessary test
            if r < S.apery_set[r % gens[0]]:
                continue
            z[i] = c
            rec(i - 1, r)
        z[i] = 0

    rec(k - 1, n)
    out.sort(reverse=True)
    return out


def betti_search_bound(S: NumericalSemigroup) -> int:
    """Every Betti element is at most max(Ap(S; m)) + max generator."""
    return max(S.apery_set) + S.generators[-1]


def betti_elements_classic(S: NumericalSemigroup) -> dict[int, list[tuple[tuple[int, ...], ...]]]:
    """Betti elements mapped to the connected components of their factorization graphs."""
    out = {}
    for b in range(1, betti_search_bound(S) + 1):
        if not contains(S, b):
            continue
        comps = support_components(factorizations(S, b))
        if len(comps) > 1:
            out[b] = comps
    return out


def minimal_presentation_classic(S: NumericalSemigroup) -> list[Trade]:
    """Minimal presentation from the Betti elements.

    At each Betti element, the lex-largest factorization (which heads the
    first component) is traded against the lex-largest member of every
    other component.
    """
    trades = []
    for b, comps in betti_elements_classic(S).items():
        head = comps[0][0]
        for comp in comps[1:]:
            trades.append(Trade(b, head, comp[0]))
    return trades


def phi(S: NumericalSemigroup, z: Sequence[int]) -> int:
    """The factorization homomorphism: the element ``z`` is a factorization of."""
    if len(z) != len(S.generators):
        raise DimensionError(f"factorization of length {len(z)} for {len(S.generators)} generators")
    return sum(a * g for a, g in zip(z, S.generators))


def parse_generators(text: str) -> NumericalSemigroup:
    """Parse the shorthand "6,7,8,9"."""
    return NumericalSemigroup(int(t) for t in text.replace(" ", "").split(",") if t)
