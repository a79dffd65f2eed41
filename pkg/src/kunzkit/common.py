"""Shared exceptions, the nil sentinel, trades, and a small union-find."""

from __future__ import annotations

from dataclasses import dataclass


class KunzError(ValueError):
    """Base class for domain errors raised by kunzkit."""


class DimensionError(KunzError):
    pass


class NotNumerical(KunzError):
    pass


class NotAnElement(KunzError):
    pass


class NotInPolyhedron(KunzError):
    pass


class NotAFace(KunzError):
    pass


class NotSemigroupFace(KunzError):
    pass


class NotOnFace(KunzError):
    pass


class _Infinity:
    """The nil element of a Kunz nilsemigroup."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


@dataclass(frozen=True)
class Trade:
    """A pair of factorizations of the same element.

    ``at`` is the element both sides factor: an integer for semigroup
    trades, a ground element of the poset for poset trades.
    """

    at: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def row(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.left, self.right))

    def to_json(self) -> dict:
        return {"at": self.at, "left": list(self.left), "right": list(self.right)}


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return list(out.values())


def support_components(factorizations) -> list[tuple[tuple[int, ...], ...]]:
    """Connected components of the factorization graph.

    Two factorizations are adjacent when their supports meet.  Each
    component is sorted lexicographically descending, and components are
    ordered by their lex-largest member, largest first.
    """
    zs = list(factorizations)
    if not zs:
        return []
    uf = UnionFind(len(zs))
    first_with: dict[int, int] = {}
    for idx, z in enumerate(zs):
        for i, zi in enumerate(z):
            if zi:
                if i in first_with:
                    uf.union(first_with[i], idx)
                else:
                    first_with[i] = idx
    comps = [tuple(sorted((zs[i] for i in g), reverse=True)) for g in uf.groups()]
    comps.sort(key=lambda c: c[0], reverse=True)
    return comps
