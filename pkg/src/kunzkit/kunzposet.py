"""Kunz posets and their nilsemigroups.

A :class:`KunzPoset` lives on the quotient Z_m/H, where H is the Kunz
subgroup.  H is always dZ_m for a divisor d of m, so the ground set is
represented by 0, ..., d-1 and group addition is addition mod d.  When H
is trivial, d = m.

Adding two ground elements gives their group sum if that sum lies above
both of them in the order, and the nil ``INF`` otherwise.
"""

from __future__ import annotations

import json
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from .common import INF, DimensionError, NotAFace, NotSemigroupFace
from .exactmath import IntMatrix, rowspan_contains
from .semigroup import AperyTuple, NumericalSemigroup, apery


class KunzPoset:
    """A finite poset on Z_m/H with a unique minimum 0, plus its nilsemigroup."""

    def __init__(self, m: int, subgroup: Sequence[int], leq_pairs: Iterable[tuple[int, int]]):
        self.m = int(m)
        self.subgroup = tuple(sorted(subgroup))
        self.modulus = self.m // len(self.subgroup)
        self.ground = tuple(range(self.modulus))
        d = self.modulus
        up: dict[int, set[int]] = {a: {a} for a in self.ground}
        for a, b in leq_pairs:
            up[a % d].add(b % d)
        self._up = {a: frozenset(s) for a, s in up.items()}
        self._down = {b: frozenset(a for a in self.ground if b in self._up[a]) for b in self.ground}
        self._check_order()

        self.covers: tuple[tuple[int, int], ...] = tuple(
            (a, b)
            for a in self.ground for b in sorted(self._up[a])
            if a != b and not any(c != a and c != b and b in self._up[c] for c in self._up[a])
        )
        self.atoms: tuple[int, ...] = tuple(sorted(b for a, b in self.covers if a == 0))
        self.cover_labels = {(a, b): (b - a) % d for a, b in self.covers}
        self._build_factorizations()

    # construction ------------------------------------------------------

    @classmethod
    def from_apery(cls, a: AperyTuple) -> "KunzPoset":
        m, full = a.m, a.full
        pairs = [
            (i, j)
            for i in range(m) for j in range(1, m)
            if i != j and (i == 0 or full[i] + full[(j - i) % m] == full[j])
        ]
        return cls(m, (0,), pairs)

    @classmethod
    def from_semigroup(cls, S: NumericalSemigroup) -> "KunzPoset":
        return cls.from_apery(apery(S))

    @classmethod
    def from_face(cls, H, m: int) -> "KunzPoset":
        """Kunz poset of the face cut out by the rows of ``H``.

        Columns of ``H`` are the group-cone coordinates 1..m-1.  Raises
        NotAFace when the derived relation is not a well-defined partial
        order on Z_m/H.
        """
        m = int(m)
        if not isinstance(H, IntMatrix):
            H = IntMatrix(H, labels=range(1, m), ncols=m - 1)
        if H.ncols != m - 1:
            raise DimensionError(f"hyperplane matrix has {H.ncols} columns, expected m - 1 = {m - 1}")
        n = m - 1

        def unit(i):
            return [int(j == i) for j in range(1, m)]

        sub = [0] + [h for h in range(1, m) if rowspan_contains(H, unit(h))]
        d = m
        for h in sub:
            d = gcd(d, h)
        if sorted(sub) != list(range(0, m, d)):
            raise NotAFace(f"elements {sub} forced to zero do not form a subgroup of Z_{m}")

        def relation(a, b):
            # x_a + x_{b-a} - x_b, with x_0 = 0
            v = [0] * n
            for idx, s in ((a, 1), ((b - a) % m, 1), (b, -1)):
                if idx % m:
                    v[idx % m - 1] += s
            return rowspan_contains(H, v)

        pairs = []
        for a in range(d):
            for b in range(d):
                if a == b or a == 0:
                    pairs.append((a, b))
                    continue
                if b == 0:
                    continue
                verdicts = {relation(a + s, b + t) for s in range(0, m, d) for t in range(0, m, d)}
                if len(verdicts) != 1:
                    raise NotAFace(f"relation between classes {a} and {b} depends on coset representatives")
                if verdicts.pop():
                    pairs.append((a, b))
        try:
            P = cls(m, range(0, m, d), pairs)
        except NotAFace as exc:
            raise NotAFace(f"rows do not cut out a face of C(Z_{m}): {exc}") from None
        P._check_atom_labels()
        return P

    @classmethod
    def from_covers(cls, m: int, covers: Iterable[Sequence[int]]) -> "KunzPoset":
        """Poset on Z_m generated by cover pairs (a, b) meaning a < b.

        Only the order axioms and the atom-labelling of covers are checked;
        realizability as a face is not.
        """
        m = int(m)
        cov = [(int(a) % m, int(b) % m) for a, b in covers]
        up = {a: {a} for a in range(m)}
        for a, b in cov:
            up[a].add(b)
        changed = True
        while changed:
            changed = False
            for a in range(m):
                new = set().union(*(up[c] for c in up[a]))
                if new != up[a]:
                    up[a] = new
                    changed = True
        P = cls(m, (0,), [(a, b) for a in up for b in up[a]])
        P._check_atom_labels()
        return P

    @classmethod
    def from_json(cls, obj) -> "KunzPoset":
        """Accepts {"m", "hyperplanes"}, {"m", "covers"}, or any semigroup JSON."""
        if isinstance(obj, str):
            obj = json.loads(obj)
        if "hyperplanes" in obj:
            return cls.from_face(obj["hyperplanes"], obj["m"])
        if "equalities" in obj:
            return cls.from_face(obj["equalities"], obj["m"])
        if "covers" in obj:
            return cls.from_covers(obj["m"], obj["covers"])
        return cls.from_semigroup(NumericalSemigroup.from_json(obj))

    def _check_order(self):
        for a in self.ground:
            if a not in self._up[0]:
                raise NotAFace(f"0 is not below {a}")
            for b in self._up[a]:
                if b != a and a in self._up[b]:
                    raise NotAFace(f"antisymmetry fails for {a} and {b}")
                if not self._up[b] <= self._up[a]:
                    raise NotAFace(f"transitivity fails through {a} <= {b}")

    def _check_atom_labels(self):
        atoms = set(self.atoms)
        for (a, b), lab in self.cover_labels.items():
            if lab not in atoms:
                raise NotAFace(f"{b} covers {a} but {b} - {a} = {lab} is not an atom")

    def _build_factorizations(self):
        d = self.modulus
        self._fact: dict[int, tuple[tuple[int, ...], ...]] = {}
        for p in self.linear_extension():
            if p == 0:
                self._fact[0] = ((0,) * len(self.atoms),)
                continue
            zs = set()
            for i, pi in enumerate(self.atoms):
                q = (p - pi) % d
                if self.leq(pi, p) and self.leq(q, p):
                    for z in self._fact[q]:
                        zs.add(z[:i] + (z[i] + 1,) + z[i + 1:])
            self._fact[p] = tuple(sorted(zs, reverse=True))
        self._min_length = {p: min((sum(z) for z in zs), default=None) for p, zs in self._fact.items()}

    # queries -----------------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.atoms)

    def leq(self, a, b) -> bool:
        return b in self._up[a]

    def up_set(self, a) -> frozenset:
        return self._up[a]

    def down_set(self, b) -> frozenset:
        return self._down[b]

    def relations(self) -> set[tuple[int, int]]:
        return {(a, b) for a in self.ground for b in self._up[a]}

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(a for a in self.ground if len(self._up[a]) == 1)

    def linear_extension(self) -> list[int]:
        """Ground elements by down-set size, then value."""
        return sorted(self.ground, key=lambda p: (len(self._down[p]), p))

    def min_length(self, p) -> int:
        """Minimum factorization length of ``p``."""
        return self._min_length[p]

    def add(self, a, b):
        return nil_add(self, a, b)

    def factorizations(self, p) -> tuple[tuple[int, ...], ...]:
        return self._fact[p]

    def class_of(self, z: Sequence[int]) -> int:
        """z_1 p_1 + ... + z_k p_k computed in the group, ignoring the nil."""
        return sum(zi * pi for zi, pi in zip(z, self.atoms)) % self.modulus

    def __eq__(self, other):
        if not isinstance(other, KunzPoset):
            return NotImplemented
        return self.m == other.m and self.subgroup == other.subgroup and self._up == other._up

    def __hash__(self):
        return hash((self.m, self.subgroup, tuple(sorted((a, tuple(sorted(s))) for a, s in self._up.items()))))

    def __repr__(self):
        return f"KunzPoset(m={self.m}, atoms={list(self.atoms)}, covers={len(self.covers)})"

    # serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "atoms": list(self.atoms),
            "covers": [[a, b, self.cover_labels[(a, b)]] for a, b in self.covers],
            "subgroup": list(self.subgroup),
        }

    def to_dot(self, name: str = "KunzPoset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for p in self.ground:
            lines.append(f'  {p} [label="{p}"];')
        for a, b in self.covers:
            lines.append(f'  {a} -> {b} [label="+{self.cover_labels[(a, b)]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def poset_from_apery(a: AperyTuple) -> KunzPoset:
    return KunzPoset.from_apery(a)


def poset_from_face(H, m: int) -> KunzPoset:
    return KunzPoset.from_face(H, m)


def nil_add(P: KunzPoset, a, b):
    if a is INF or b is INF:
        return INF
    s = (a + b) % P.modulus
    if P.leq(a, s) and P.leq(b, s):
        return s
    return INF


def evaluate(P: KunzPoset, z: Sequence[int]):
    """Element of P (or INF) that ``z`` is a factorization of."""
    if len(z) != P.k:
        raise DimensionError(f"factorization of length {len(z)} for {P.k} atoms")
    acc = 0
    for zi, pi in zip(z, P.atoms):
        for _ in range(zi):
            acc = nil_add(P, acc, pi)
            if acc is INF:
                return INF
    return acc


def factorizations_poset(P: KunzPoset, p) -> tuple[tuple[int, ...], ...]:
    return P.factorizations(p)


def _require_semigroup_face(P: KunzPoset):
    if len(P.subgroup) != 1:
        raise NotSemigroupFace(f"Kunz subgroup {list(P.subgroup)} is nontrivial; no semigroup lies on this face")


def embedding_dimension(P: KunzPoset) -> int:
    _require_semigroup_face(P)
    return P.k + 1


def poset_type(P: KunzPoset) -> int:
    _require_semigroup_face(P)
    return len(P.maximal_elements())


def nil_table(P: KunzPoset) -> dict[tuple, object]:
    """Full addition table of the nilsemigroup, INF included."""
    elems = list(P.ground) + [INF]
    return {(a, b): nil_add(P, a, b) for a, b in product(elems, repeat=2)}
