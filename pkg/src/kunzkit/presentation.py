"""Minimal presentations of Kunz posets, outer Betti elements, face
dimension, and m-centric / parametric presentations of semigroups.

Canonical choices: whenever a representative must be picked from a set of
factorizations, the lexicographically largest one is taken.  Trades are
oriented with the lex-larger side on the left, which for semigroup trades
puts the side carrying the multiplicity on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .common import INF, NotOnFace, Trade, UnionFind, support_components
from .exactmath import IntMatrix, rank
from .kunzposet import KunzPoset, _require_semigroup_face, evaluate
from .semigroup import KunzTuple, NumericalSemigroup, apery, semigroup_of_kunz


@dataclass(frozen=True)
class OuterBetti:
    factorizations: tuple[tuple[int, ...], ...]
    class_element: int

    @property
    def support(self) -> set[int]:
        return {i for z in self.factorizations for i, zi in enumerate(z) if zi}

    def to_json(self) -> dict:
        return {"class": self.class_element, "factorizations": [list(z) for z in self.factorizations]}


def _trade_key(position: dict, t: Trade):
    return (position[t.at], tuple(-x for x in t.left))


def min_pres_poset(P: KunzPoset) -> list[Trade]:
    """A minimal presentation of P.

    Trades are ordered by their element's position in
    ``P.linear_extension()`` (down-set size, then value).
    """
    position = {p: i for i, p in enumerate(P.linear_extension())}
    trades = []
    for p in P.ground:
        comps = support_components(P.factorizations(p))
        head = comps[0][0]
        for comp in comps[1:]:
            trades.append(Trade(p, head, comp[0]))
    trades.sort(key=lambda t: _trade_key(position, t))
    return trades


def _add_unit(z, i, delta=1):
    return z[:i] + (z[i] + delta,) + z[i + 1:]


def outer_betti_candidates(P: KunzPoset) -> list[tuple[int, ...]]:
    """Factorizations of INF all of whose one-step predecessors are finite."""
    cand = set()
    for p in P.ground:
        for z in P.factorizations(p):
            for i in range(P.k):
                w = _add_unit(z, i)
                if w in cand or evaluate(P, w) is not INF:
                    continue
                if all(evaluate(P, _add_unit(w, j, -1)) is not INF for j in range(P.k) if w[j]):
                    cand.add(w)
    return sorted(cand, reverse=True)


def candidate_components(P: KunzPoset) -> list[tuple[tuple[int, ...], ...]]:
    """Connected components of the candidate graph.

    Two candidates are joined when removing the same atom from each leaves
    factorizations of the same finite element.
    """
    cand = outer_betti_candidates(P)
    uf = UnionFind(len(cand))
    first: dict[tuple[int, int], int] = {}
    for idx, w in enumerate(cand):
        for i in range(P.k):
            if w[i]:
                key = (i, evaluate(P, _add_unit(w, i, -1)))
                if key in first:
                    uf.union(first[key], idx)
                else:
                    first[key] = idx
    comps = [tuple(sorted((cand[i] for i in g), reverse=True)) for g in uf.groups()]
    comps.sort(key=lambda c: c[0], reverse=True)
    return comps


def is_outer_betti(P: KunzPoset, B: Sequence[tuple[int, ...]]) -> bool:
    """For each atom index i in the support, B - e_i is exactly Z_P(p) for one finite p."""
    Bset = set(B)
    supp = {i for z in Bset for i, zi in enumerate(z) if zi}
    for i in supp:
        shifted = {_add_unit(z, i, -1) for z in Bset if z[i]}
        targets = {evaluate(P, y) for y in shifted}
        if len(targets) != 1:
            return False
        p = targets.pop()
        if p is INF or shifted != set(P.factorizations(p)):
            return False
    return True


def outer_betti(P: KunzPoset) -> list[OuterBetti]:
    out = []
    for comp in candidate_components(P):
        if is_outer_betti(P, comp):
            out.append(OuterBetti(comp, P.class_of(comp[0])))
    return out


def betti_matrix(P: KunzPoset) -> IntMatrix:
    return IntMatrix([t.row for t in min_pres_poset(P)], labels=P.atoms)


def dimension(P: KunzPoset) -> int:
    return P.k - rank(betti_matrix(P))


def presentation_cardinality(P: KunzPoset) -> int:
    return len(min_pres_poset(P)) + len(outer_betti(P))


def _atom_generators(S: NumericalSemigroup, P: KunzPoset) -> list[int]:
    """For each atom p_i, the index (>= 1) of the generator with residue p_i."""
    m = S.multiplicity
    by_residue = {g % m: j for j, g in enumerate(S.generators) if j}
    return [by_residue[p] for p in P.atoms]


def _lift(z: Sequence[int], c: int, gen_index: Sequence[int], size: int) -> tuple[int, ...]:
    """Poset exponents (atom order) with multiplicity count c -> generator order."""
    out = [0] * size
    out[0] = c
    for zi, j in zip(z, gen_index):
        out[j] = zi
    return tuple(out)


def _m_centric_from_choices(S, P, gen_index, choices) -> list[Trade]:
    gens = S.generators
    m = S.multiplicity
    size = len(gens)
    trades = []
    for t in min_pres_poset(P):
        left = _lift(t.left, 0, gen_index, size)
        right = _lift(t.right, 0, gen_index, size)
        trades.append(Trade(sum(a * g for a, g in zip(left, gens)), left, right))
    for zp, z in choices:
        right = _lift(zp, 0, gen_index, size)
        low = _lift(z, 0, gen_index, size)
        hi = sum(a * g for a, g in zip(right, gens))
        lo = sum(a * g for a, g in zip(low, gens))
        c, rem = divmod(hi - lo, m)
        assert rem == 0 and c > 0
        trades.append(Trade(hi, _lift(z, c, gen_index, size), right))
    trades.sort(key=lambda t: (t.at, tuple(-x for x in t.left)))
    return trades


def m_centric_presentation(S: NumericalSemigroup, P: KunzPoset | None = None) -> list[Trade]:
    """An m-centric minimal presentation of S, built from its Kunz poset."""
    P = KunzPoset.from_semigroup(S) if P is None else P
    choices = []
    for B in outer_betti(P):
        zp = B.factorizations[0]
        choices.append((zp, P.factorizations(B.class_element)[0]))
    return _m_centric_from_choices(S, P, _atom_generators(S, P), choices)


def iter_m_centric_presentations(S: NumericalSemigroup) -> Iterator[list[Trade]]:
    """Every m-centric presentation reachable by varying the outer-Betti choices.

    The poset-level trades stay fixed at the canonical choice; for each
    outer Betti element B every z' in B and every z in Z_P(class of B) is
    tried.
    """
    P = KunzPoset.from_semigroup(S)
    gen_index = _atom_generators(S, P)
    options = [
        [(zp, z) for zp in B.factorizations for z in P.factorizations(B.class_element)]
        for B in outer_betti(P)
    ]
    for choice in product(*options):
        yield _m_centric_from_choices(S, P, gen_index, choice)


@dataclass(frozen=True)
class ParametricTrade:
    """A trade whose multiplicity count is affine-linear in the Kunz coordinates.

    The count is ``sum(ell_coeffs[p] * x_p) + ell_const``; ``left`` and
    ``right`` are exponent vectors over the atoms.
    """

    ell_coeffs: dict = field(hash=False)
    ell_const: Fraction
    left: tuple[int, ...]
    right: tuple[int, ...]

    def ell(self, x: KunzTuple) -> Fraction:
        return sum((c * x.values[p - 1] for p, c in self.ell_coeffs.items()), Fraction(0)) + self.ell_const

    def to_json(self) -> dict:
        return {
            "left": list(self.left),
            "right": list(self.right),
            "ell_coeffs": {str(p): c for p, c in self.ell_coeffs.items()},
            "ell_const": f"{self.ell_const.numerator}/{self.ell_const.denominator}",
        }


@dataclass(frozen=True)
class ParametricPresentation:
    poset: KunzPoset
    trades: tuple[ParametricTrade, ...]

    def evaluate(self, x: KunzTuple) -> list[Trade]:
        return evaluate_parametric(self, x)

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.trades]


def parametric_presentation(P: KunzPoset) -> ParametricPresentation:
    _require_semigroup_face(P)
    m = P.m
    trades = []
    zero = {p: 0 for p in P.atoms}
    for t in min_pres_poset(P):
        trades.append(ParametricTrade(dict(zero), Fraction(0), t.left, t.right))
    for B in outer_betti(P):
        zp = B.factorizations[0]
        z = P.factorizations(B.class_element)[0]
        coeffs = {p: zpi - zi for p, zpi, zi in zip(P.atoms, zp, z)}
        const = Fraction(sum(c * p for p, c in coeffs.items()), m)
        trades.append(ParametricTrade(coeffs, const, z, zp))
    return ParametricPresentation(P, tuple(trades))


def evaluate_parametric(pp: ParametricPresentation, x: KunzTuple) -> list[Trade]:
    """Specialize at the Kunz tuple of a semigroup on the face."""
    P = pp.poset
    if x.m != P.m:
        raise NotOnFace(f"Kunz tuple has m={x.m}, poset has m={P.m}")
    S = semigroup_of_kunz(x)
    if S.multiplicity != P.m or KunzPoset.from_apery(apery(S)) != P:
        raise NotOnFace(f"Kunz tuple {list(x.values)} does not lie in the relative interior of this face")
    gen_index = _atom_generators(S, P)
    size = len(S.generators)
    trades = []
    for t in pp.trades:
        c = t.ell(x)
        assert c.denominator == 1
        left = _lift(t.left, int(c), gen_index, size)
        right = _lift(t.right, 0, gen_index, size)
        trades.append(Trade(sum(a * g for a, g in zip(left, S.generators)), left, right))
    trades.sort(key=lambda t: (t.at, tuple(-v for v in t.left)))
    return trades


def enumerate_cardinalities(m: int, max_coord: int) -> dict[int, int]:
    """Presentation cardinalities over the faces of P_m met by small Kunz tuples.

    Scans every Kunz tuple with entries in 1..max_coord, groups the tuples
    by face, and returns {cardinality: number of faces}.
    """
    from .facetools import tight_facets

    seen: dict[tuple, int] = {}
    for xs in product(range(1, max_coord + 1), repeat=m - 1):
        a = (0,) + tuple(m * x + i for i, x in enumerate(xs, start=1))
        if any(a[i] + a[j] < a[(i + j) % m] for i in range(1, m) for j in range(i, m) if (i + j) % m):
            continue
        key = tuple(tight_facets(m, a))
        if key in seen:
            continue
        P = KunzPoset.from_apery(KunzTuple(m, xs).to_apery())
        seen[key] = presentation_cardinality(P)
    counts: dict[int, int] = {}
    for c in seen.values():
        counts[c] = counts.get(c, 0) + 1
    return dict(sorted(counts.items()))
