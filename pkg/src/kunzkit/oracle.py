"""Brute-force reference computations.

Nothing here calls into the semigroup, poset, or presentation algorithms;
semigroups are read only through their generator lists and posets only
through their order relation.  Results are meant to be compared against
the fast paths in tests and in ``kunzkit check``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import networkx as nx

from .exactmath import rank


def _gens(S) -> tuple[int, ...]:
    return tuple(sorted(S.generators))


def membership_table(gens: Sequence[int], limit: int) -> list[bool]:
    """in_S[n] for 0 <= n <= limit, by dynamic programming."""
    in_s = [False] * (limit + 1)
    in_s[0] = True
    for n in range(1, limit + 1):
        in_s[n] = any(n >= g and in_s[n - g] for g in gens)
    return in_s


def apery_brute(S) -> list[int]:
    """Least element of S in each residue class mod the multiplicity."""
    gens = _gens(S)
    m = gens[0]
    limit = m * max(gens)
    while True:
        in_s = membership_table(gens, limit)
        best: dict[int, int] = {}
        for n, ok in enumerate(in_s):
            if ok and n % m not in best:
                best[n % m] = n
        if len(best) == m:
            return [best[r] for r in range(m)]
        limit *= 2


def semigroup_factorizations_brute(gens: Sequence[int], n: int) -> set[tuple[int, ...]]:
    """All exponent vectors z >= 0 with sum z_i g_i = n, generators ascending."""
    gens = tuple(sorted(gens))
    out = set()

    def rec(i, rest, tail):
        if i == 0:
            if rest % gens[0] == 0:
                out.add((rest // gens[0],) + tail)
            return
        for c in range(rest // gens[i] + 1):
            rec(i - 1, rest - c * gens[i], (c,) + tail)

    rec(len(gens) - 1, n, ())
    return out


def _bounded_vectors(k: int, total: int):
    """All z in N^k with sum(z) <= total."""
    if k == 0:
        yield ()
        return
    for c in range(total + 1):
        for rest in _bounded_vectors(k - 1, total - c):
            yield (c,) + rest


def _as_pair(t):
    if hasattr(t, "left"):
        return tuple(t.left), tuple(t.right)
    u, v = t
    return tuple(u), tuple(v)


def presentation_bound(S) -> int:
    gens = _gens(S)
    return max(apery_brute(S)) + 2 * gens[-1]


def check_presentation(S, trades: Iterable) -> bool:
    """True iff the trades connect every factorization set up to the bound.

    For each element b <= max(Ap(S; m)) + 2 * max generator, the graph on
    the factorizations of b with an edge z -- z - u + v for every trade
    (u, v) applicable to z (either direction) must be connected.
    """
    gens = _gens(S)
    pairs = [_as_pair(t) for t in trades]
    for u, v in pairs:
        if len(u) != len(gens) or len(v) != len(gens):
            return False
        if sum(a * g for a, g in zip(u, gens)) != sum(a * g for a, g in zip(v, gens)):
            return False
    moves = pairs + [(v, u) for u, v in pairs]
    in_s = membership_table(gens, presentation_bound(S))
    for b, ok in enumerate(in_s):
        if not ok:
            continue
        zs = semigroup_factorizations_brute(gens, b)
        if len(zs) < 2:
            continue
        G = nx.Graph()
        G.add_nodes_from(zs)
        for z in zs:
            for u, v in moves:
                if all(zi >= ui for zi, ui in zip(z, u)):
                    G.add_edge(z, tuple(zi - ui + vi for zi, ui, vi in zip(z, u, v)))
        if not nx.is_connected(G):
            return False
    return True


def betti_elements_brute(S) -> dict[int, int]:
    """Betti elements and the number of components of their factorization graphs."""
    gens = _gens(S)
    bound = max(apery_brute(S)) + gens[-1]
    in_s = membership_table(gens, bound)
    out = {}
    for b in range(1, bound + 1):
        if not in_s[b]:
            continue
        zs = list(semigroup_factorizations_brute(gens, b))
        G = nx.Graph()
        G.add_nodes_from(zs)
        for x, y in ((x, y) for i, x in enumerate(zs) for y in zs[i + 1:]):
            if any(a and c for a, c in zip(x, y)):
                G.add_edge(x, y)
        c = nx.number_connected_components(G)
        if c > 1:
            out[b] = c
    return out


def dimension_by_rank(F) -> int:
    return (F.m - 1) - rank(F.equalities)


def _nil_sum(P, a, b):
    if a is None or b is None:
        return None
    s = (a + b) % P.modulus
    return s if (P.leq(a, s) and P.leq(b, s)) else None


def evaluate_brute(P, z: Sequence[int]):
    """Evaluate by repeated addition; None stands for the nil."""
    acc = 0
    for zi, pi in zip(z, P.atoms):
        for _ in range(zi):
            acc = _nil_sum(P, acc, pi)
    return acc


def factorizations_brute(P, p) -> set[tuple[int, ...]]:
    """All z with sum(z) <= m - 1 evaluating to p (chains in P are shorter than m)."""
    return {z for z in _bounded_vectors(len(P.atoms), P.m - 1) if evaluate_brute(P, z) == p}


def factorization_table_brute(P) -> dict:
    """factorizations_brute for every ground element in one pass."""
    table: dict = {p: set() for p in P.ground}
    for z in _bounded_vectors(len(P.atoms), P.m - 1):
        q = evaluate_brute(P, z)
        if q is not None:
            table[q].add(z)
    return table


def check_nilsemigroup(P) -> dict[str, bool]:
    """Exhaustive checks of the nilsemigroup axioms; None plays the nil."""
    elems = list(P.ground) + [None]
    add = {(a, b): _nil_sum(P, a, b) for a in elems for b in elems}
    assoc = all(add[(add[(a, b)], c)] == add[(a, add[(b, c)])] for a in elems for b in elems for c in elems)
    comm = all(add[(a, b)] == add[(b, a)] for a in elems for b in elems)
    identity = all(add[(0, a)] == a for a in elems)
    cancel = all(
        b == c
        for a in P.ground for b in elems for c in elems
        if add[(a, b)] is not None and add[(a, b)] == add[(a, c)]
    )
    nilpotent = all(_power_is_nil(P, a) for a in P.ground if a != 0)
    divisibility = all(
        P.leq(a, b) == any(add[(a, c)] == b for c in P.ground)
        for a in P.ground for b in P.ground
    )
    return {
        "associative": assoc,
        "commutative": comm,
        "identity": identity,
        "partly_cancellative": cancel,
        "nilpotent": nilpotent,
        "divisibility_poset": divisibility,
    }


def _power_is_nil(P, a) -> bool:
    acc = a
    for _ in range(P.modulus):
        acc = _nil_sum(P, acc, a)
        if acc is None:
            return True
    return False


def check_semigroup(S) -> dict[str, bool]:
    """Run every cross-check on one semigroup; property name -> passed."""
    from .facetools import face_of_semigroup
    from .kunzposet import KunzPoset
    from .presentation import (
        dimension,
        m_centric_presentation,
        parametric_presentation,
        presentation_cardinality,
    )
    from .semigroup import kunz_tuple, minimal_presentation_classic

    P = KunzPoset.from_semigroup(S)
    results: dict[str, bool] = {}
    results["apery"] = list(S.apery_set) == apery_brute(S)
    classic = minimal_presentation_classic(S)
    mc = m_centric_presentation(S)
    results["betti_elements"] = sorted({t.at for t in classic}) == sorted(betti_elements_brute(S))
    results["classic_presentation_valid"] = check_presentation(S, classic)
    results["m_centric_presentation_valid"] = check_presentation(S, mc)
    results["parametric_presentation_valid"] = check_presentation(
        S, parametric_presentation(P).evaluate(kunz_tuple(S)))
    results["cardinality"] = len(mc) == len(classic) == presentation_cardinality(P)
    results["dimension"] = dimension(P) == dimension_by_rank(face_of_semigroup(S))
    table = factorization_table_brute(P)
    results["poset_factorizations"] = all(set(P.factorizations(p)) == table[p] for p in P.ground)
    for name, ok in check_nilsemigroup(P).items():
        results[f"nilsemigroup_{name}"] = ok
    return results
