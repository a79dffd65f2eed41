"""Minimal presentations of <9,20,30,35> built from its Kunz poset."""

from kunzkit import (
    KunzPoset,
    NumericalSemigroup,
    kunz_tuple,
    m_centric_presentation,
    min_pres_poset,
    outer_betti,
    parametric_presentation,
)
from kunzkit.oracle import check_presentation
from kunzkit.presentation import iter_m_centric_presentations
from kunzkit.semigroup import minimal_presentation_classic

S = NumericalSemigroup([9, 20, 30, 35])
P = KunzPoset.from_semigroup(S)
print(S, "atoms", P.atoms)

print("poset relations:")
for t in min_pres_poset(P):
    print(f"  at {t.at}: {t.left} ~ {t.right}")

print("outer Betti elements:")
for B in outer_betti(P):
    print(f"  class {B.class_element}: {list(B.factorizations)}")

# each outer Betti element adds one trade, each poset relation one more
rho = m_centric_presentation(S, P)
for t in rho:
    print(f"  {t.at:3d}: {t.left} ~ {t.right}")
print("valid:", check_presentation(S, rho))
print("classic count:", len(minimal_presentation_classic(S)))

# %% the same trades, read off linear forms in the Kunz coordinates
pp = parametric_presentation(P)
x = kunz_tuple(S)
for t in pp.trades:
    print(t.ell_coeffs, t.ell_const, "->", t.ell(x))

# %% all choices of representatives
distinct = {frozenset((t.left, t.right) for t in r) for r in iter_m_centric_presentations(S)}
print(len(distinct), "m-centric minimal presentations")
