"""Apery sets, Kunz coordinates, and the Kunz poset of a numerical semigroup."""

from kunzkit import KunzPoset, NumericalSemigroup, apery, kunz_tuple, semigroup_of_kunz

# redundant generators are dropped on construction
S = NumericalSemigroup([6, 7, 8, 9, 13])
print(S, "multiplicity", S.multiplicity, "Frobenius", S.frobenius)

a = apery(S)
print("Apery set:", a.full)
x = kunz_tuple(S)
print("Kunz coordinates:", x.values)
print("back again:", semigroup_of_kunz(x))

# <6,19,26,33> sits on the same face, so its Kunz poset is the same
T = NumericalSemigroup([6, 19, 26, 33])
print(T, "Apery set:", apery(T).full, "Kunz:", kunz_tuple(T).values)
P = KunzPoset.from_semigroup(S)
print("same poset:", P == KunzPoset.from_semigroup(T))

# %%
print(P)
for p in P.linear_extension():
    print(f"  Z_P({p}) =", list(P.factorizations(p)))

print(P.to_dot())
