"""Reading a face of the group cone C(Z_8) from its equality rows."""

from kunzkit import Face, KunzPoset, betti_matrix, dimension, find_semigroup_on_face
from kunzkit.exactmath import rank
from kunzkit.kunzposet import evaluate

H = [
    [0, 0, 2, 0, 0, -1, 0],
    [0, -1, 1, 0, 0, 0, 1],
    [-1, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, 2],
    [-1, 0, 1, 0, 0, 1, 0],
    [-1, 1, 0, 0, 0, 0, 1],
]
P = KunzPoset.from_face(H, 8)
print("atoms:", P.atoms)
for p in P.ground:
    print(p, list(P.factorizations(p)))

# (1,1,0,0) is 3 + 4 = 7, but 7 is not above 3 in P
print("evaluate (1,1,0,0):", evaluate(P, (1, 1, 0, 0)))

M = betti_matrix(P)
print("Betti matrix over atoms", M.labels)
for row in M.rows:
    print(" ", row)

# two routes to the dimension: atoms minus rank of the Betti matrix, and 7 minus rank of H
print("dim =", dimension(P), "=", 7 - rank(H))

# rows 2a_3 = a_6 and 2a_7 = a_6 force a_3 = a_7, so no semigroup lives here
res = find_semigroup_on_face(Face.from_rows(8, H))
print(res.verdict.value, "witness", res.witness)
