"""Which presentation sizes occur on faces of the Kunz polyhedron for small m?"""

from math import comb

from kunzkit import enumerate_cardinalities

for m in (3, 4, 5):
    counts = enumerate_cardinalities(m, 8)
    print(f"m = {m}: sizes {sorted(counts)} (max C(m,2) = {comb(m, 2)})")
    for size, faces in counts.items():
        print(f"   {size:2d} relations on {faces} faces")
