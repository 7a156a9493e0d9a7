"""
Independence and dominance complexes of random forests
======================================================

For forests both complexes are spheres (or contractible), with dimensions
read off from domination and matching numbers.
"""
import random

from grapes import (
    analyze,
    independence_complex,
    invariants,
    reduce_doscremo,
    reduce_scremo,
    verify,
)
from grapes.generators import random_forest

rng = random.Random(7)

for _ in range(6):
    F = random_forest(rng, rng.randint(3, 10))
    inv = invariants(F)
    _, t_ind, _ = analyze("ind", F)
    _, t_dom, _ = analyze("dom", F)
    print(f"|V|={len(F.vertices):2d} |E|={len(F.edges):2d}  "
          f"gamma={inv.gamma} i={inv.i_dom} alpha0={inv.alpha0}  "
          f"Ind: {t_ind}  Dom: {t_dom}")

# removing a vertex at distance two from a leaf leaves Ind unchanged up to homotopy
F = random_forest(rng, 10)
log = []
G = reduce_scremo(F, log)
print("\n".join(log))
print("Ind before:", analyze("ind", F)[1], " after:", analyze("ind", G)[1])
print("verified:", verify(independence_complex(G), analyze("ind", G)[1]))

# edge removals shrink the forest to r disjoint edges; Dom is then a cross-polytope
G, r = reduce_doscremo(F)
print("r =", r, " alpha0 =", invariants(F).alpha0, " Dom:", analyze("dom", F)[1])
