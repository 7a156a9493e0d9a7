"""
The homology oracle
===================

Reduced integral homology from augmented boundary matrices.  It is the
independent check behind every homotopy type, and it sees torsion that a
field computation would miss.
"""
from grapes import SimplicialComplex, reduced_homology, smith_normal_form
from grapes.simplicial import cross_polytope_boundary, greedy_collapse, suspension

# spheres: boundaries of cross-polytopes
for r in range(4):
    print(f"cross-polytope r={r}:", reduced_homology(cross_polytope_boundary(r)).reduced_betti)

# the empty complex and {∅} are different
print("empty:", reduced_homology(SimplicialComplex()).reduced_betti)
print("{∅}:  ", reduced_homology(SimplicialComplex([frozenset()])).reduced_betti)

# six-vertex projective plane: no free homology, Z/2 in degree 1
triangles = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
             (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
rp2 = SimplicialComplex([frozenset(f"v{x}" for x in t) for t in triangles])
h = reduced_homology(rp2)
print("RP2 betti:", h.reduced_betti, "torsion:", h.torsion)

# suspension shifts degrees by one
circle = SimplicialComplex([{"a", "b"}, {"b", "c"}, {"a", "c"}])
print("S(circle):", reduced_homology(suspension(circle, "N", "S")).reduced_betti)

# collapsing never changes homology
blob = SimplicialComplex([{"a", "b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "c"}])
small = greedy_collapse(blob)
print("collapsed", len(blob.faces()), "faces to", len(small.faces()),
      "; betti", reduced_homology(small).reduced_betti)

# Smith normal form on its own
print("SNF of [[2,4],[6,8]]:", smith_normal_form([[2, 4], [6, 8]]))
