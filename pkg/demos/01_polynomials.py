"""Tutte and Whitney polynomials, computed two independent ways.

The subgraph-expansion route literally walks all 2^m edge subsets; the
deletion-contraction route recurses with an isomorphism-keyed memo and
factors over biconnected blocks.  They must agree exactly, and the
classical specializations fall out of the Whitney polynomial.
"""
from relpoly import (
    MultiGraph,
    fixture,
    forest_gen,
    tree_number,
    tree_number_mtt,
    tutte_dc,
    tutte_expansion,
    whitney,
)

triangle = fixture("cycle", 3)
print("triangle, by expansion:          ", tutte_expansion(triangle))
print("triangle, by deletion-contraction:", tutte_dc(triangle))
print("Whitney polynomial W = T(x+1, y+1):", whitney(triangle))
print()

dipole = MultiGraph(2, ((0, 1, 3),))
print("three parallel edges:", tutte_dc(dipole), "(x + y + y^2)")
loop = MultiGraph(1, ((0, 0, 2),))
print("two loops:           ", tutte_dc(loop), "(y^2)")
print()

k4 = fixture("complete", 4)
print("K4 spanning trees via W(0,0):      ", tree_number(k4))
print("K4 spanning trees via determinant: ", tree_number_mtt(k4))
print("K4 spanning forests by tree count: ", forest_gen(k4))
print()

g = fixture("figure1_G")
memo = {}
t_g = tutte_dc(g, memo)
print(f"dense 8-vertex example: {t_g.num_terms()} Tutte terms, "
      f"{len(memo)} memoized minors")
print("matches the 2^18 expansion:", t_g == tutte_expansion(g))
print("tree number:", tree_number(g), "==", tree_number_mtt(g), "(determinant route)")
