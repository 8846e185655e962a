"""Whitney vs Tutte domination: the two orders can genuinely differ.

The headline pair: two 8-vertex, 18-edge graphs built from K_{4,4} by
adding two extra edges on one side (G) or one edge on each side (H).
G dominates H in the Whitney order with a nonnegative quotient, yet the
Tutte-order quotient has negative coefficients, so G does not dominate H
there.  Both certificates reconstruct the differences exactly.
"""
from relpoly import BivarPoly, fixture, tutte_compare, tutte_dc, whitney, whitney_compare

g = fixture("figure1_G")
h = fixture("figure1_H")

rw = whitney_compare(g, h)
print("Whitney order verdict:", rw.verdict)
print("quotient is nonnegative:", rw.quotient.is_nonnegative())
one_minus_xy = BivarPoly({(0, 0): 1, (1, 1): -1})
print("reconstructs W_G - W_H:", one_minus_xy * rw.quotient == whitney(g) - whitney(h))
print()

rt = tutte_compare(g, h)
print("Tutte order verdict:", rt.verdict)
print("quotient P(x, y) =", rt.quotient)
print("negative coefficient witness:", rt.witness,
      "->", rt.quotient.coeff(*rt.witness))
divisor = BivarPoly({(1, 0): 1, (0, 1): 1, (1, 1): -1})
print("reconstructs T_G - T_H:", divisor * rt.quotient == tutte_dc(g) - tutte_dc(h))
print()

print("same graph compares Equal:", whitney_compare(g, g).verdict)
