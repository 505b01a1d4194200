"""The Legendre derivative of Frobenius on two contrasting curves.

Writing the arithmetic Frobenius on the Tate module as 1 + ell*A, the map
dL = A^(-1) carries the rational ell-torsion to Pic0/ell.  On the curve
y^2 = x^3 - 3 over F_7 (complex multiplication, #E = 3) it is the zero map;
on y^2 = x^3 + 9 (full rational 3-torsion) it is an isomorphism.
"""

from cupcurve import (curve_new, frobenius_data, legendre_derivative,
                      legendre_matrix, make_context)

ctx = make_context(7, 3, 1)

cm = curve_new(ctx, 0, -3, ext_cap=128)
print("CM curve:", cm, " #E =", cm.order())
fd = frobenius_data(cm, 1)
print("  q-power matrix on E[3] (over F_7^%d):" % fd.m, fd.G)
for P in cm.enumerate_points():
    print(f"  dL({P}) = {legendre_derivative(cm, P)}")
print("  -> the zero homomorphism (the Frobenius is maximally ramified).")

full = curve_new(ctx, 0, 9, ext_cap=128)
print("\nfull-torsion curve:", full, " #E =", full.order())
M = legendre_matrix(full)
print("  dL as a matrix on the canonical basis:", M)
print("  -> invertible mod 3: full rational torsion makes A an automorphism.")

# dL is convention-robust: realizing the same construction through the
# geometric Frobenius gives the identical map.
P = full.point(0, 3)
print("\nconvention swap on", P, ":",
      legendre_derivative(full, P),
      "==", legendre_derivative(full, P, convention="geometric"))
