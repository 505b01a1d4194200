"""The Weil pairing on a curve with full rational 3-torsion.

The curve y^2 = x^3 + 9 over F_7 has all nine 3-torsion points rational; the
pairing of the canonical basis is a primitive cube root of unity, and the
pairing is bilinear and alternating.
"""

from cupcurve import curve_new, make_context, weil_pairing

ctx = make_context(7, 3, 1)
curve = curve_new(ctx, 0, 9)
print("curve:", curve)
print("#E(F_7) =", curve.order(), " group:", curve.group_structure())

m, P1, P2 = curve.torsion_basis(1)
print(f"\nE[3] is rational (division field degree {m}); basis {P1} and {P2}")

w = weil_pairing(curve, P1, P2)
print("e_3(P1, P2) =", w, "=", w.to_field(ctx))

print("\npairing table (exponents of zeta0):")
pts = [curve.add(curve.mul(i, P1), curve.mul(j, P2))
       for i in range(3) for j in range(3)]
for A in pts:
    row = [weil_pairing(curve, A, B).exp for B in pts]
    print(f"  {str(A):>5}: {row}")

print("\nalternating: every diagonal entry is 0;")
print("bilinear: each row is a linear functional of the coordinates of A.")

# Galois equivariance needs torsion the Frobenius actually moves: the 9-torsion
# of this curve lives over F_7^3.
m9, Q1, Q2 = curve.torsion_basis(2)
w9 = weil_pairing(curve, Q1, Q2, 2)
w9f = weil_pairing(curve, curve.frobenius_point(Q1),
                   curve.frobenius_point(Q2), 2)
print(f"\nE[9] over F_7^{m9}: e(phi Q1, phi Q2) = {w9f} = q * e(Q1, Q2) = {7 * w9}")
