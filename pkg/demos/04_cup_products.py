"""Cup products in H^2 = Pic(C)/ell tensor mu_ell, beyond the Weil pairing.

Over the algebraic closure a cup product of H^1 classes is just a Weil
pairing value; over the finite field itself it also carries a Pic0 component
governed by the Legendre derivative whenever constant classes are involved.
"""

from cupcurve import (cup_product, curve_new, h1_constant, h1_new,
                      make_context, normalized_cup_span, pic_hom_basis,
                      triple_product)

ctx = make_context(7, 3, 1)
curve = curve_new(ctx, 0, 9, ext_cap=128)
_, P1, P2 = curve.torsion_basis(1)

print("normalized x normalized: only the degree part is hit")
h = cup_product(curve, h1_new(curve, P1), h1_new(curve, P2))
print("  [a] cup [b] =", h)

print("\nconstant x normalized: the Legendre derivative shows up in Pic0")
for c in range(3):
    h = cup_product(curve, h1_constant(curve, c), h1_new(curve, P1))
    print(f"  [g^{c}] cup [b] =", h)

print("\nconstant x constant vanishes:")
print("  [g] cup [g^2] =", cup_product(curve, h1_constant(curve, 1),
                                       h1_constant(curve, 2)))

dim, cond = normalized_cup_span(curve)
print(f"\nnormalized cup span: dimension {dim}, "
      f"base-point-only form holds: {cond}")

print("\ntriple products against a basis of Hom(Pic, Z/3):")
for t in pic_hom_basis(curve):
    vals = [triple_product(curve, t, h1_constant(curve, 1),
                           h1_new(curve, P)).exp
            for P in (curve.infinity(), P1, P2)]
    print(f"  t = {t}: values on (0, P1, P2) classes = {vals}")
