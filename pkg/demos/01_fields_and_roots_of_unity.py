"""Finite fields with a distinguished root of unity.

Walks through the deterministic tower machinery: prime fields, extension
fields with lexicographically-least moduli, the canonical generator of the
ell-th roots of unity, and the exponent character chi.
"""

from cupcurve import canonical_mu_generator, chi, embed, make_context

# F_7 with ell = 3: the cubes mod 7 are {1, 6}, so 2 is the least non-cube
# and zeta0 = 2^((7-1)/3) = 4.
c7 = make_context(7, 3, 1)
print("F_7, ell = 3")
print("  canonical zeta0:", canonical_mu_generator(c7))
print("  chi values:", {x: chi(c7, c7.elem(x)) for x in range(1, 7)})

# chi is a homomorphism onto Z/3 with kernel the cubes.
kernel = [x for x in range(1, 7) if chi(c7, c7.elem(x)) == 0]
print("  kernel of chi (the cubes):", kernel)

# The first extension: F_49 gets the lexicographically first irreducible
# modulus, which is x^2 + 1 since -1 is a non-square mod 7.
c49 = make_context(7, 3, 2)
print("\nF_49 modulus coefficients (least degree first):", c49.modulus)
i = c49.gen()
print("  gen^2 =", i * i, " (a square root of -1)")

# Towers embed deterministically: the generator of F_49 goes to the least
# root of its modulus in F_7^4.
c74 = make_context(7, 3, 4)
r = embed(c49, c74, i)
print("\nembedding F_49 -> F_7^4 sends gen to", r)
print("  image squared:", r * r, "(still -1)")
