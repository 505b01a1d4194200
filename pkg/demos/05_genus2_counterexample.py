"""The genus-2 counterexample family, checked through elliptic quotients.

For primes q splitting the right way in Q(zeta3)(4^(1/3), 3^(1/3)), the
genus-2 curve built from y^2 = x^3 - 3 has cup products that do NOT reduce to
the base-point-times-Weil-pairing form.  The obstruction is certified by two
facts about the elliptic quotients mod q: both have full 3-torsion, and the
point (0, 3) on y^2 = x^3 + 9 is not divisible by 3.
"""

from cupcurve import genus2

print("admissibility of small primes:")
for q in (5, 7, 13, 31, 439):
    r = genus2.admissible_prime(q)
    print(f"  q={q}: 1mod3={r.q1mod3} cube3={r.cube3} cube4={r.cube4} "
          f"zeta_noncube={r.zeta_noncube} -> admissible={r.admissible}")

print("\nq = 439 (the first admissible prime):")
ce = genus2.verify_counterexample(439)
print(f"  #E[3] = {ce.torsion_e}, #E'[3] = {ce.torsion_eprime}, "
      f"(0,3) divisible by 3: {ce.p1_divisible}")
print(f"  counterexample confirmed: {ce.conclusion}")

print("\nscanning primes up to 20000:")
rows, density = genus2.scan(20000)
admissible = [rep.q for rep, ce in rows if rep.admissible]
print(f"  {len(admissible)} admissible primes out of {len(rows)}; first few:",
      admissible[:8])
print(f"  density {float(density):.4f} (asymptotically 1/27 = {1/27:.4f})")
print("  all confirmed:", all(ce.conclusion for rep, ce in rows if rep.admissible))
