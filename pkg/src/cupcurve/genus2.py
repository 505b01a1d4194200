"""Verifier for the genus-2 counterexample family at ell = 3.

The family lives over primes q that split in N = Q(zeta3)(4^(1/3), 3^(1/3))
but not in N(zeta3^(1/3)); for a prime q > 3 this is decided by cubic-residue
tests (q = 1 mod 3, and 3 and 4 cubes mod q, and a primitive cube root of
unity not a cube mod q).  For such q the two elliptic quotients of the genus-2
curve, reduced mod q, are y^2 = x^3 - 3 and (after the substitution
(w, yt) -> (-3w, 3yt)) y^2 = x^3 + 9; the counterexample holds exactly when
both have full rational 3-torsion and the order-3 point (0, 3) of the second
model is not divisible by 3 in the rational points.

Everything here works over F_q only; no genus-2 arithmetic is performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import polyring
from .curve import curve_new
from .field import is_prime, make_context

CSV_HEADER = ("q,prime,q1mod3,cube3,cube4,zeta_noncube,admissible,"
              "torsionE,torsionEprime,p1_divisible,conclusion")


@dataclass(frozen=True)
class AdmissibilityReport:
    q: int
    prime: bool
    q1mod3: bool
    cube3: bool
    cube4: bool
    zeta_noncube: bool
    admissible: bool
    reason: str = ""


@dataclass(frozen=True)
class CounterexampleReport:
    q: int
    torsion_e: int
    torsion_eprime: int
    p1_divisible: bool
    conclusion: bool


def _is_cube(x, q):
    return pow(x % q, (q - 1) // 3, q) == 1


def primitive_cube_root(q):
    """A primitive cube root of unity mod q (q = 1 mod 3), deterministic."""
    g = 2
    while _is_cube(g, q):
        g += 1
    return pow(g, (q - 1) // 3, q)


def admissible_prime(q):
    """Splitting test for the counterexample family, as cubic-residue checks.

    Non-primes (and q <= 3, where the residue tests make no sense) come back
    with admissible = False and a reason rather than an error.
    """
    q = int(q)
    prime = is_prime(q)
    if not prime:
        return AdmissibilityReport(q, False, False, False, False, False, False,
                                   "not prime")
    if q <= 3:
        return AdmissibilityReport(q, True, False, False, False, False, False,
                                   "ramified (q <= 3)")
    q1mod3 = q % 3 == 1
    if not q1mod3:
        return AdmissibilityReport(q, True, False, False, False, False, False,
                                   "q != 1 mod 3")
    cube3 = _is_cube(3, q)
    cube4 = _is_cube(4, q)
    zeta_noncube = not _is_cube(primitive_cube_root(q), q)
    admissible = cube3 and cube4 and zeta_noncube
    reason = "" if admissible else "splitting conditions fail"
    return AdmissibilityReport(q, True, True, cube3, cube4, zeta_noncube,
                               admissible, reason)


def torsion3_count(q, a, b):
    """#E[3](F_q) for y^2 = x^3 + ax + b, by the 3-division polynomial.

    The x-coordinates of the affine 3-torsion are the roots of
    3x^4 + 6a x^2 + 12b x - a^2; each contributes the points with
    y^2 = x^3 + ax + b.
    """
    ctx = make_context(q, 3, 1)
    psi = [ctx.elem(-a * a), ctx.elem(12 * b), ctx.elem(6 * a), ctx.zero(),
           ctx.elem(3)]
    count = 1
    for x in polyring.roots(ctx, psi):
        fx = x * x * x + ctx.elem(a) * x + ctx.elem(b)
        if not fx:
            count += 1
        elif ctx.sqrt(fx) is not None:
            count += 2
    return count


def cm_quotient(q, ext_cap=64):
    """The first elliptic quotient y^2 = x^3 - 3 over F_q, at ell = 3."""
    return curve_new(make_context(q, 3, 1), 0, -3, ext_cap=ext_cap)


def second_quotient(q, ext_cap=64):
    """The second quotient in Weierstrass form y^2 = x^3 + 9 over F_q."""
    return curve_new(make_context(q, 3, 1), 0, 9, ext_cap=ext_cap)


def tilde_to_weierstrass(curve, w, yt):
    """(w, yt) on yt^2 = 1 - 3w^3 to the point (-3w, 3yt) on y^2 = x^3 + 9."""
    ctx = curve.ctx
    w, yt = ctx.elem(w), ctx.elem(yt)
    if yt * yt != ctx.one() - 3 * w * w * w:
        raise ValueError("(w, yt) is not on yt^2 = 1 - 3w^3")
    return curve.point(-3 * w, 3 * yt)


def weierstrass_to_tilde(curve, P):
    """Inverse of :func:`tilde_to_weierstrass` on affine points."""
    ctx = curve.ctx
    inv3 = ctx.elem(3).inverse()
    return (-P.x * inv3, P.y * inv3)


def verify_counterexample(q, ext_cap=64):
    """Check the counterexample at an admissible prime via the two quotients.

    Certifies torsion orders (9, 9) and that P1 = (0, 3) on y^2 = x^3 + 9 is
    not divisible by 3, which together defeat both equivalent conditions of
    the genus-1 span theorem on the genus-2 curve.
    """
    rep = admissible_prime(q)
    if not rep.admissible:
        raise ValueError(f"q = {q} is not admissible: {rep.reason or 'see report'}")
    t_e = torsion3_count(q, 0, -3)
    t_ep = torsion3_count(q, 0, 9)
    eprime = second_quotient(q, ext_cap=ext_cap)
    p1 = eprime.point(0, 3)
    divisible = eprime.is_divisible(p1, 3)
    conclusion = t_e == 9 and t_ep == 9 and not divisible
    return CounterexampleReport(q, t_e, t_ep, divisible, conclusion)


def _sieve(n):
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    i = 2
    while i * i <= n:
        if flags[i]:
            flags[i * i::i] = b"\x00" * len(flags[i * i::i])
        i += 1
    return [i for i in range(2, n + 1) if flags[i]]


def scan(q_max, ext_cap=64):
    """Reports for every prime <= q_max, plus the admissible density.

    Returns (rows, density) with rows a list of (AdmissibilityReport,
    CounterexampleReport or None) in ascending prime order, and density the
    fraction of admissible primes among all primes <= q_max.
    """
    if q_max < 2:
        raise ValueError("q_max must be at least 2")
    rows = []
    admissible = 0
    primes = _sieve(q_max)
    for q in primes:
        rep = admissible_prime(q)
        ce = None
        if rep.admissible:
            admissible += 1
            ce = verify_counterexample(q, ext_cap=ext_cap)
        rows.append((rep, ce))
    return rows, Fraction(admissible, len(primes))


def csv_rows(rows):
    """Render scan rows in the fixed CSV schema (one line per prime)."""
    def b(x):
        return "true" if x else "false"
    out = [CSV_HEADER]
    for rep, ce in rows:
        head = [str(rep.q), b(rep.prime), b(rep.q1mod3), b(rep.cube3),
                b(rep.cube4), b(rep.zeta_noncube), b(rep.admissible)]
        if ce is None:
            tail = ["", "", "", ""]
        else:
            tail = [str(ce.torsion_e), str(ce.torsion_eprime),
                    b(ce.p1_divisible), b(ce.conclusion)]
        out.append(",".join(head + tail))
    return out
