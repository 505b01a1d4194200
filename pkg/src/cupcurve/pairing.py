"""Miller functions and the Weil and Tate-Lichtenbaum pairings.

Everything is computed in ratio form: a Miller function is only ever evaluated
at degree-zero divisors with affine support, so the normalization constant of
each line cancels and no Laurent expansions at infinity are needed.  Divisor
shifts are drawn from a deterministic generator seeded by the inputs, with a
bounded retry count and a deterministic fallback sequence, so equal inputs
give bit-equal results.
"""

from __future__ import annotations

import random

from .curve import CurveError, Point
from .field import FieldError, MuRoot, mu_dlog

_RANDOM_TRIES = 8
_FALLBACK_TRIES = 64


class PairingError(CurveError):
    """Pairing precondition violated or all divisor shifts collided."""


class _SupportCollision(Exception):
    """An evaluation point hit a zero or pole of an intermediate line."""


def root_order_is(w, ell, k):
    """True iff the multiplicative order of w is exactly ell^k."""
    if w ** ell ** k != w.ctx.one():
        return False
    if k == 0:
        return True
    return w ** ell ** (k - 1) != w.ctx.one()


def _line_at(curve, A, B, X):
    """Value at X of the chord/tangent function with divisor
    [A] + [B] - [A+B] - [inf], up to a nonzero constant; returns (num, den).

    Constants cancel because callers only form ratios of values at two points.
    Raises _SupportCollision when X is a zero or pole.
    """
    ctx = X.ctx
    if A.is_infinity or B.is_infinity:
        return ctx.one(), ctx.one()
    if A.x == B.x and (A.y != B.y or not A.y):
        # B = -A: vertical line at A
        num = X.x - A.x
        if not num:
            raise _SupportCollision
        return num, ctx.one()
    if A == B:
        a_coeff, _ = curve.coeffs_in(ctx)
        num = (X.y - A.y) * (2 * A.y) - (X.x - A.x) * (3 * A.x * A.x + a_coeff)
    else:
        num = (X.y - A.y) * (B.x - A.x) - (X.x - A.x) * (B.y - A.y)
    S = curve.add(A, B)
    den = X.x - S.x if not S.is_infinity else ctx.one()
    if not num or not den:
        raise _SupportCollision
    return num, den


def miller_eval(curve, P, n, Q1, Q2):
    """f_{n,P}(Q1) / f_{n,P}(Q2), div f_{n,P} = n[P] - [nP] - (n-1)[inf].

    Q1, Q2 must be affine and distinct from P; a collision with the support of
    an intermediate line raises PairingError (callers re-shift and retry).
    """
    if Q1.is_infinity or Q2.is_infinity:
        raise PairingError("miller_eval needs affine evaluation points")
    ctx = Q1.ctx
    if P.is_infinity or n == 1:
        return ctx.one()
    if n < 1:
        raise PairingError("miller_eval needs n >= 1")
    try:
        n1, d1, n2, d2 = _miller_parts(curve, P, n, Q1, Q2)
        return (n1 * d2) / (d1 * n2)
    except _SupportCollision as exc:
        raise PairingError("support collision in the Miller loop") from exc


def _miller_parts(curve, P, n, Q1, Q2):
    ctx = Q1.ctx
    one = ctx.one()
    n1 = d1 = n2 = d2 = one
    R = P
    for bit in bin(n)[3:]:
        u1, v1 = _line_at(curve, R, R, Q1)
        u2, v2 = _line_at(curve, R, R, Q2)
        n1, d1 = n1 * n1 * u1, d1 * d1 * v1
        n2, d2 = n2 * n2 * u2, d2 * d2 * v2
        R = curve.add(R, R)
        if bit == "1":
            u1, v1 = _line_at(curve, R, P, Q1)
            u2, v2 = _line_at(curve, R, P, Q2)
            n1, d1 = n1 * u1, d1 * v1
            n2, d2 = n2 * u2, d2 * v2
            R = curve.add(R, P)
    return n1, d1, n2, d2


def _shifted_miller(curve, P, T, n, U, V):
    """F([U] - [V]) for the function F with divisor n[P+T] - n[T].

    F = f_{n,P} * g^{-n} with g the chord function of (P, T); only ratios of
    values appear, so the normalizing constants drop out.
    """
    base = miller_eval(curve, P, n, U, V)
    try:
        gu_n, gu_d = _line_at(curve, P, T, U)
        gv_n, gv_d = _line_at(curve, P, T, V)
    except _SupportCollision as exc:
        raise PairingError("support collision at the shift line") from exc
    g_ratio = (gu_n * gv_d) / (gu_d * gv_n)
    return base * g_ratio ** (-n)


def _common_ctx(curve, P, Q):
    if P.ctx == Q.ctx:
        return P, Q
    big, small = (P.ctx, Q.ctx) if P.ctx.m >= Q.ctx.m else (Q.ctx, P.ctx)
    if big.m % small.m:
        raise PairingError("points live in incompatible extensions")
    return curve.lift_point(P, big), curve.lift_point(Q, big)


def _shift_candidates(curve, ctx, seed):
    """Some seeded random points, then a deterministic walk over the field.

    The walk visits each x-coordinate once, so the generator is finite; the
    callers lift to a small extension when a tiny field runs out of shifts.
    """
    rng = random.Random(seed)
    for _ in range(_RANDOM_TRIES):
        yield curve.random_point(ctx, rng)
    a, b = curve.coeffs_in(ctx)
    for k in range(min(ctx.order, 4096)):
        x = ctx.element_from_index(k)
        fx = x * x * x + a * x + b
        y = ctx.sqrt(fx)
        if y is None:
            continue
        yield Point(ctx, x, y)
        if y:
            yield Point(ctx, x, -y)


# lifting a pairing to F_{q^(m*d)} dodges shift exhaustion on tiny fields; the
# Weil value is unchanged, the Tate value is raised to the power d
_LIFT_DEGREES = (1, 2, 3, 4, 6)


def _weil_attempt(curve, P, Q, N):
    ctx = P.ctx
    seed = str(("weil", ctx.p, ctx.m, N, P.x.coeffs, P.y.coeffs,
                Q.x.coeffs, Q.y.coeffs))
    shifts = _shift_candidates(curve, ctx, seed)
    while True:
        try:
            S = next(shifts)
            T = next(shifts)
        except StopIteration:
            raise PairingError("weil pairing: shifts exhausted") from None
        if S.is_infinity or T.is_infinity:
            continue
        QS = curve.add(Q, S)
        PT = curve.add(P, T)
        if QS.is_infinity or PT.is_infinity:
            continue
        if len({S, T, QS, PT}) < 4 or QS == P or S == P or PT == Q or T == Q:
            continue
        try:
            a_val = _shifted_miller(curve, P, T, N, QS, S)
            b_val = _shifted_miller(curve, Q, S, N, PT, T)
            return a_val / b_val
        except (PairingError, ZeroDivisionError):
            continue


def weil_pairing_value(curve, P, Q, n):
    """e_{ell^n}(P, Q) as a field element, via shifted Miller evaluations.

    Uses f_P([Q+S] - [S]) / f_Q([P+T] - [T]) with div f_P = N[P+T] - N[T] and
    div f_Q = N[Q+S] - N[S]; the result does not depend on the shifts S, T.
    """
    ell = curve.ell
    N = ell ** n
    P, Q = _common_ctx(curve, P, Q)
    if not curve.mul(N, P).is_infinity or not curve.mul(N, Q).is_infinity:
        raise PairingError(f"arguments are not ell^{n}-torsion points")
    if P.is_infinity or Q.is_infinity or P == Q or P == curve.neg(Q):
        return P.ctx.one()
    last = PairingError("weil pairing: no admissible extension")
    for d in _LIFT_DEGREES:
        try:
            ctx_d = curve.ext_ctx(P.ctx.m * d)
            Pd = curve.lift_point(P, ctx_d)
            Qd = curve.lift_point(Q, ctx_d)
            return _weil_attempt(curve, Pd, Qd, N)
        except (PairingError, FieldError) as exc:
            last = exc
            continue
    raise PairingError("weil pairing: shifts exhausted at every lift") from last


def weil_pairing(curve, P, Q, n=1):
    """The Weil pairing at level ell^n, reduced to mu_ell as a MuRoot.

    Bilinear, alternating and Galois-equivariant; level-ell^n values are
    pushed down by raising to ell^(n-1) before taking the discrete log
    against the canonical zeta0.
    """
    val = weil_pairing_value(curve, P, Q, n)
    ell = curve.ell
    return mu_dlog(val.ctx, val ** ell ** (n - 1))


def tate_pairing(curve, P, Q):
    """Tate-Lichtenbaum pairing of P in E(k)[ell] with the class of Q in E(k)/ell.

    f_{ell,P}([Q+S] - [S]) raised to (q^m - 1)/ell, returned as a MuRoot.
    Nondegenerate when mu_ell lies in the field of the points.
    """
    ell = curve.ell
    P, Q = _common_ctx(curve, P, Q)
    if not curve.mul(ell, P).is_infinity:
        raise PairingError("first argument must be an ell-torsion point")
    if P.is_infinity or Q.is_infinity:
        return MuRoot(ell, 0)
    last = PairingError("tate pairing: no admissible extension")
    for d in _LIFT_DEGREES:
        if d > 1 and d % ell == 0:
            continue  # the degree must be invertible mod ell to undo the lift
        try:
            ctx_d = curve.ext_ctx(P.ctx.m * d)
            Pd = curve.lift_point(P, ctx_d)
            Qd = curve.lift_point(Q, ctx_d)
            root = _tate_attempt(curve, Pd, Qd, ell)
        except (PairingError, FieldError) as exc:
            last = exc
            continue
        return pow(d, -1, ell) * root
    raise PairingError("tate pairing: shifts exhausted at every lift") from last


def _tate_attempt(curve, P, Q, ell):
    ctx = P.ctx
    exp = (ctx.order - 1) // ell
    seed = str(("tate", ctx.p, ctx.m, P.x.coeffs, P.y.coeffs,
                Q.x.coeffs, Q.y.coeffs))
    for S in _shift_candidates(curve, ctx, seed):
        if S.is_infinity:
            continue
        QS = curve.add(Q, S)
        if QS.is_infinity or QS == P or S == P:
            continue
        try:
            val = miller_eval(curve, P, ell, QS, S)
        except PairingError:
            continue
        return mu_dlog(ctx, val ** exp)
    raise PairingError("tate pairing: shifts exhausted")
