"""H^1 classes and the genus-1 cup product, triple products, span diagnostics.

A class in H^1(C, mu_ell) is stored as a pair (P, c): the normalized part is
the class of the Miller function with divisor ell[P] - ell[0_C] for a rational
ell-torsion point P, and the constant part is g^c for the canonical non-power
g of the base field.  H^2(C, mu_ell ox mu_ell) = Pic(C) ox mu_ell is stored as
a degree coefficient plus pic0 coordinates, the tensor factor zeta0 implicit.

With the base point at infinity rational, the cup product of (P_a, c_a) and
(P_b, c_b) for ell > 2 is

    deg  = dlog e_ell(P_a, P_b)
    pic0 = c_a * dL(P_b) - c_b * dL(P_a)

and for ell = 2 the degree part is unchanged while the pic0 part acquires the
correction terms w*[P_b] + dlog(zeta'')*[P_a] + dlog(zeta)*dL(P_a) from the
even-level case analysis (zeta, zeta'' by the three-way case table).
"""

from __future__ import annotations

from . import modmatrix, pairing
from .curve import CurveError
from .field import MuRoot
from .frobenius import legendre_derivative


class CohomologyError(CurveError):
    """Invalid cohomology class or cup-product input."""


class H1Class:
    """An element of H^1(C, mu_ell) as (rational ell-torsion point, constant exponent)."""

    __slots__ = ("curve", "point", "const_exp")

    def __init__(self, curve, point, const_exp=0):
        if point.ctx != curve.ctx:
            raise CohomologyError("H1 classes are built from rational points")
        if not curve.mul(curve.ell, point).is_infinity:
            raise CohomologyError("H1 classes need an ell-torsion point")
        self.curve = curve
        self.point = point
        self.const_exp = const_exp % curve.ell

    def __repr__(self):
        return f"H1(P={self.point!r}; c={self.const_exp})"

    def __eq__(self, other):
        return (isinstance(other, H1Class) and self.curve == other.curve
                and self.point == other.point and self.const_exp == other.const_exp)

    def __add__(self, other):
        return H1Class(self.curve, self.curve.add(self.point, other.point),
                       self.const_exp + other.const_exp)

    def __rmul__(self, k):
        return H1Class(self.curve, self.curve.mul(k, self.point), k * self.const_exp)

    @property
    def is_normalized(self):
        return self.const_exp == 0

    @property
    def is_constant(self):
        return self.point.is_infinity

    @property
    def is_trivial(self):
        return self.is_normalized and self.is_constant


def h1_new(curve, point, const_exp=0):
    """The class [a~] * [g^c], a~ normalized with divisor ell[P] - ell[0_C]."""
    return H1Class(curve, point, const_exp)


def h1_constant(curve, const_exp):
    """A constant class [g^c] in H^1(k, mu_ell)."""
    return H1Class(curve, curve.infinity(), const_exp)


class H2Class:
    """An element of H^2 = Pic(C)/ell ox mu_ell: degree coefficient + pic0 part."""

    __slots__ = ("curve", "deg_coeff", "pic0")

    def __init__(self, curve, deg_coeff, pic0):
        ell = curve.ell
        self.curve = curve
        self.deg_coeff = deg_coeff % ell
        pic0 = tuple(int(c) % ell for c in pic0)
        if len(pic0) != curve.pic0_rank():
            raise CohomologyError("pic0 part has the wrong dimension")
        self.pic0 = pic0

    def __repr__(self):
        return f"H2(deg={self.deg_coeff}; pic0={list(self.pic0)})"

    def __eq__(self, other):
        return (isinstance(other, H2Class) and self.curve == other.curve
                and self.deg_coeff == other.deg_coeff and self.pic0 == other.pic0)

    def __add__(self, other):
        return H2Class(self.curve, self.deg_coeff + other.deg_coeff,
                       tuple(a + b for a, b in zip(self.pic0, other.pic0)))

    def __neg__(self):
        return H2Class(self.curve, -self.deg_coeff, tuple(-c for c in self.pic0))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return H2Class(self.curve, k * self.deg_coeff, tuple(k * c for c in self.pic0))

    @property
    def is_zero(self):
        return self.deg_coeff == 0 and not any(self.pic0)

    def vector(self):
        return (self.deg_coeff,) + self.pic0


def _dl(curve, P, convention):
    key = ("dL", P, convention)
    if key not in curve._cache:
        curve._cache[key] = legendre_derivative(curve, P, convention=convention)
    return curve._cache[key]


def cup_product(curve, ha, hb, convention="arithmetic"):
    """The cup product of two H^1 classes in H^2 = Pic(C)/ell ox mu_ell.

    Bilinear and anti-commutative; composing with the degree map always gives
    the Weil pairing of the two divisor classes.
    """
    if ha.curve != curve or hb.curve != curve:
        raise CohomologyError("classes belong to a different curve")
    ell = curve.ell
    rank = curve.pic0_rank()
    Pa, ca = ha.point, ha.const_exp
    Pb, cb = hb.point, hb.const_exp
    w = pairing.weil_pairing(curve, Pa, Pb).exp
    pic0 = [0] * rank

    def addmul(vec, k):
        for i, c in enumerate(vec):
            pic0[i] += k * c

    if ell > 2:
        if ca and not Pb.is_infinity:
            addmul(_dl(curve, Pb, convention), ca)
        if cb and not Pa.is_infinity:
            addmul(_dl(curve, Pa, convention), -cb)
        return H2Class(curve, w, pic0)

    # ell = 2: the even case table for (zeta, zeta'')
    q = curve.q
    if Pa.is_infinity or Pb.is_infinity:
        z = z2 = 0
    elif w == 0:
        z = (q - 1) // 2 % 2
        z2 = 1
    else:
        z2 = 0
        dla = _dl(curve, Pa, convention)
        dlb = _dl(curve, Pb, convention)
        target = [(x + y) % 2 for x, y in
                  zip(curve.pic0_coordinates(Pa), curve.pic0_coordinates(Pb))]
        A = [[dla[i], dlb[i]] for i in range(rank)]
        sol = modmatrix.solve_mod(A, target, 2, 1)
        if sol is None:
            raise CohomologyError("even-case correction unsolvable (dL not iso; bug)")
        (z, _zp), _ = sol
    if w:
        addmul(curve.pic0_coordinates(Pb), w)
    if z2:
        addmul(curve.pic0_coordinates(Pa), z2)
    if ca and not Pb.is_infinity:
        addmul(_dl(curve, Pb, convention), ca)
    if (z + cb) % 2 and not Pa.is_infinity:
        addmul(_dl(curve, Pa, convention), z + cb)
    return H2Class(curve, w, pic0)


def cup_with_constant(curve, const_exp, hb, convention="arithmetic"):
    """[g^c] cup hb for a normalized or constant hb: dL([b]) ox zeta0^c."""
    if hb.curve != curve:
        raise CohomologyError("class belongs to a different curve")
    rank = curve.pic0_rank()
    if hb.is_constant or const_exp % curve.ell == 0:
        return H2Class(curve, 0, (0,) * rank)
    vec = _dl(curve, hb.point, convention)
    return H2Class(curve, 0, tuple(const_exp * c for c in vec))


def eval_hom(t, h2):
    """Evaluation pairing Hom(Pic, Z/ell) x Pic/ell ox mu -> mu: a perfect duality."""
    exp = t.t0 * h2.deg_coeff + t.eval_pic0(h2.pic0)
    return MuRoot(t.curve.ell, exp)


def triple_product(curve, t, ha, hb, convention="arithmetic"):
    """t cup ha cup hb in H^3 = mu_ell: evaluation of t on the cup product."""
    return eval_hom(t, cup_product(curve, ha, hb, convention=convention))


def rational_ell_torsion(curve):
    """All of E(F_q)[ell] in canonical order."""
    gens = curve.pic0_basis()
    pts = [curve.infinity()]
    for h, v in gens:
        d = curve.mul(curve.ell ** (v - 1), h)
        pts = [curve.add(P, curve.mul(k, d)) for P in pts for k in range(curve.ell)]
    pts.sort(key=lambda P: P.key())
    return pts

def all_h1_classes(curve):
    """Every H^1 class (ell-torsion point, constant exponent); small curves only."""
    return [H1Class(curve, P, c)
            for P in rational_ell_torsion(curve) for c in range(curve.ell)]


def normalized_cup_span(curve, convention="arithmetic"):
    """(dimension, condition_ii): rank of the normalized cup image in H^2, and
    whether every normalized cup equals the base-point class times the Weil
    pairing (i.e. has vanishing pic0 part)."""
    pts = rational_ell_torsion(curve)
    vectors = []
    condition_ii = True
    for P in pts:
        for Q in pts:
            h2 = cup_product(curve, H1Class(curve, P), H1Class(curve, Q),
                             convention=convention)
            vectors.append(h2.vector())
            if any(h2.pic0):
                condition_ii = False
    dim = modmatrix.rank_mod_prime(vectors, curve.ell) if vectors else 0
    return dim, condition_ii
