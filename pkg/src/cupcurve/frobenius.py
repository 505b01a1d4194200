"""Arithmetic Frobenius on torsion, Artin vectors, the Legendre derivative.

The coordinate q-power map phi on E[ell^n] has matrix G in a canonical torsion
basis; the arithmetic Frobenius acts on the Tate module as the inverse matrix
M = G^(-1), and M - I is the matrix of ell*A where Phi = 1 + ell*A.

The Artin identification of E(F_q)[ell^oo] with T/(1-Phi)T is realized purely
matrix-side: art(P) is the class of (I - M) * coords(Q), i.e. (1 - Phi)Q, for
any Q with ell^N * Q = P.  (The orientation of the representative is fixed by
the triple-product coherence identity; the geometric-Frobenius realization
(G - I) gives the identical classes.)  The Legendre derivative solves
(I - M) y = ell * art(P) and reads y back through the Artin images of the
Pic0 generators, giving a map E(F_q)[ell] -> Pic0/ell in canonical pic0
coordinates.

All vectors produced at one precision N are coordinates in one torsion chain
(the chain topped at N + v, v the exponent valuation of E(F_q)[ell^oo]), so
they can be mixed freely.
"""

from __future__ import annotations

from . import modmatrix, pairing
from .curve import CurveError, v_adic

_CONVENTIONS = ("arithmetic", "geometric", "arithmetic_negated")


class FrobeniusData:
    """Frobenius action on E[ell^n]: basis, q-power matrix G, M = G^(-1).

    Matrices are 2x2 tuples mod ell^n acting on column coordinate vectors;
    lA = M - I is the matrix of ell*A.  The basis points are the canonical
    chain basis; they generate E[ell^n] but are represented over the chain
    field, which may be larger than the minimal division field `m`.
    """

    __slots__ = ("curve", "ell", "n", "m", "basis", "G", "M", "lA")

    def __init__(self, curve, n, m, basis, G, M):
        self.curve = curve
        self.ell = curve.ell
        self.n = n
        self.m = m
        self.basis = basis
        self.G = G
        self.M = M
        mod = curve.ell ** n
        self.lA = tuple(tuple((M[i][j] - (1 if i == j else 0)) % mod
                              for j in range(2)) for i in range(2))

    def __repr__(self):
        return f"FrobeniusData(ell={self.ell}, n={self.n}, m={self.m})"


def _invert2(G, ell, n):
    mod = ell ** n
    det = (G[0][0] * G[1][1] - G[0][1] * G[1][0]) % mod
    inv = pow(det, -1, mod)
    return ((G[1][1] * inv % mod, -G[0][1] * inv % mod),
            ((-G[1][0]) * inv % mod, G[0][0] * inv % mod))


def _exponent_valuation(curve):
    gens = curve.ell_primary_generators()
    return max((v for _, v in gens), default=0)


def _ref_chain(curve, n):
    """The torsion chain all precision-n vectors are coordinatized in."""
    return curve.torsion_chain(n + _exponent_valuation(curve))


def frobenius_data(curve, n, deep=False):
    """Frobenius matrices on E[ell^n]; `deep` selects the reference chain.

    The reported m is the minimal division-field degree either way.
    """
    key = ("frobdata", n, deep)
    if key in curve._cache:
        return curve._cache[key]
    chain = _ref_chain(curve, n) if deep else curve.torsion_chain(n)
    G = chain.frobenius_matrix(n)
    M = _invert2(G, curve.ell, n)
    data = FrobeniusData(curve, n, chain.min_degree(n), chain.basis(n), G, M)
    curve._cache[key] = data
    return data


def _artin_multiplier(chain, n, convention):
    """The matrix applied to division-point coordinates, mod ell^level.

    arithmetic: (1 - Phi) = I - M with M = G^(-1); geometric: (G - I), the
    same construction through the geometric Frobenius (identical classes);
    arithmetic_negated: (M - I), which flips art and hence restrict_hom but
    leaves the Legendre derivative unchanged.
    """
    mod = chain.ell ** chain.level
    G = chain.frobenius_matrix(chain.level)
    if convention in ("arithmetic", "arithmetic_negated"):
        M = _invert2(G, chain.ell, chain.level)
        sign = -1 if convention == "arithmetic" else 1
        return tuple(tuple(sign * (M[i][j] - (1 if i == j else 0)) % mod
                           for j in range(2)) for i in range(2))
    if convention == "geometric":
        return tuple(tuple((G[i][j] - (1 if i == j else 0)) % mod
                           for j in range(2)) for i in range(2))
    raise CurveError(f"unknown Frobenius convention {convention!r}")


def _artin_raw(curve, chain, P, n, convention):
    """art(P) at precision ell^n as coordinates in chain's level-n basis.

    P must be rational ell-power torsion with n + v_ell(ord P) <= chain.level.
    """
    ell = curve.ell
    if P.is_infinity:
        return (0, 0)
    vP = curve.ell_power_order(P)
    L = chain.level
    if n + vP > L:
        raise CurveError("chain too shallow for this Artin vector")
    a, b = chain.dlog(curve.lift_point(P, chain.ctx), L)
    modL = ell ** L
    q0 = ((a // ell ** n) % modL, (b // ell ** n) % modL)
    mult = _artin_multiplier(chain, n, convention)
    w = modmatrix.matvec(mult, q0, modL)
    scale = ell ** (L - n)
    if w[0] % scale or w[1] % scale:
        raise CurveError("artin vector not divisible (bug)")
    return ((w[0] // scale) % ell ** n, (w[1] // scale) % ell ** n)


def artin_vector(curve, frob, P, convention="arithmetic"):
    """Coordinates of art(P) in T/(1-Phi)T at precision ell^(frob.n).

    Well defined modulo the column space of (M - I) at that precision; use
    :func:`artin_same_class` to compare two vectors.
    """
    n = frob.n if isinstance(frob, FrobeniusData) else int(frob)
    chain = _ref_chain(curve, n)
    return _artin_raw(curve, chain, P, n, convention)


def artin_same_class(curve, frob, v, w, convention="arithmetic"):
    """Whether two precision-ell^n Artin vectors define the same class."""
    n = frob.n if isinstance(frob, FrobeniusData) else int(frob)
    ell = curve.ell
    chain = _ref_chain(curve, n)
    mult = _artin_multiplier(chain, n, convention)
    mod = ell ** n
    A = [[mult[0][0] % mod, mult[0][1] % mod], [mult[1][0] % mod, mult[1][1] % mod]]
    b = [(v[0] - w[0]) % mod, (v[1] - w[1]) % mod]
    return modmatrix.solve_mod(A, b, ell, n) is not None


def _artin_table(curve, n, convention):
    """Artin vectors of the canonical Pic0 generators at precision n (cached)."""
    key = ("artin_table", n, convention)
    if key not in curve._cache:
        chain = _ref_chain(curve, n)
        gens = curve.pic0_basis()
        curve._cache[key] = [
            (_artin_raw(curve, chain, h, n, convention), v) for h, v in gens]
    return curve._cache[key]


def default_precision(curve):
    """Working precision for the Legendre derivative: v_ell(#E(F_q)) + 2."""
    total = curve.order()
    v = v_adic(total, curve.ell) if total % curve.ell == 0 else 0
    return v + 2


def legendre_derivative(curve, P, precision=None, convention="arithmetic"):
    """dL(P) in canonical pic0 coordinates, for P in E(F_q)[ell].

    Solves (M - I) y = ell * art(P) at the working precision and expresses the
    class of y modulo (ell, M - I) against the Artin images of the pic0 basis.
    The result is a homomorphism in P; it vanishes identically when the
    Frobenius is maximally ramified and is a bijection when E[ell] is rational.
    """
    ell = curve.ell
    if P.ctx != curve.ctx:
        raise CurveError("legendre_derivative expects a rational point")
    if not curve.mul(ell, P).is_infinity:
        raise CurveError("legendre_derivative expects an ell-torsion point")
    gens = curve.pic0_basis()
    rank = len(gens)
    if rank == 0:
        return ()
    if P.is_infinity:
        return (0,) * rank
    n = default_precision(curve) if precision is None else int(precision)
    mod = ell ** n
    chain = _ref_chain(curve, n)
    mult = _artin_multiplier(chain, n, convention)
    lA = [[mult[0][0] % mod, mult[0][1] % mod],
          [mult[1][0] % mod, mult[1][1] % mod]]
    x = _artin_raw(curve, chain, P, n, convention)
    sol = modmatrix.solve_mod(lA, [ell * x[0] % mod, ell * x[1] % mod], ell, n)
    if sol is None:
        raise CurveError("legendre solve failed: art(P) is not in the image (bug)")
    y, _ = sol
    table = _artin_table(curve, n, convention)
    # y = sum c_i * art(h_i) modulo (ell*I | M - I), c_i mod ell
    cols = [list(vec) for vec, _ in table]
    A = [[cols[j][i] for j in range(rank)] + [ell if i == 0 else 0, 0 if i == 0 else ell]
         + [lA[i][0], lA[i][1]] for i in range(2)]
    sol = modmatrix.solve_mod(A, list(y), ell, n)
    if sol is None:
        raise CurveError("legendre conversion failed: Artin images do not span (bug)")
    z, _ = sol
    return tuple(z[i] % ell for i in range(rank))


def legendre_matrix(curve, precision=None, convention="arithmetic"):
    """Columns dL(d_j) for the canonical basis d_j of E(F_q)[ell]."""
    gens = curve.pic0_basis()
    cols = []
    for h, v in gens:
        d = curve.mul(curve.ell ** (v - 1), h)
        cols.append(legendre_derivative(curve, d, precision, convention))
    return [[col[i] for col in cols] for i in range(len(gens))]


class PicHom:
    """A homomorphism Pic(C) -> Z/ell: value on the base-point class plus a
    functional on Pic0/ell in the canonical pic0 coordinates."""

    __slots__ = ("curve", "t0", "phi")

    def __init__(self, curve, t0, phi=()):
        self.curve = curve
        self.t0 = t0 % curve.ell
        phi = tuple(int(c) % curve.ell for c in phi)
        rank = curve.pic0_rank()
        if len(phi) != rank:
            raise CurveError(f"functional needs {rank} coordinates, got {len(phi)}")
        self.phi = phi

    def __repr__(self):
        return f"PicHom(t0={self.t0}, phi={self.phi})"

    def __eq__(self, other):
        return (isinstance(other, PicHom) and self.curve == other.curve
                and self.t0 == other.t0 and self.phi == other.phi)

    def __add__(self, other):
        return PicHom(self.curve, self.t0 + other.t0,
                      tuple(a + b for a, b in zip(self.phi, other.phi)))

    def __rmul__(self, k):
        return PicHom(self.curve, k * self.t0, tuple(k * c for c in self.phi))

    def eval_pic0(self, coords):
        return sum(a * c for a, c in zip(self.phi, coords)) % self.curve.ell

    def eval_point(self, P):
        """Value on the degree-zero class of a rational point."""
        return self.eval_pic0(self.curve.pic0_coordinates(P))


def pic_hom_basis(curve):
    """A basis of the PicHom space: the degree functional plus pic0 duals."""
    rank = curve.pic0_rank()
    out = [PicHom(curve, 1, (0,) * rank)]
    for i in range(rank):
        out.append(PicHom(curve, 0, tuple(1 if j == i else 0 for j in range(rank))))
    return out


def restrict_hom(curve, t, convention="arithmetic"):
    """The point S in E[ell] that is Weil-dual to the restriction of t.

    The restriction tbar of t to the geometric ell-torsion is computed through
    the Artin table: a basis vector X of E[ell] lifts to the Tate module, maps
    to T/(1-Phi)T, and pulls back through art to a rational ell-power torsion
    point R with tbar(X) = t(R).  S is the unique point with
    e_ell(X, S) = zeta0^tbar(X) for every X; this orientation of the Weil
    duality is the one that makes the two triple-product routes agree.
    """
    ell = curve.ell
    n = default_precision(curve)
    chain = _ref_chain(curve, n)
    X1, X2 = chain.basis(1)
    table = _artin_table(curve, n, convention)
    mult = _artin_multiplier(chain, n, convention)
    mod = ell ** n
    lA = [[mult[0][0] % mod, mult[0][1] % mod],
          [mult[1][0] % mod, mult[1][1] % mod]]
    gens = curve.pic0_basis()
    tbar = []
    for j in range(2):
        lift = (1, 0) if j == 0 else (0, 1)  # level-n coords of the level-1 basis
        if not table:
            tbar.append(0)
            continue
        cols = [list(vec) for vec, _ in table]
        A = [[cols[k][i] for k in range(len(table))] + [lA[i][0], lA[i][1]]
             for i in range(2)]
        sol = modmatrix.solve_mod(A, list(lift), ell, n)
        if sol is None:
            raise CurveError("artin inversion failed (bug)")
        z, _ = sol
        R = curve.infinity()
        for (h, _v), c in zip(gens, z[:len(table)]):
            R = curve.add(R, curve.mul(int(c), h))
        tbar.append(t.eval_point(R))
    # solve e(X1, S) = zeta^tbar[0], e(X2, S) = zeta^tbar[1] for S = a X1 + b X2
    w12 = pairing.weil_pairing(curve, X1, X2).exp
    inv = pow(w12, -1, ell)
    alpha = (-tbar[1]) * inv % ell
    beta = tbar[0] * inv % ell
    S = curve.add(curve.mul(alpha, X1), curve.mul(beta, X2))
    return curve.lower_point(S, curve.ext_ctx(chain.min_degree(1)))
