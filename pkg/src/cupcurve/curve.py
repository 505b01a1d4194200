"""Elliptic curves over prime fields: group law, counting, torsion bases.

A curve is y^2 = x^3 + ax + b over the prime field F_q with q = 1 mod ell,
with the point at infinity as the distinguished rational base point.  Points
over extensions live in the deterministic tower from :mod:`cupcurve.field`.

Torsion bases are found by cofactor multiplication of deterministic pseudo-
random points (never by field enumeration) and then canonicalized: the level-1
basis is the least valid pair in point order, and level k+1 lifts level k by
the least solutions of ell*X = P.  Discrete logs only ever happen in groups of
at most a few thousand elements.
"""

from __future__ import annotations

import random

from . import modmatrix
from .field import ExtensionCapError, embed, make_context, unembed


class CurveError(ValueError):
    """Invalid curve construction or point operation."""


class BudgetError(CurveError):
    """An enumeration or sampling budget was exceeded."""


def v_adic(n, ell):
    """ell-adic valuation of a nonzero integer."""
    v = 0
    while n % ell == 0:
        n //= ell
        v += 1
    return v


class Point:
    """Affine point or the point at infinity, over a fixed field context."""

    __slots__ = ("ctx", "x", "y")

    def __init__(self, ctx, x=None, y=None):
        self.ctx = ctx
        self.x = x
        self.y = y

    @property
    def is_infinity(self):
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "inf"
        if self.ctx.m == 1:
            return f"{self.x!r},{self.y!r}"
        return f"({self.x!r};{self.y!r})"

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        if self.is_infinity or other.is_infinity:
            return self.is_infinity and other.is_infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.is_infinity:
            return hash((self.ctx.p, self.ctx.m, "inf"))
        return hash((self.ctx.p, self.ctx.m, self.x.coeffs, self.y.coeffs))

    def key(self):
        """Total order on points of one field: infinity first, then (x, y)."""
        if self.is_infinity:
            return (0,)
        return (1, self.x.coeffs, self.y.coeffs)


class GroupStructure:
    """Invariant factors m1 | m2 of E(F_{q^m}) with verified generators."""

    __slots__ = ("m1", "m2", "G1", "G2")

    def __init__(self, m1, m2, G1, G2):
        self.m1 = m1
        self.m2 = m2
        self.G1 = G1
        self.G2 = G2

    def __repr__(self):
        return f"GroupStructure({self.m1}, {self.m2})"


class EllipticCurve:
    """y^2 = x^3 + ax + b over F_q (q prime, q = 1 mod ell), base point at infinity."""

    def __init__(self, ctx, a, b, ext_cap=64, enum_budget=10 ** 4):
        if ctx.m != 1:
            raise CurveError("curves are defined over the prime field")
        self.ctx = ctx
        self.ell = ctx.ell
        self.a = ctx.elem(a)
        self.b = ctx.elem(b)
        self.ext_cap = ext_cap
        self.enum_budget = enum_budget
        disc = 4 * self.a ** 3 + 27 * self.b ** 2
        if not disc:
            raise CurveError(f"singular curve: 4a^3 + 27b^2 = 0 over F_{ctx.p}")
        self._order = None
        self._ext_orders = {}
        self._chains = {}
        self._primary = None
        self._cache = {}

    def __repr__(self):
        return f"E[y^2=x^3+({self.a!r})x+({self.b!r})/F_{self.ctx.p}, ell={self.ell}]"

    def __eq__(self, other):
        return (isinstance(other, EllipticCurve) and self.ctx == other.ctx
                and self.a == other.a and self.b == other.b and self.ell == other.ell)

    def __hash__(self):
        return hash((self.ctx.p, self.ell, self.a.coeffs, self.b.coeffs))

    @property
    def q(self):
        return self.ctx.p

    # -- fields and points ----------------------------------------------------

    def ext_ctx(self, m):
        return make_context(self.ctx.p, self.ell, m, degree_cap=self.ext_cap)

    def coeffs_in(self, ctx):
        if ctx == self.ctx:
            return self.a, self.b
        return embed(self.ctx, ctx, self.a), embed(self.ctx, ctx, self.b)

    def infinity(self, ctx=None):
        return Point(ctx or self.ctx)

    def point(self, x, y, ctx=None):
        """Validated affine point over ctx (default: the base field)."""
        ctx = ctx or self.ctx
        x, y = ctx.elem(x), ctx.elem(y)
        a, b = self.coeffs_in(ctx)
        if y * y != x * x * x + a * x + b:
            raise CurveError(f"({x!r},{y!r}) is not on {self!r} over {ctx!r}")
        return Point(ctx, x, y)

    def is_on_curve(self, P):
        if P.is_infinity:
            return True
        a, b = self.coeffs_in(P.ctx)
        return P.y * P.y == P.x * P.x * P.x + a * P.x + b

    def lift_point(self, P, ctx):
        """Embed a point into a larger field of the tower."""
        if P.ctx == ctx:
            return P
        if P.is_infinity:
            return Point(ctx)
        return Point(ctx, embed(P.ctx, ctx, P.x), embed(P.ctx, ctx, P.y))

    def lower_point(self, P, sub):
        """Rewrite a point over a subfield it is known to lie in."""
        if P.ctx == sub:
            return P
        if P.is_infinity:
            return Point(sub)
        return Point(sub, unembed(sub, P.ctx, P.x), unembed(sub, P.ctx, P.y))

    def frobenius_point(self, P, k=1):
        """Coordinate q-power map applied k times."""
        if P.is_infinity:
            return P
        return Point(P.ctx, P.ctx.frobenius(P.x, k), P.ctx.frobenius(P.y, k))

    # -- group law -------------------------------------------------------------

    def neg(self, P):
        if P.is_infinity:
            return P
        return Point(P.ctx, P.x, -P.y)

    def add(self, P, Q):
        if P.ctx != Q.ctx:
            raise CurveError("points live over different fields; embed first")
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y != Q.y or not P.y:
                return Point(P.ctx)
            a, _ = self.coeffs_in(P.ctx)
            lam = (3 * P.x * P.x + a) / (2 * P.y)
        else:
            lam = (Q.y - P.y) / (Q.x - P.x)
        x3 = lam * lam - P.x - Q.x
        y3 = lam * (P.x - x3) - P.y
        return Point(P.ctx, x3, y3)

    def sub(self, P, Q):
        return self.add(P, self.neg(Q))

    def mul(self, n, P):
        """n*P by Jacobian double-and-add (one field inversion total)."""
        if n < 0:
            return self.mul(-n, self.neg(P))
        if n == 0 or P.is_infinity:
            return Point(P.ctx)
        if n == 1:
            return P
        ctx = P.ctx
        a, _ = self.coeffs_in(ctx)
        one = ctx.one()
        x1, y1 = P.x, P.y
        X = Y = Z = None  # Z None encodes infinity

        def jdouble(X, Y, Z):
            if Z is None or not Y:
                return None, None, None
            YY = Y * Y
            S = 4 * X * YY
            ZZ = Z * Z
            M = 3 * X * X + a * ZZ * ZZ
            X2 = M * M - 2 * S
            return X2, M * (S - X2) - 8 * YY * YY, 2 * Y * Z

        for bit in bin(n)[2:]:
            X, Y, Z = jdouble(X, Y, Z)
            if bit == "1":
                if Z is None:
                    X, Y, Z = x1, y1, one
                else:
                    ZZ = Z * Z
                    U2 = x1 * ZZ
                    S2 = y1 * ZZ * Z
                    H = U2 - X
                    R = S2 - Y
                    if not H:
                        if not R:
                            X, Y, Z = jdouble(X, Y, Z)
                        else:
                            X = Y = Z = None
                    else:
                        HH = H * H
                        HHH = H * HH
                        X3 = R * R - HHH - 2 * X * HH
                        Y3 = R * (X * HH - X3) - Y * HHH
                        X, Y, Z = X3, Y3, Z * H
        if Z is None:
            return Point(ctx)
        zi = Z.inverse()
        zi2 = zi * zi
        return Point(ctx, X * zi2, Y * zi2 * zi)

    def group_law(self, P, Q, n):
        """n*P + Q, covering add, negate and scalar multiplication."""
        return self.add(self.mul(n, P), Q)

    def ell_power_order(self, P):
        """v such that ord(P) = ell^v, for an ell-power-torsion point."""
        v = 0
        Q = P
        while not Q.is_infinity:
            Q = self.mul(self.ell, Q)
            v += 1
            if v > 8 * self.ext_cap:
                raise CurveError("point does not have ell-power order")
        return v

    # -- counting ---------------------------------------------------------------

    def order(self):
        """#E(F_q) by exhaustive enumeration (table-based for larger q)."""
        if self._order is None:
            q = self.q
            a0, b0 = self.a.coeffs[0], self.b.coeffs[0]
            if q < 300:
                squares = {}
                for y in range(q):
                    squares[y * y % q] = squares.get(y * y % q, 0) + 1
                total = 1
                for x in range(q):
                    fx = (x * x % q * x + a0 * x + b0) % q
                    total += squares.get(fx, 0)
                self._order = total
            else:
                import numpy as np
                xs = np.arange(q, dtype=np.int64)
                sq = np.zeros(q, dtype=bool)
                sq[(xs * xs) % q] = True
                fx = ((xs * xs % q) * xs + a0 * xs + b0) % q
                n_zero = int(np.count_nonzero(fx == 0))
                n_sq = int(np.count_nonzero(sq[fx] & (fx != 0)))
                self._order = 2 * n_sq + n_zero + 1
        return self._order

    def trace(self):
        return self.q + 1 - self.order()

    def order_over_extension(self, m):
        """#E(F_{q^m}) via the trace recurrence s_m = t*s_{m-1} - q*s_{m-2}."""
        if m < 1:
            raise CurveError("extension degree must be >= 1")
        if m not in self._ext_orders:
            t, q = self.trace(), self.q
            s_prev, s_cur = 2, t
            for _ in range(m - 1):
                s_prev, s_cur = s_cur, t * s_cur - q * s_prev
            self._ext_orders[m] = q ** m + 1 - s_cur
        return self._ext_orders[m]

    def enumerate_points(self, ctx=None):
        """All points over a small field, sorted in canonical point order."""
        ctx = ctx or self.ctx
        if ctx.order > self.enum_budget:
            raise BudgetError(
                f"field of size {ctx.order} exceeds enumeration budget {self.enum_budget}")
        a, b = self.coeffs_in(ctx)
        pts = [Point(ctx)]
        for k in range(ctx.order):
            x = ctx.element_from_index(k)
            fx = x * x * x + a * x + b
            if not fx:
                pts.append(Point(ctx, x, ctx.zero()))
                continue
            y = ctx.sqrt(fx)
            if y is not None:
                pts.append(Point(ctx, x, y))
                pts.append(Point(ctx, x, -y))
        pts.sort(key=Point.key)
        return pts

    def random_point(self, ctx, rng):
        """Deterministic pseudo-random affine point driven by the caller's rng."""
        a, b = self.coeffs_in(ctx)
        while True:
            x = ctx.elem(tuple(rng.randrange(ctx.p) for _ in range(ctx.m)))
            fx = x * x * x + a * x + b
            if not fx:
                return Point(ctx, x, ctx.zero())
            y = ctx.sqrt(fx)
            if y is not None:
                if rng.randrange(2):
                    y = -y
                return Point(ctx, x, y)

    def point_order(self, P, group_order):
        """Order of P given a multiple of it (typically the group order)."""
        n = group_order
        order = 1
        for r, k in _factorize(n):
            Q = self.mul(n // r ** k, P)
            while not Q.is_infinity:
                Q = self.mul(r, Q)
                order *= r
        return order

    # -- base-field group structure ---------------------------------------------

    def group_structure(self, m=1):
        """Invariant factors (m1, m2) and least verified generators over F_{q^m}."""
        key = ("structure", m)
        if key in self._cache:
            return self._cache[key]
        total = self.order_over_extension(m)
        if total > self.enum_budget:
            raise BudgetError(
                f"group of order {total} exceeds enumeration budget {self.enum_budget}")
        ctx = self.ext_ctx(m)
        pts = self.enumerate_points(ctx)
        m2 = 1
        orders = {}
        for P in pts:
            o = self.point_order(P, total)
            orders[P] = o
            m2 = m2 * o // _gcd(m2, o)
        m1 = total // m2
        G2 = next(P for P in pts if orders[P] == m2)
        if m1 == 1:
            G1 = Point(ctx)
        else:
            G1 = None
            for P in pts:
                if orders[P] != m1:
                    continue
                ok = True
                for r, _ in _factorize(m1):
                    Pr = self.mul(m1 // r, P)
                    sub_r = [self.mul(k * (m2 // r), G2) for k in range(r)]
                    if Pr in sub_r:
                        ok = False
                        break
                if ok:
                    G1 = P
                    break
            if G1 is None:
                raise CurveError("no complement generator found (broken structure)")
        result = GroupStructure(m1, m2, G1, G2)
        self._cache[key] = result
        return result

    # -- ell-primary subgroup over the base field --------------------------------

    def ell_primary_generators(self):
        """Canonical generators [(h, v)] of E(F_q)[ell^oo], orders ascending.

        The least valid points in point order are chosen whenever the subgroup
        is small enough to enumerate; orders and independence are certified by
        Weil pairings rather than trusted from sampling.
        """
        if self._primary is not None:
            return self._primary
        from . import pairing
        ell = self.ell
        total = self.order()
        if total % ell:
            self._primary = []
            return self._primary
        e = v_adic(total, ell)
        cof = total // ell ** e
        rng = random.Random(str(("primary", self.q, self.a.coeffs, self.b.coeffs, ell)))
        best = None
        samples = []
        for _ in range(24 + 4 * e):
            T = self.mul(cof, self.random_point(self.ctx, rng))
            if T.is_infinity:
                continue
            v = self.ell_power_order(T)
            samples.append(T)
            if best is None or v > best[1]:
                best = (T, v)
            if best[1] == e:
                break
        if best is None:
            raise CurveError("sampling failed to find the ell-primary part")
        h2, e2 = best
        e1 = e - e2
        if e1 == 0:
            gens = [(h2, e2)]
        else:
            h1 = None
            for _ in range(48):
                if samples:
                    T = samples.pop()
                else:
                    T = self.mul(cof, self.random_point(self.ctx, rng))
                if T.is_infinity:
                    continue
                v = self.ell_power_order(T)
                if v < e1:
                    continue
                U = self.mul(ell ** (v - e1), T)
                w = pairing.weil_pairing_value(
                    self, self.mul(ell ** (e2 - e1), h2), U, e1)
                if pairing.root_order_is(w, ell, e1):
                    h1 = U
                    break
            if h1 is None:
                raise CurveError("sampling failed to split the ell-primary part")
            gens = [(h1, e1), (h2, e2)]
        if ell ** e <= 4096:
            gens = self._canonical_primary(gens, e1 if e1 else None, e2)
        if len(gens) == 2:
            # corroborate the basis by Tate-pairing nondegeneracy
            d = [self.mul(ell ** (v - 1), h) for h, v in gens]
            mat = [[pairing.tate_pairing(self, d[i], gens[j][0]).exp
                    for j in range(2)] for i in range(2)]
            if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % ell == 0:
                raise CurveError("tate cross-check failed for the pic0 basis (bug)")
        self._primary = gens
        return gens

    def _canonical_primary(self, gens, e1, e2):
        from . import pairing
        ell = self.ell
        table = self._span_table(gens)
        pts = sorted(table, key=Point.key)
        h2 = next(P for P in pts if self.ell_power_order(P) == e2)
        if e1 is None:
            return [(h2, e2)]
        h1 = next(P for P in pts
                  if self.ell_power_order(P) == e1
                  and pairing.root_order_is(
                      pairing.weil_pairing_value(
                          self, self.mul(ell ** (e2 - e1), h2), P, e1),
                      ell, e1))
        return [(h1, e1), (h2, e2)]

    def _span_table(self, gens):
        """Dict point -> coordinates over the span of [(h, v)] generators."""
        table = {Point(self.ctx): ()}
        for h, v in gens:
            new = {}
            for P, coords in table.items():
                Q = P
                for i in range(self.ell ** v):
                    new.setdefault(Q, coords + (i,))
                    Q = self.add(Q, h)
            table = new
        return table

    def pic0_basis(self):
        """Generators of Pic0/ell: canonical ell-primary generators with v >= 1."""
        return [(h, v) for h, v in self.ell_primary_generators() if v >= 1]

    def pic0_rank(self):
        return len(self.pic0_basis())

    def pic0_coordinates(self, P):
        """Coordinates of P mod ell*E(F_q) in the canonical Pic0/ell basis."""
        if P.ctx != self.ctx:
            raise CurveError("pic0 coordinates are for base-field points")
        gens = self.pic0_basis()
        if not gens:
            return ()
        ell = self.ell
        total = self.order()
        e = v_adic(total, ell)
        cof = total // ell ** e
        u = pow(cof, -1, ell ** e)
        PL = self.mul(u * cof, P)  # projection onto the ell-primary part
        coords = self._primary_dlog(PL)
        return tuple(c % ell for c in coords)

    def _primary_dlog(self, W):
        gens = self.ell_primary_generators()
        if not gens:
            if W.is_infinity:
                return ()
            raise CurveError("point is not in the (trivial) ell-primary subgroup")
        if "primary_table" not in self._cache:
            self._cache["primary_table"] = self._span_table(gens)
        table = self._cache["primary_table"]
        if W not in table:
            raise CurveError("point is not in the ell-primary subgroup")
        return table[W]

    def is_divisible(self, P, n):
        """True iff P lies in n*E(F_q)."""
        if P.ctx != self.ctx:
            raise CurveError("is_divisible tests rational points")
        total = self.order()
        if _gcd(n, total) == 1:
            return True
        if n == self.ell:
            return all(c == 0 for c in self.pic0_coordinates(P))
        struct = self.group_structure()
        x, y = self._structure_dlog(P, struct)
        return x % _gcd(n, struct.m1) == 0 and y % _gcd(n, struct.m2) == 0

    def _structure_dlog(self, P, struct):
        if "structure_table" not in self._cache:
            table = {}
            Qi = Point(self.ctx)
            for i in range(struct.m1):
                Q = Qi
                for j in range(struct.m2):
                    table.setdefault(Q, (i, j))
                    Q = self.add(Q, struct.G2)
                Qi = self.add(Qi, struct.G1)
            self._cache["structure_table"] = table
        return self._cache["structure_table"][P]

    # -- torsion chains -----------------------------------------------------------

    def torsion_chain(self, level):
        """Canonical compatible bases of E[ell^k], k <= level, over one field."""
        if level not in self._chains:
            self._chains[level] = _TorsionChain(self, level)
        return self._chains[level]

    def torsion_basis(self, n):
        """(m, P1, P2): minimal extension degree and canonical basis of E[ell^n]."""
        chain = self.torsion_chain(n)
        P1, P2 = chain.basis(n)
        return chain.degree, P1, P2

    def divide_point(self, P, n):
        """(m, Q) with ell^n * Q = P over a minimal extension, Q least in point order."""
        if P.ctx != self.ctx:
            raise CurveError("divide_point expects a rational point")
        ell = self.ell
        if P.is_infinity:
            return 1, Point(self.ctx)
        vP = self.ell_power_order(P)
        L = n + vP
        chain = self.torsion_chain(L)
        a, b = chain.dlog(self.lift_point(P, chain.ctx), L)
        modL = ell ** L
        q0 = ((a // ell ** n) % modL, (b // ell ** n) % modL)
        B1, B2 = chain.basis(L)
        G = chain.frobenius_matrix(L)
        for m in _divisors(chain.degree):
            Gm = _matpow2(G, m, modL)
            A = [[Gm[0][0] - 1, Gm[0][1]], [Gm[1][0], Gm[1][1] - 1]]
            rhs = modmatrix.matvec(A, q0, modL)
            scaled = [[(ell ** vP * x) % modL for x in row] for row in A]
            sol = modmatrix.solve_mod(scaled, [(-r) % modL for r in rhs], ell, L)
            if sol is None:
                continue
            t0, kernel = sol
            modn = ell ** n
            base = (t0[0] % modn, t0[1] % modn)
            seen = {base}
            stack = [base]
            while stack and len(seen) <= 4096:
                cur = stack.pop()
                for gvec in kernel:
                    nxt = ((cur[0] + gvec[0]) % modn, (cur[1] + gvec[1]) % modn)
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            best = None
            for t in sorted(seen):
                coords = ((q0[0] + ell ** vP * t[0]) % modL,
                          (q0[1] + ell ** vP * t[1]) % modL)
                Q = self.add(self.mul(coords[0], B1), self.mul(coords[1], B2))
                if best is None or Q.key() < best.key():
                    best = Q
            return m, self.lower_point(best, self.ext_ctx(m))
        raise CurveError("no division field found inside the chain (bug)")


class _TorsionChain:
    """Bases of E[ell^k] for k = 1..level, all over F_{q^(m_level)}.

    ell * basis(k+1)[i] = basis(k)[i] by construction, so the Frobenius matrix
    at level k is the level-`level` matrix reduced mod ell^k.
    """

    MAX_SAMPLES = 48

    def __init__(self, curve, level):
        self.curve = curve
        self.level = level
        self.ell = curve.ell
        ell = curve.ell
        found = None
        for m in range(1, curve.ext_cap + 1):
            if curve.order_over_extension(m) % ell ** (2 * level):
                continue
            if (curve.q ** m - 1) % ell ** level:
                continue
            got = self._try_field(m)
            if got is not None:
                found = (m, got)
                break
        if found is None:
            raise ExtensionCapError(
                f"E[{ell}^{level}] not found within extension cap {curve.ext_cap}")
        self.degree, (U1, U2) = found
        self.ctx = curve.ext_ctx(self.degree)
        self._master = (U1, U2)
        self._bases = {}
        self._canon = None
        self._canonicalize()
        self._frob = self._compute_frobenius()

    def _try_field(self, m):
        """A certified (sampled) basis of E[ell^level] over F_{q^m}, or None."""
        from . import pairing
        curve, ell, level = self.curve, self.ell, self.level
        try:
            ctx = curve.ext_ctx(m)
        except ExtensionCapError:
            return None
        total = curve.order_over_extension(m)
        e = v_adic(total, ell)
        cof = total // ell ** e
        rng = random.Random(str(("chain", curve.q, curve.a.coeffs, curve.b.coeffs,
                                 ell, level, m)))
        U1 = None
        for _ in range(self.MAX_SAMPLES):
            T = curve.mul(cof, curve.random_point(ctx, rng))
            if T.is_infinity:
                continue
            v = curve.ell_power_order(T)
            if v < level:
                continue
            U = curve.mul(ell ** (v - level), T)
            if U1 is None:
                U1 = U
                continue
            w = pairing.weil_pairing_value(curve, U1, U, level)
            if pairing.root_order_is(w, ell, level):
                return U1, U
        return None

    def _canonicalize(self):
        from . import pairing
        curve, ell = self.curve, self.ell
        U1, U2 = self._master
        V1 = curve.mul(ell ** (self.level - 1), U1)
        V2 = curve.mul(ell ** (self.level - 1), U2)
        table = {}
        Pi = curve.infinity(self.ctx)
        for i in range(ell):
            Pj = Pi
            for j in range(ell):
                table[Pj] = (i, j)
                Pj = curve.add(Pj, V2)
            Pi = curve.add(Pi, V1)
        self._ell_table = table
        pts = sorted(table, key=Point.key)
        A1 = next(P for P in pts if not P.is_infinity)
        A2 = None
        for P in pts:
            if P.is_infinity:
                continue
            w = pairing.weil_pairing_value(curve, A1, P, 1)
            if pairing.root_order_is(w, ell, 1):
                A2 = P
                break
        if A2 is None:
            raise CurveError("no independent partner in E[ell] (bug)")
        self._bases[1] = (A1, A2)
        for k in range(1, self.level):
            self._bases[k + 1] = (self._least_lift(self._bases[k][0]),
                                  self._least_lift(self._bases[k][1]))

    def _master_dlog(self, W):
        """Coordinates of W in the sampled master basis, by ell-adic recursion."""
        curve, ell = self.curve, self.ell
        U1, U2 = self._master

        def rec(W, k):
            if k == 0:
                if not W.is_infinity:
                    raise CurveError("dlog: point is not in E[ell^level]")
                return 0, 0
            a1, b1 = rec(curve.mul(ell, W), k - 1)
            lift1 = curve.mul(ell ** (self.level - k), U1)
            lift2 = curve.mul(ell ** (self.level - k), U2)
            R = curve.sub(W, curve.add(curve.mul(a1, lift1), curve.mul(b1, lift2)))
            if R not in self._ell_table:
                raise CurveError("dlog: point is not in E[ell^level]")
            i, j = self._ell_table[R]
            return a1 + i * ell ** (k - 1), b1 + j * ell ** (k - 1)

        return rec(W, self.level)

    def _least_lift(self, A):
        """The least X with ell*X = A (A a chain point below the top level)."""
        curve, ell = self.curve, self.ell
        U1, U2 = self._master
        a, b = self._master_dlog(A)
        if a % ell or b % ell:
            raise CurveError("lift: coordinates not divisible (bug)")
        X0 = curve.add(curve.mul(a // ell, U1), curve.mul(b // ell, U2))
        best = None
        V1 = curve.mul(ell ** (self.level - 1), U1)
        V2 = curve.mul(ell ** (self.level - 1), U2)
        Ti = curve.infinity(self.ctx)
        for _ in range(ell):
            Tj = Ti
            for _ in range(ell):
                cand = curve.add(X0, Tj)
                if best is None or cand.key() < best.key():
                    best = cand
                Tj = curve.add(Tj, V2)
            Ti = curve.add(Ti, V1)
        return best

    def basis(self, k):
        return self._bases[k]

    def dlog(self, W, k):
        """Coordinates of W in basis(k), for W in E[ell^k] over the chain field."""
        a, b = self._master_dlog(W)
        ell = self.ell
        if self._canon is None:
            P1, P2 = self._bases[self.level]
            self._canon = (self._master_dlog(P1), self._master_dlog(P2))
        (a1, b1), (a2, b2) = self._canon
        sol = modmatrix.solve_mod([[a1, a2], [b1, b2]], [a, b], ell, self.level)
        if sol is None:
            raise CurveError("dlog: change of basis failed (bug)")
        (x, y), _ = sol
        scale = ell ** (self.level - k)
        if x % scale or y % scale:
            raise CurveError("dlog: point is not in E[ell^k]")
        return (x // scale) % ell ** k, (y // scale) % ell ** k

    def _compute_frobenius(self):
        curve = self.curve
        P1, P2 = self._bases[self.level]
        c1 = self.dlog(curve.frobenius_point(P1), self.level)
        c2 = self.dlog(curve.frobenius_point(P2), self.level)
        return ((c1[0], c2[0]), (c1[1], c2[1]))

    def frobenius_matrix(self, k):
        """Matrix of the coordinate q-power map on basis(k), mod ell^k."""
        mod = self.ell ** k
        return tuple(tuple(x % mod for x in row) for row in self._frob)

    def min_degree(self, k):
        """Minimal m with E[ell^k] rational over F_{q^m}: the order of G mod ell^k."""
        mod = self.ell ** k
        G = self.frobenius_matrix(k)
        M = G
        for m in range(1, self.curve.ext_cap + 1):
            if M == ((1, 0), (0, 1)):
                return m
            M = _matmul2(M, G, mod)
        raise ExtensionCapError("no rationality degree within the cap (bug)")


def _matmul2(A, B, mod):
    return (((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % mod,
             (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % mod),
            ((A[1][0] * B[0][0] + A[1][1] * B[1][0]) % mod,
             (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % mod))


def _matpow2(A, e, mod):
    R = ((1, 0), (0, 1))
    B = tuple(tuple(x % mod for x in row) for row in A)
    while e:
        if e & 1:
            R = _matmul2(R, B, mod)
        B = _matmul2(B, B, mod)
        e >>= 1
    return R


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _factorize(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def curve_new(ctx, a, b, ext_cap=64, enum_budget=10 ** 4):
    """Construct a curve; errors on singular input or a non-prime base field."""
    return EllipticCurve(ctx, a, b, ext_cap=ext_cap, enum_budget=enum_budget)
