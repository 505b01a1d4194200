"""Finite prime fields F_p, their extensions F_{p^m}, and l-th roots of unity.

Elements of F_{p^m} are coefficient tuples (least degree first) modulo a
deterministic modulus: the first monic irreducible polynomial of degree m in
lexicographic order on coefficient sequences.  Every other choice made here
(multiplicative generator, canonical root of unity, subfield embedding) is
deterministic as well, so results are bit-reproducible across runs.

Contexts and elements are immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

import functools

import numpy as np

_NUMPY_MIN_DEGREE = 16  # below this, schoolbook tuple arithmetic wins


class FieldError(ValueError):
    """Invalid field construction or element operation."""


class ExtensionCapError(FieldError):
    """An extension-degree search exceeded the configured cap."""


def is_prime(n):
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers mod p (modulus search, irreducibility)

def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mulmod(f, g, mod, p):
    """f*g mod (mod, p); all inputs/outputs are int lists, least degree first."""
    res = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                res[i + j] = (res[i + j] + fi * gj) % p
    return _poly_reduce(res, mod, p)


def _poly_reduce(f, mod, p):
    m = len(mod) - 1
    f = [c % p for c in f]
    for i in range(len(f) - 1, m - 1, -1):
        c = f[i]
        if c:
            f[i] = 0
            for j in range(m):
                f[i - m + j] = (f[i - m + j] - c * mod[j]) % p
    del f[m:]
    while len(f) < m:
        f.append(0)
    return f


def _poly_powmod(f, e, mod, p):
    result = [1] + [0] * (len(mod) - 2)
    base = _poly_reduce(list(f), mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(f, g, p):
    f, g = _poly_trim(list(f)), _poly_trim(list(g))
    while g:
        inv = pow(g[-1], p - 2, p)
        g_monic = [c * inv % p for c in g]
        # f mod g_monic
        r = list(f)
        while len(r) >= len(g_monic) and _poly_trim(r):
            d = len(r) - len(g_monic)
            c = r[-1]
            for j, gj in enumerate(g_monic):
                r[d + j] = (r[d + j] - c * gj) % p
            _poly_trim(r)
        f, g = g, r
    return _poly_trim(f)


def _frobenius_power_matrix(f, p):
    """Matrix of a -> a^p mod f as columns x^(jp) mod f, via numpy."""
    m = len(f) - 1
    # reduction rows: x^(m+i) mod f
    rows = []
    cur = [(-c) % p for c in f[:m]]
    rows.append(list(cur))
    for _ in range(m - 2):
        top = cur[m - 1]
        cur = [0] + cur[:m - 1]
        if top:
            cur = [(a + top * b) % p for a, b in zip(cur, rows[0])]
        rows.append(list(cur))
    red = np.array(rows, dtype=np.int64) if rows else np.zeros((0, m), dtype=np.int64)

    def mulmod(a, b):
        prod = np.convolve(a, b)
        head, tail = prod[:m], prod[m:]
        if tail.size:
            head = head + tail @ red[:tail.size]
        return head % p

    x = np.zeros(m, dtype=np.int64)
    if m == 1:
        return np.array([[1]], dtype=np.int64)
    x[1] = 1
    xp = np.zeros(m, dtype=np.int64)
    xp[0] = 1
    e = p
    base = x
    while e:
        if e & 1:
            xp = mulmod(xp, base)
        base = mulmod(base, base)
        e >>= 1
    cols = [np.zeros(m, dtype=np.int64)]
    cols[0][0] = 1
    for _ in range(m - 1):
        cols.append(mulmod(cols[-1], xp))
    return np.column_stack(cols)


def _is_irreducible(f, p):
    """Rabin test: x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1."""
    m = len(f) - 1
    if m <= 0 or f[-1] != 1:
        return False
    if m == 1:
        return True
    F = _frobenius_power_matrix(f, p)
    x = np.zeros(m, dtype=np.int64)
    x[1] = 1
    powers = {}
    h = x
    needed = {m}
    mm, r = m, 2
    while mm > 1:
        while mm % r:
            r += 1
        needed.add(m // r)
        mm //= r
    for i in range(1, m + 1):
        h = (F @ h) % p
        if i in needed:
            powers[i] = h.copy()
    if _poly_trim([int(c) for c in (powers[m] - x) % p]):
        return False
    for k in needed - {m}:
        diff = [int(c) for c in (powers[k] - x) % p]
        if len(_poly_gcd(diff, f, p)) != 1:
            return False
    return True


def _first_irreducible(p, m):
    """First monic irreducible of degree m, lex order on (c0, c1, ...)."""
    # idx digits, most significant first, spell out (c0, ..., c_{m-1}); start
    # at c0 = 1 since c0 = 0 means x divides the candidate
    for idx in range(p ** (m - 1), p ** m):
        coeffs = []
        k = idx
        for i in range(m - 1, -1, -1):
            d, k = divmod(k, p ** i)
            coeffs.append(d)
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible of degree {m} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------


class FieldContext:
    """The field F_{p^m} with a distinguished l-th root of unity zeta0 in F_p.

    Use :func:`make_context` rather than constructing directly; contexts are
    cached so equal parameters give the identical object.
    """

    def __init__(self, p, ell, m=1, degree_cap=64):
        if not is_prime(p):
            raise FieldError(f"p = {p} is composite")
        if not is_prime(ell):
            raise FieldError(f"ell = {ell} is not prime")
        if (p - 1) % ell != 0:
            raise FieldError(f"ell = {ell} does not divide p - 1 = {p - 1}")
        if m < 1:
            raise FieldError(f"extension degree m = {m} must be >= 1")
        if m > degree_cap:
            raise ExtensionCapError(
                f"extension degree {m} exceeds the configured cap {degree_cap}")
        self.p = p
        self.ell = ell
        self.m = m
        self.order = p ** m
        self.modulus = None if m == 1 else _first_irreducible(p, m)
        g = 2
        while pow(g, (p - 1) // ell, p) == 1:
            g += 1
        self.mu_generator_base = g
        self.zeta0 = pow(g, (p - 1) // ell, p)
        self._red = None
        self._frob_matrices = {}
        self._embeddings = {}
        if m >= 2:
            # rows[i]: coefficients of x^(m+i) mod modulus, for fast reduction
            rows = []
            cur = [(-c) % p for c in self.modulus[:m]]
            rows.append(list(cur))
            for _ in range(m - 2):
                top = cur[m - 1]
                cur = [0] + cur[:m - 1]
                if top:
                    cur = [(a + top * b) % p for a, b in zip(cur, rows[0])]
                rows.append(list(cur))
            self._red_rows = rows
            if m >= _NUMPY_MIN_DEGREE:
                self._red = np.array(rows, dtype=np.int64)

    def __repr__(self):
        if self.m == 1:
            return f"F({self.p})"
        return f"F({self.p}^{self.m})"

    def __eq__(self, other):
        return (isinstance(other, FieldContext)
                and (self.p, self.ell, self.m) == (other.p, other.ell, other.m))

    def __hash__(self):
        return hash((self.p, self.ell, self.m))

    # -- element constructors ------------------------------------------------

    def elem(self, value):
        """Coerce an int, coefficient sequence or subfield constant."""
        if isinstance(value, FieldElement):
            if value.ctx is self:
                return value
            if value.ctx.p == self.p and value.ctx.m == 1:
                return self.elem(value.coeffs[0])
            raise FieldError(f"cannot coerce element of {value.ctx} into {self}")
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.m:
            raise FieldError(f"coefficient sequence longer than degree {self.m}")
        return FieldElement(self, coeffs + (0,) * (self.m - len(coeffs)))

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def zeta(self):
        """The canonical generator zeta0 of the l-th roots of unity."""
        return self.elem(self.zeta0)

    def gen(self):
        """The class of x, a root of the modulus (m >= 2)."""
        if self.m == 1:
            raise FieldError("prime field has no polynomial generator")
        return self.elem((0, 1))

    def element_from_index(self, k):
        """The k-th element in base-p digit order (deterministic enumeration)."""
        coeffs = []
        for _ in range(self.m):
            k, rem = divmod(k, self.p)
            coeffs.append(rem)
        return self.elem(coeffs)

    # -- raw coefficient arithmetic -------------------------------------------

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return (a[0] * b[0] % p,)
        if self._red is not None:
            prod = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            head = prod[:m]
            tail = prod[m:]
            if tail.size:
                head = head + tail @ self._red[:tail.size]
            return tuple(int(c) for c in head % p)
        # schoolbook for small degrees
        res = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        for i in range(2 * m - 2, m - 1, -1):
            c = res[i] % p
            if c:
                row = self._red_rows[i - m]
                for j in range(m):
                    res[j] += c * row[j]
            res[i] = 0
        return tuple(c % p for c in res[:m])

    def _inv(self, a):
        p, m = self.p, self.m
        if not any(a):
            raise ZeroDivisionError("field inversion of zero")
        if m == 1:
            return (pow(a[0], p - 2, p),)
        # extended Euclid in F_p[x]
        r0 = list(self.modulus)
        r1 = _poly_trim(list(a))
        t0, t1 = [], [1]
        while r1:
            # divide r0 by r1
            q = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            r = list(r0)
            inv_lead = pow(r1[-1], p - 2, p)
            while len(r) >= len(r1) and _poly_trim(r):
                d = len(r) - len(r1)
                c = r[-1] * inv_lead % p
                q[d] = c
                for j, gj in enumerate(r1):
                    r[d + j] = (r[d + j] - c * gj) % p
                _poly_trim(r)
            # t0 - q*t1
            qt1 = [0] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        qt1[i + j] = (qt1[i + j] + qi * tj) % p
            new_t = [( (t0[i] if i < len(t0) else 0) - (qt1[i] if i < len(qt1) else 0)) % p
                     for i in range(max(len(t0), len(qt1)) or 1)]
            r0, r1 = _poly_trim(list(r1)), r
            t0, t1 = t1, _poly_trim(new_t)
        lead_inv = pow(r0[-1], p - 2, p)
        res = [c * lead_inv % p for c in t0]
        res += [0] * (m - len(res))
        return tuple(res[:m])

    def _pow(self, a, e):
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = self.one().coeffs
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    # -- field maps ------------------------------------------------------------

    def frobenius_matrix(self):
        """Matrix of a -> a^p on the polynomial basis (cached numpy array)."""
        if 1 not in self._frob_matrices:
            f = [c for c in self.modulus]
            self._frob_matrices[1] = _frobenius_power_matrix(f, self.p)
        return self._frob_matrices[1]

    def frobenius(self, a, k=1):
        """Apply a -> a^(p^k).  a may be a FieldElement or coefficient tuple."""
        coeffs = a.coeffs if isinstance(a, FieldElement) else a
        k %= self.m
        if self.m == 1 or k == 0:
            return a if isinstance(a, FieldElement) else coeffs
        F = self.frobenius_matrix()
        vec = np.array(coeffs, dtype=np.int64)
        for _ in range(k):
            vec = (F @ vec) % self.p
        out = tuple(int(c) for c in vec)
        return FieldElement(self, out) if isinstance(a, FieldElement) else out

    def sqrt(self, a):
        """A deterministic square root of a, or None if a is a non-residue.

        Returns the root whose coefficient tuple is smallest.
        """
        if isinstance(a, FieldElement):
            a = a.coeffs
        if not any(a):
            return self.elem(0)
        q = self.order
        if self._pow(a, (q - 1) // 2) != self.one().coeffs:
            return None
        if q % 4 == 3:
            r = self._pow(a, (q + 1) // 4)
        else:
            # Tonelli-Shanks with a deterministic non-residue
            s, t = 0, q - 1
            while t % 2 == 0:
                t //= 2
                s += 1
            k = 2
            while True:
                z = self.element_from_index(k).coeffs
                if any(z) and self._pow(z, (q - 1) // 2) != self.one().coeffs:
                    break
                k += 1
            c = self._pow(z, t)
            r = self._pow(a, (t + 1) // 2)
            u = self._pow(a, t)
            mm = s
            one = self.one().coeffs
            while u != one:
                d = u
                i = 0
                while d != one:
                    d = self._mul(d, d)
                    i += 1
                b = c
                for _ in range(mm - i - 1):
                    b = self._mul(b, b)
                r = self._mul(r, b)
                c = self._mul(b, b)
                u = self._mul(u, c)
                mm = i
        neg = self._neg(r)
        best = min(r, neg)
        return FieldElement(self, best)

    def multiplicative_order_divides(self, a, n):
        one = self.one().coeffs
        coeffs = a.coeffs if isinstance(a, FieldElement) else a
        return self._pow(coeffs, n) == one


class FieldElement:
    """An element of F_{p^m}: a coefficient tuple against the context modulus."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def __repr__(self):
        return ",".join(str(c) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ctx.elem(other)
        return (isinstance(other, FieldElement) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ctx.elem(other)
        if isinstance(other, FieldElement):
            if other.ctx is self.ctx or other.ctx == self.ctx:
                return other
            if other.ctx.m == 1 and other.ctx.p == self.ctx.p:
                return self.ctx.elem(other.coeffs[0])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(o.coeffs, self.coeffs))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.coeffs, self.ctx._inv(o.coeffs)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(o.coeffs, self.ctx._inv(self.coeffs)))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx._pow(self.coeffs, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx._inv(self.coeffs))

    def in_prime_field(self):
        return not any(self.coeffs[1:])


class MuRoot:
    """An l-th root of unity written as an exponent of the canonical zeta0."""

    __slots__ = ("ell", "exp")

    def __init__(self, ell, exp):
        self.ell = ell
        self.exp = exp % ell

    def __repr__(self):
        return f"zeta0^{self.exp}"

    def __eq__(self, other):
        return (isinstance(other, MuRoot) and self.ell == other.ell
                and self.exp == other.exp)

    def __hash__(self):
        return hash((self.ell, self.exp))

    def __add__(self, other):
        if self.ell != other.ell:
            raise FieldError("mixed root-of-unity levels")
        return MuRoot(self.ell, self.exp + other.exp)

    def __sub__(self, other):
        if self.ell != other.ell:
            raise FieldError("mixed root-of-unity levels")
        return MuRoot(self.ell, self.exp - other.exp)

    def __neg__(self):
        return MuRoot(self.ell, -self.exp)

    def __rmul__(self, k):
        return MuRoot(self.ell, k * self.exp)

    def is_trivial(self):
        return self.exp == 0

    def to_field(self, ctx):
        return ctx.zeta() ** self.exp


@functools.lru_cache(maxsize=None)
def make_context(p, ell, m=1, degree_cap=64):
    """Deterministic field context for F_{p^m} with mu_ell machinery.

    Raises FieldError for composite p or when ell does not divide p - 1, and
    ExtensionCapError when m exceeds degree_cap.
    """
    return FieldContext(int(p), int(ell), int(m), degree_cap=int(degree_cap))


def canonical_mu_generator(ctx):
    """zeta0 = g^((p-1)/ell) for the least non-l-th-power g in {2, 3, ...}."""
    return ctx.elem(ctx.zeta0)


def chi(ctx, x):
    """Exponent map F_p* -> Z/ell: chi(x) = e with x^((p-1)/ell) = zeta0^e."""
    x = ctx.elem(x)
    if not x:
        raise FieldError("chi is undefined at 0")
    if not x.in_prime_field():
        raise FieldError("chi expects an element of the prime field")
    p, ell = ctx.p, ctx.ell
    t = pow(x.coeffs[0], (p - 1) // ell, p)
    z = 1
    for e in range(ell):
        if z == t:
            return e
        z = z * ctx.zeta0 % p
    raise FieldError("chi: value is not an l-th root of unity (broken context)")


def mu_dlog(ctx, w):
    """Discrete log of an l-th root of unity w against zeta0, as a MuRoot."""
    ell = ctx.ell
    z = ctx.zeta()
    cur = ctx.one()
    for e in range(ell):
        if cur == w:
            return MuRoot(ell, e)
        cur = cur * z
    raise FieldError("mu_dlog: element is not in mu_ell")


def embed(src, dst, x):
    """Image of x under the deterministic embedding F_{p^m1} -> F_{p^m2}.

    The embedding sends the generator of src to the least root (in
    coefficient-lexicographic order) of src.modulus in dst.  It is a ring
    homomorphism fixing F_p.
    """
    if src.p != dst.p:
        raise FieldError("embeddings require equal characteristic")
    if dst.m % src.m != 0:
        raise FieldError(f"degree {src.m} does not divide {dst.m}")
    x = src.elem(x)
    if src == dst:
        return dst.elem(x.coeffs)
    if src.m == 1:
        return dst.elem(x.coeffs[0])
    key = (src.p, src.m, dst.m)
    table = dst._embeddings.get(key)
    if table is None:
        root = _least_modulus_root(src, dst)
        powers = [dst.one()]
        for _ in range(src.m - 1):
            powers.append(powers[-1] * root)
        table = tuple(powers)
        dst._embeddings[key] = table
    acc = dst.zero()
    for c, pw in zip(x.coeffs, table):
        if c:
            acc = acc + pw * c
    return acc


def _least_modulus_root(src, dst):
    from . import polyring
    f = [dst.elem(c) for c in src.modulus]
    roots = polyring.roots(dst, f)
    if len(roots) != src.m:
        raise FieldError("modulus did not split in the larger field (bad tower)")
    return min(roots, key=lambda r: r.coeffs)


def unembed(src, dst, x):
    """Preimage in src of x in dst under the embedding of :func:`embed`.

    Raises FieldError when x does not lie in the embedded copy of src.
    """
    x = dst.elem(x)
    if src == dst:
        return src.elem(x.coeffs)
    if src.m == 1:
        if any(x.coeffs[1:]):
            raise FieldError("element is not in the prime subfield")
        return src.elem(x.coeffs[0])
    embed(src, dst, src.one())  # make sure the power table exists
    table = dst._embeddings[(src.p, src.m, dst.m)]
    p = dst.p
    # solve sum_i c_i table[i] = x over F_p by Gaussian elimination
    cols = [list(t.coeffs) for t in table]
    rowsn, colsn = dst.m, src.m
    aug = [[cols[j][i] for j in range(colsn)] + [x.coeffs[i]] for i in range(rowsn)]
    pivots = []
    r = 0
    for c in range(colsn):
        piv = next((i for i in range(r, rowsn) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(rowsn):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == colsn:
            break
    # consistency: remaining rows must be zero
    for i in range(r, rowsn):
        if aug[i][-1] % p:
            raise FieldError("element is not in the embedded subfield")
    coeffs = [0] * colsn
    for row_idx, c in enumerate(pivots):
        coeffs[c] = aug[row_idx][-1]
    return src.elem(coeffs)
