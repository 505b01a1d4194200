"""Linear algebra over Z/ell^N via Smith normal form, for tiny matrices.

The torsion machinery only ever solves systems of shape 2 x k with k <= 8,
so everything here is plain integer code with deterministic pivoting.
"""

from __future__ import annotations


def _val(x, ell, cap):
    x = int(x)
    if x == 0:
        return cap
    v = 0
    while x % ell == 0 and v < cap:
        x //= ell
        v += 1
    return v


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(A, ell, N):
    """U A V = D over Z/ell^N with D diagonal, diag entries exact ell powers.

    Returns (diag, U, V) where diag is the list of diagonal entries (length
    min(rows, cols), trailing zeros for ranks below that) and U, V are square
    unimodular matrices mod ell^N.  Deterministic pivoting: smallest
    valuation, then row-major position.
    """
    mod = ell ** N
    A = [[int(x) % mod for x in row] for row in A]
    rows, cols = len(A), len(A[0])
    U, V = _identity(rows), _identity(cols)
    for t in range(min(rows, cols)):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] % mod:
                    v = _val(A[i][j], ell, N)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, bi, bj = best
        if bi != t:
            A[t], A[bi] = A[bi], A[t]
            U[t], U[bi] = U[bi], U[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
            for row in V:
                row[t], row[bj] = row[bj], row[t]
        # scale row t so the pivot is exactly ell^v
        unit = A[t][t] // ell ** v
        w = pow(unit, -1, mod)
        A[t] = [x * w % mod for x in A[t]]
        U[t] = [x * w % mod for x in U[t]]
        # clear column t with row operations
        for i in range(rows):
            if i != t and A[i][t]:
                c = A[i][t] // ell ** v
                A[i] = [(a - c * b) % mod for a, b in zip(A[i], A[t])]
                U[i] = [(a - c * b) % mod for a, b in zip(U[i], U[t])]
        # clear row t with column operations (column t is e_t * ell^v now)
        for j in range(cols):
            if j != t and A[t][j]:
                c = A[t][j] // ell ** v
                for row in A:
                    row[j] = (row[j] - c * row[t]) % mod
                for row in V:
                    row[j] = (row[j] - c * row[t]) % mod
    diag = [A[t][t] for t in range(min(rows, cols))]
    return diag, U, V


def solve_mod(A, b, ell, N):
    """One solution x of A x = b over Z/ell^N, with kernel generators.

    Returns (x, kernel) or None when the system is inconsistent.  x is a
    tuple of length cols; kernel is a list of tuples spanning ker(A).
    """
    mod = ell ** N
    rows, cols = len(A), len(A[0])
    diag, U, V = smith_normal_form(A, ell, N)
    y = [sum(U[i][k] * int(b[k]) for k in range(rows)) % mod for i in range(rows)]
    xprime = [0] * cols
    free = []  # (column index, kernel scale)
    for t in range(cols):
        d = diag[t] if t < len(diag) else 0
        yt = y[t] if t < rows else 0
        if d == 0:
            if yt % mod:
                return None
            free.append((t, 1))
            continue
        v = _val(d, ell, N)
        if yt % (ell ** v):
            return None
        xprime[t] = (yt // ell ** v) % mod
        if v > 0:
            free.append((t, ell ** (N - v)))
    for t in range(cols, rows):
        if y[t] % mod:
            return None
    x = tuple(sum(V[i][t] * xprime[t] for t in range(cols)) % mod
              for i in range(cols))
    kernel = []
    for t, scale in free:
        gen = tuple(V[i][t] * scale % mod for i in range(cols))
        if any(gen):
            kernel.append(gen)
    return x, kernel


def matvec(M, v, mod):
    return tuple(sum(M[i][j] * int(v[j]) for j in range(len(v))) % mod
                 for i in range(len(M)))


def matmul(A, B, mod):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) % mod for j in range(m)]
            for i in range(n)]


def mat_inverse_mod(M, mod):
    """Inverse of a square matrix over Z/mod (mod a prime power here)."""
    n = len(M)
    A = [[int(x) % mod for x in row] + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            try:
                pow(A[r][col], -1, mod)
                piv = r
                break
            except ValueError:
                continue
        if piv is None:
            raise ValueError("matrix is not invertible modulo %d" % mod)
        A[col], A[piv] = A[piv], A[col]
        inv = pow(A[col][col], -1, mod)
        A[col] = [x * inv % mod for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                c = A[r][col]
                A[r] = [(a - c * b) % mod for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]


def rank_mod_prime(A, ell):
    """Rank of A over the field Z/ell."""
    A = [[int(x) % ell for x in row] for row in A]
    rank = 0
    rows, cols = len(A), len(A[0]) if A else 0
    col = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if A[r][col] % ell:
                piv = r
                break
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][col], -1, ell)
        A[rank] = [x * inv % ell for x in A[rank]]
        for r in range(rows):
            if r != rank and A[r][col]:
                c = A[r][col]
                A[r] = [(a - c * b) % ell for a, b in zip(A[r], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
