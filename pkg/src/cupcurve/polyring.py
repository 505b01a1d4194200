"""Small polynomial helpers over a FieldContext: gcd, powmod, root finding.

Polynomials are lists of FieldElement, least degree first.  Only used at desk
scale (moduli of small degree, division quartics), so clarity beats speed.
"""

from __future__ import annotations


def trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def is_zero(f):
    return not trim(f)


def monic(ctx, f):
    f = trim(f)
    if not f:
        return f
    inv = f[-1].inverse()
    return [c * inv for c in f]


def mul(ctx, f, g):
    if not f or not g:
        return []
    res = [ctx.zero() for _ in range(len(f) + len(g) - 1)]
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                res[i + j] = res[i + j] + fi * gj
    return res


def divmod_poly(ctx, f, g):
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ctx.zero() for _ in range(max(len(f) - len(g) + 1, 0))]
    r = list(f)
    inv_lead = g[-1].inverse()
    while len(r) >= len(g) and trim(r):
        r = trim(r)
        if len(r) < len(g):
            break
        d = len(r) - len(g)
        c = r[-1] * inv_lead
        q[d] = c
        for j, gj in enumerate(g):
            r[d + j] = r[d + j] - c * gj
        r = trim(r)
    return q, trim(r)


def gcd(ctx, f, g):
    f, g = trim(f), trim(g)
    while g:
        _, r = divmod_poly(ctx, f, g)
        f, g = g, r
    return monic(ctx, f)


def powmod(ctx, f, e, mod):
    _, result = divmod_poly(ctx, [ctx.one()], mod)
    result = [ctx.one()]
    _, base = divmod_poly(ctx, f, mod)
    while e:
        if e & 1:
            _, result = divmod_poly(ctx, mul(ctx, result, base), mod)
        base2 = mul(ctx, base, base)
        _, base = divmod_poly(ctx, base2, mod)
        e >>= 1
    return result


def roots(ctx, f):
    """All distinct roots of f in ctx, by deterministic Cantor-Zassenhaus."""
    f = monic(ctx, trim(f))
    if len(f) <= 1:
        return []
    out = []
    if not f[0]:
        out.append(ctx.zero())
        while f and not f[0]:
            f = f[1:]
    if len(f) <= 1:
        return out
    x = [ctx.zero(), ctx.one()]
    xq = powmod(ctx, x, ctx.order, f)
    lin = trim([a - b for a, b in
                zip(xq + [ctx.zero()] * len(f), x + [ctx.zero()] * len(f))])
    g = gcd(ctx, lin, f)
    stack = [g]
    while stack:
        h = monic(ctx, stack.pop())
        if len(h) <= 1:
            continue
        if len(h) == 2:
            out.append(-h[0])
            continue
        q = ctx.order
        k = 0
        while True:
            delta = ctx.element_from_index(k)
            k += 1
            t = powmod(ctx, [delta, ctx.one()], (q - 1) // 2, h)
            t = trim([(t[i] if i < len(t) else ctx.zero()) -
                      (ctx.one() if i == 0 else ctx.zero())
                      for i in range(max(len(t), 1))])
            d = gcd(ctx, t, h)
            if 0 < len(d) - 1 < len(h) - 1:
                stack.append(d)
                stack.append(divmod_poly(ctx, h, d)[0])
                break
    return out


def eval_poly(ctx, f, x):
    acc = ctx.zero()
    for c in reversed(f):
        acc = acc * x + c
    return acc
