"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``). Coefficients are ``Fraction`` or
``FieldElement``; the helpers never inspect the type beyond arithmetic and
comparison with ``0``.
"""
from __future__ import annotations

from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else None
        b = q[i] if i < len(q) else None
        out.append(b if a is None else a if b is None else a + b)
    return trim(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    return trim([a * c for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            t = a * b
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = p[0] * 0
    return trim([zero if c is None else c for c in out])


def divmod_poly(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    if len(r) < len(q):
        return [], r
    inv_lead = 1 / q[-1] if not isinstance(q[-1], int) else Fraction(1, q[-1])
    quot = [q[-1] * 0] * (len(r) - len(q) + 1)
    while len(r) >= len(q) and r:
        shift = len(r) - len(q)
        c = r[-1] * inv_lead
        quot[shift] = c
        for i, b in enumerate(q):
            r[i + shift] = r[i + shift] - c * b
        r = trim(r)
    return trim(quot), r


def rem(p, q):
    return divmod_poly(p, q)[1]


def monic(p):
    p = trim(p)
    if not p:
        return p
    inv = 1 / p[-1]
    return [c * inv for c in p]


def gcd(p, q):
    a, b = trim(p), trim(q)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def xgcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q = g`` and ``g`` monic."""
    one = (p[0] * 0 + 1) if p else (q[0] * 0 + 1)
    r0, r1 = trim(p), trim(q)
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        quo, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return [c * inv for c in r0], scale(s0, inv), scale(t0, inv)


def evaluate(p, x):
    acc = None
    for c in reversed(p):
        acc = c if acc is None else acc * x + c
    return x * 0 if acc is None else acc


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def from_roots(roots):
    out = [Fraction(1)]
    for r in roots:
        out = mul(out, [-r, r * 0 + 1])
    return out


def interpolate(xs, ys):
    """Lagrange interpolation through ``(xs[i], ys[i])``; ``xs`` distinct."""
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [yi * 0 + 1]
        denom = yi * 0 + 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = mul(basis, [-xj, xj * 0 + 1])
                denom = denom * (xi - xj)
        out = add(out, scale(basis, yi / denom))
    return out


def is_squarefree(p) -> bool:
    return degree(gcd(p, derivative(p))) == 0
