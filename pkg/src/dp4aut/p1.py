"""Points of the projective line, Moebius maps, and stabilizers of five points."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import numfield, poly
from .numfield import FieldElement, NumberField

INFINITE_ORDER = None
ORDER_CAP = 60


@dataclass(frozen=True)
class P1Point:
    """``(x : y)`` normalised so the first nonzero coordinate is 1."""

    x: FieldElement
    y: FieldElement

    def __post_init__(self):
        x, y = self.x, self.y
        if x.is_zero() and y.is_zero():
            raise ValueError("(0:0) is not a point of P^1")
        if not x.is_zero():
            x, y = x.field.one, y / x
        else:
            y = y.field.one
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def of(cls, K: NumberField, x, y) -> "P1Point":
        return cls(K(x), K(y))

    @property
    def field(self) -> NumberField:
        return self.x.field

    def embed(self, f) -> "P1Point":
        return P1Point(f(self.x), f(self.y))

    def __repr__(self):
        return f"({numfield.format_element(self.x)}:{numfield.format_element(self.y)})"


@dataclass(frozen=True)
class Mobius:
    """A 2x2 invertible matrix up to scalars, acting on column vectors."""

    m: tuple[tuple[FieldElement, FieldElement], tuple[FieldElement, FieldElement]]

    def __post_init__(self):
        (a, b), (c, d) = self.m
        if (a * d - b * c).is_zero():
            raise ValueError("singular Moebius matrix")
        lead = next(e for e in (a, b, c, d) if not e.is_zero())
        inv = 1 / lead
        object.__setattr__(self, "m", ((a * inv, b * inv), (c * inv, d * inv)))

    @classmethod
    def of(cls, K: NumberField, a, b, c, d) -> "Mobius":
        return cls(((K(a), K(b)), (K(c), K(d))))

    @property
    def field(self) -> NumberField:
        return self.m[0][0].field

    def __mul__(self, other: "Mobius") -> "Mobius":
        (a, b), (c, d) = self.m
        (e, f), (g, h) = other.m
        return Mobius(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "Mobius":
        (a, b), (c, d) = self.m
        return Mobius(((d, -b), (-c, a)))

    def is_identity(self) -> bool:
        (a, b), (c, d) = self.m
        return b.is_zero() and c.is_zero() and a == d

    def embed(self, f) -> "Mobius":
        return Mobius(tuple(tuple(f(e) for e in row) for row in self.m))

    def __repr__(self):
        return "[" + "; ".join(" ".join(numfield.format_element(e) for e in row) for row in self.m) + "]"


def identity(K: NumberField) -> Mobius:
    return Mobius.of(K, 1, 0, 0, 1)


def h2(K: NumberField) -> Mobius:
    return Mobius.of(K, 0, 1, 1, 0)


def h3(K: NumberField) -> Mobius:
    return Mobius.of(K, 0, -1, 1, -1)


def h4(K: NumberField, i: FieldElement) -> Mobius:
    return Mobius.of(K, 1, 0, 0, i)


def h4_prime(K: NumberField) -> Mobius:
    return Mobius.of(K, 1, 1, -1, 1)


def h5(K: NumberField, phi: FieldElement) -> Mobius:
    return Mobius.of(K, 1, 1, -1, phi)


def mobius_apply(m: Mobius, p: P1Point) -> P1Point:
    (a, b), (c, d) = m.m
    return P1Point(a * p.x + b * p.y, c * p.x + d * p.y)


def mobius_order(m: Mobius):
    """Projective order of ``m``, or ``INFINITE_ORDER`` if it exceeds ``ORDER_CAP``."""
    g = m
    for n in range(1, ORDER_CAP + 1):
        if g.is_identity():
            return n
        g = g * m
    return INFINITE_ORDER


def fixed_points(m: Mobius, ext: NumberField, embed=None) -> set[P1Point]:
    """Fixed points of a non-identity ``m`` with coordinates in ``ext``.

    ``embed`` maps elements of ``m``'s field into ``ext`` (default: identity).
    """
    if m.is_identity():
        raise ValueError("every point is fixed by the identity")
    f = embed or (lambda e: ext(e))
    (a, b), (c, d) = [[f(e) for e in row] for row in m.m]
    # (x:y) is fixed iff c x^2 + (d - a) x y - b y^2 = 0
    pts = set(binary_form_roots([c, d - a, -b], ext))
    disc = (d - a) * (d - a) + 4 * b * c
    if len(pts) != (1 if disc.is_zero() else 2):
        raise ValueError(f"fixed points of {m!r} are not defined over {ext!r}")
    return pts


def _frame(p1: P1Point, p2: P1Point, p3: P1Point):
    """Matrix sending (1:0), (0:1), (1:1) to p1, p2, p3."""
    # alpha*p1 + beta*p2 = p3
    det = p1.x * p2.y - p2.x * p1.y
    if det.is_zero():
        raise ValueError("coincident points")
    alpha = (p3.x * p2.y - p2.x * p3.y) / det
    beta = (p1.x * p3.y - p3.x * p1.y) / det
    if alpha.is_zero() or beta.is_zero():
        raise ValueError("coincident points")
    return Mobius(((alpha * p1.x, beta * p2.x), (alpha * p1.y, beta * p2.y)))


def mobius_from_3pts(p1, p2, p3, q1, q2, q3) -> Mobius:
    """The unique projective map with ``p_i -> q_i``."""
    return _frame(q1, q2, q3) * _frame(p1, p2, p3).inverse()


def stabilizer_of_5pts(points) -> list[tuple[Mobius, tuple[int, ...]]]:
    """All Moebius maps permuting ``points``, with the induced permutation.

    The permutation ``s`` is 0-indexed: the map sends ``points[i]`` to
    ``points[s[i]]``.
    """
    points = list(points)
    if len(points) != 5 or len(set(points)) != 5:
        raise ValueError("need five distinct points")
    out = []
    for s in itertools.permutations(range(5)):
        m = mobius_from_3pts(points[0], points[1], points[2], points[s[0]], points[s[1]], points[s[2]])
        if all(mobius_apply(m, points[i]) == points[s[i]] for i in (3, 4)):
            out.append((m, s))
    return out


def perm_order(s) -> int:
    n, g = 1, tuple(s)
    ident = tuple(range(len(s)))
    while g != ident:
        g = tuple(s[i] for i in g)
        n += 1
    return n


def isomorphism_type(perms) -> str:
    """Name a permutation group of order <= 10 by its order statistics."""
    orders = sorted(perm_order(s) for s in perms)
    table = {
        (1,): "C1",
        (1, 2): "C2",
        (1, 3, 3): "C3",
        (1, 2, 4, 4): "C4",
        (1, 2, 2, 2): "C2xC2",
        (1, 5, 5, 5, 5): "C5",
        (1, 2, 2, 2, 3, 3): "S3",
        (1, 2, 3, 3, 6, 6): "C6",
        (1, 2, 2, 2, 2, 2, 5, 5, 5, 5): "D5",
    }
    return table.get(tuple(orders), f"order-{len(orders)}")


def binary_form_roots(coeffs, ext: NumberField, embed=None) -> list[P1Point]:
    """Roots in P^1(ext) of ``sum coeffs[j] * mu^(d-j) * lam^j``.

    ``coeffs`` is indexed by the power of ``lam``; the form has degree
    ``len(coeffs) - 1``. The point ``(1:0)`` is a root exactly when the
    ``mu^d`` coefficient vanishes.
    """
    f = embed or (lambda e: ext(e))
    cs = [f(c) for c in coeffs]
    d = len(cs) - 1
    if all(c.is_zero() for c in cs):
        raise ValueError("zero binary form")
    # dehomogenise at lam = 1: g(t) = sum c_j t^(d-j), t = mu/lam
    g = poly.trim(list(reversed(cs)))
    roots = [P1Point(r, ext.one) for r in numfield.roots_in(g, ext)] if len(g) > 1 else []
    if poly.degree(g) < d:
        roots.append(P1Point(ext.one, ext.zero))
    return roots


def equivalent_point_sets(s1, s2):
    """A Moebius map sending the point set ``s1`` onto ``s2``, or ``None``."""
    s1, s2 = list(s1), list(s2)
    if len(s1) != len(s2) or len(s1) < 3:
        return None
    target = set(s2)
    for t in itertools.permutations(s2, 3):
        m = mobius_from_3pts(s1[0], s1[1], s1[2], *t)
        if {mobius_apply(m, p) for p in s1} == target:
            return m
    return None
