"""Pencils of quadrics in P^4 over a number field.

A quadric is stored as its symmetric Gram matrix, so ``q(u) = u^T A u`` and a
cross term ``c*u_a*u_b`` puts ``c/2`` at ``(a, b)`` and ``(b, a)``. A projective
map ``M`` acts on a quadric by substitution ``u -> M u``, i.e. ``A -> M^T A M``.

The trace construction builds a pencil from a separable quintic ``P``:
``q_j(u) = Tr(lambda * u^2 * theta^j / P'(theta))`` for ``j = 0, 1`` where
``u = sum u_a b_a`` runs over a chosen basis of ``L = k[x]/(P)``.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, numfield, poly
from .numfield import FieldElement, NumberField
from .p1 import binary_form_roots

DIM = 5
GROUP_CAP = 10000


class DegeneratePencilError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


def _square(K, rows):
    m = tuple(tuple(K(x) for x in row) for row in rows)
    if len(m) != DIM or any(len(r) != DIM for r in m):
        raise ValueError("expected a 5x5 matrix")
    return m


def _mul(a, b):
    n = len(a)
    zero = a[0][0] * 0
    out = []
    for i in range(n):
        row = [zero] * n
        for k in range(n):
            x = a[i][k]
            if x.is_zero():
                continue
            for j in range(n):
                y = b[k][j]
                if not y.is_zero():
                    row[j] = row[j] + x * y
        out.append(tuple(row))
    return tuple(out)


def _transpose(a):
    return tuple(zip(*a))


# ---------------------------------------------------------------- quadrics


@dataclass(frozen=True)
class Quadric:
    gram: tuple

    def __post_init__(self):
        g = self.gram
        if any(g[i][j] != g[j][i] for i in range(DIM) for j in range(DIM)):
            raise ValueError("Gram matrix must be symmetric")

    @classmethod
    def from_matrix(cls, K: NumberField, rows) -> "Quadric":
        return cls(_square(K, rows))

    @classmethod
    def from_terms(cls, K: NumberField, terms: dict) -> "Quadric":
        """``{(a, b): c}`` means ``c * u_a * u_b``; repeated keys are summed."""
        g = [[K.zero] * DIM for _ in range(DIM)]
        for (a, b), coef in terms.items():
            coef = K(coef)
            if a == b:
                g[a][a] = g[a][a] + coef
            else:
                half = coef * Fraction(1, 2)
                g[a][b] = g[a][b] + half
                g[b][a] = g[b][a] + half
        return cls(tuple(tuple(r) for r in g))

    @classmethod
    def diagonal(cls, K: NumberField, coeffs) -> "Quadric":
        return cls.from_terms(K, {(a, a): c for a, c in enumerate(coeffs)})

    @property
    def field(self) -> NumberField:
        return self.gram[0][0].field

    def __call__(self, u) -> FieldElement:
        K = self.field
        u = [K(x) for x in u]
        return sum((u[a] * self.gram[a][b] * u[b] for a in range(DIM) for b in range(DIM)), K.zero)

    def terms(self) -> dict:
        """Inverse of ``from_terms``: nonzero monomial coefficients with a <= b."""
        out = {}
        for a in range(DIM):
            for b in range(a, DIM):
                c = self.gram[a][b] if a == b else 2 * self.gram[a][b]
                if not c.is_zero():
                    out[(a, b)] = c
        return out

    def scale(self, c) -> "Quadric":
        return Quadric(tuple(tuple(x * c for x in row) for row in self.gram))

    def __add__(self, other: "Quadric") -> "Quadric":
        return Quadric(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.gram, other.gram)))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.gram for x in row)

    def embed(self, f) -> "Quadric":
        return Quadric(tuple(tuple(f(x) for x in row) for row in self.gram))

    def entries(self):
        return [self.gram[a][b] for a in range(DIM) for b in range(a, DIM)]

    def __str__(self):
        parts = []
        for (a, b), c in sorted(self.terms().items()):
            mono = f"u{a}^2" if a == b else f"u{a}*u{b}"
            parts.append(f"({numfield.format_element(c)})*{mono}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class QuadricPencil:
    q1: Quadric
    q2: Quadric

    def __post_init__(self):
        if self.q1.field != self.q2.field:
            raise ValueError("quadrics live over different fields")
        if linalg.rank([self.q1.entries(), self.q2.entries()]) < 2:
            raise DegeneratePencilError("the two quadrics are linearly dependent")

    @property
    def field(self) -> NumberField:
        return self.q1.field

    def forms(self):
        return (self.q1, self.q2)

    def embed(self, f) -> "QuadricPencil":
        return QuadricPencil(self.q1.embed(f), self.q2.embed(f))

    def member(self, mu, lam) -> Quadric:
        return self.q1.scale(mu) + self.q2.scale(lam)


def pencil_from_terms(K, t1: dict, t2: dict) -> QuadricPencil:
    return QuadricPencil(Quadric.from_terms(K, t1), Quadric.from_terms(K, t2))


# ------------------------------------------------------------- discriminant


def discriminant(p: QuadricPencil) -> list:
    """Coefficients ``d_j`` of ``det(mu*A1 + lam*A2) = sum d_j mu^(5-j) lam^j``."""
    K = p.field
    A, B = p.q1.gram, p.q2.gram
    ts = [K(t) for t in range(DIM + 1)]
    vals = [linalg.det([[A[i][j] + t * B[i][j] for j in range(DIM)] for i in range(DIM)]) for t in ts]
    coeffs = poly.interpolate(ts, [K(v) for v in vals])
    coeffs = coeffs + [K.zero] * (DIM + 1 - len(coeffs))
    return coeffs


def is_smooth(p: QuadricPencil) -> bool:
    """Discriminant is a nonzero binary quintic without repeated roots in P^1."""
    d = discriminant(p)
    g = poly.trim(d)
    if not g:
        return False
    # a multiple root at (1:0) shows up as a degree drop of two or more
    if poly.degree(g) < DIM - 1:
        return False
    return poly.is_squarefree(g)


def discriminant_points(p: QuadricPencil, ext: NumberField = None, embed=None):
    """Roots ``(mu:lam)`` of the discriminant in ``P^1(ext)``."""
    ext = ext or p.field
    return binary_form_roots(discriminant(p), ext, embed)


# ----------------------------------------------------------- etale algebras


class EtaleAlgebra:
    """``L = k[x]/(P)`` for a monic separable quintic ``P`` (coefficients lowest first)."""

    def __init__(self, K: NumberField, p):
        p = poly.trim([K(c) for c in p])
        if len(p) != DIM + 1 or p[-1] != 1:
            raise ValueError("P must be monic of degree 5")
        if not poly.is_squarefree(p):
            raise ValueError("P is not separable")
        self.K = K
        self.p = p

    @classmethod
    def from_roots(cls, K: NumberField, roots) -> "EtaleAlgebra":
        return cls(K, poly.from_roots([K(r) for r in roots]))

    def elem(self, coeffs) -> tuple:
        c = poly.rem([self.K(x) for x in coeffs], self.p) if coeffs else []
        c = list(c) + [self.K.zero] * (DIM - len(c))
        return tuple(c)

    @property
    def one(self):
        return self.elem([1])

    @property
    def theta(self):
        return self.elem([0, 1])

    def mul(self, a, b):
        return self.elem(poly.mul(poly.trim(a), poly.trim(b)))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def scale(self, a, c):
        return tuple(x * c for x in a)

    def power(self, a, n: int):
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def inv(self, a):
        g, s, _ = poly.xgcd(poly.trim(a), self.p)
        if poly.degree(g) != 0:
            raise NotInvertibleError("element is a zero divisor in L")
        return self.elem(s)

    def trace(self, a) -> FieldElement:
        """Trace of multiplication by ``a`` on the power basis."""
        t = self.K.zero
        for i in range(DIM):
            col = self.mul(a, self.elem([0] * i + [1]))
            t = t + col[i]
        return t

    def p_prime(self):
        return self.elem(poly.derivative(self.p))

    def power_basis(self):
        return [self.elem([0] * i + [1]) for i in range(DIM)]

    def _check_factors(self, factors):
        factors = [poly.trim([self.K(c) for c in f]) for f in factors]
        prod = [self.K.one]
        for f in factors:
            prod = poly.mul(prod, f)
        if poly.monic(prod) != self.p:
            raise ValueError("factors do not multiply to P")
        return factors

    def idempotents(self, factors):
        """CRT idempotents ``e_f`` with ``e_f = 1 mod f`` and ``0`` modulo the other factors."""
        factors = self._check_factors(factors)
        out = []
        for f in factors:
            cof, r = poly.divmod_poly(self.p, f)
            assert not r
            g, s, _ = poly.xgcd(cof, f)
            if poly.degree(g) != 0:
                raise ValueError("factors are not coprime")
            out.append(self.elem(poly.mul(s, cof)))
        return out

    def component_lambda(self, factors, parts):
        """The element congruent to ``parts[i]`` modulo ``factors[i]``."""
        factors = self._check_factors(factors)
        if len(parts) != len(factors):
            raise ValueError("need one component value per factor")
        total = tuple([self.K.zero] * DIM)
        for f, e, part in zip(factors, self.idempotents(factors), parts):
            part = part if isinstance(part, (list, tuple)) else [part]
            part = poly.trim([self.K(c) for c in part])
            if part and poly.degree(part) >= poly.degree(f):
                raise ValueError("component value has degree >= factor degree")
            total = self.add(total, self.mul(self.elem(part), e))
        return total

    def component_basis(self, factors):
        """``[e_f * theta^k for k < deg f]`` for each factor, in order."""
        factors = self._check_factors(factors)
        out = []
        for f, e in zip(factors, self.idempotents(factors)):
            for k in range(poly.degree(f)):
                out.append(self.mul(e, self.power(self.theta, k)))
        return out


def trace_quadrics(alg: EtaleAlgebra, lam=None, basis=None) -> QuadricPencil:
    """Pencil ``(q_0, q_1)`` with ``q_j = Tr(lam * theta^j * u^2 / P'(theta))``."""
    lam = alg.one if lam is None else alg.elem(list(lam))
    basis = basis or alg.power_basis()
    w = alg.mul(lam, alg.inv(alg.p_prime()))
    grams = []
    for j in range(2):
        wj = alg.mul(w, alg.power(alg.theta, j))
        g = [[alg.trace(alg.mul(wj, alg.mul(basis[a], basis[b]))) for b in range(DIM)] for a in range(DIM)]
        grams.append(Quadric(tuple(tuple(r) for r in g)))
    return QuadricPencil(*grams)


# ------------------------------------------------------- projective maps


@dataclass(frozen=True)
class ProjMap5:
    """``u -> M u``; ``matrix[k]`` gives the new ``u_k`` as a linear form in ``u``."""

    matrix: tuple

    def checked(self) -> "ProjMap5":
        if linalg.det([list(r) for r in self.matrix]).is_zero():
            raise ValueError("singular projective map")
        return self

    @classmethod
    def of(cls, K: NumberField, rows) -> "ProjMap5":
        return cls(_square(K, rows)).checked()

    @classmethod
    def from_images(cls, K: NumberField, images) -> "ProjMap5":
        """``images[k] = {l: c}`` meaning new ``u_k = sum c * u_l``."""
        rows = [[K.zero] * DIM for _ in range(DIM)]
        for k, img in enumerate(images):
            for l, c in img.items():
                rows[k][l] = K(c)
        return cls(tuple(tuple(r) for r in rows)).checked()

    @classmethod
    def sign(cls, K: NumberField, signs) -> "ProjMap5":
        return cls(tuple(tuple(K(signs[i] if i == j else 0) for j in range(DIM)) for i in range(DIM)))

    @property
    def field(self) -> NumberField:
        return self.matrix[0][0].field

    def normalized(self) -> "ProjMap5":
        lead = next(x for row in self.matrix for x in row if not x.is_zero())
        inv = 1 / lead
        return ProjMap5(tuple(tuple(x * inv for x in row) for row in self.matrix))

    def __mul__(self, other: "ProjMap5") -> "ProjMap5":
        return ProjMap5(_mul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        n = self.normalized().matrix
        return all((n[i][j] == 1) if i == j else n[i][j].is_zero() for i in range(DIM) for j in range(DIM))

    def embed(self, f) -> "ProjMap5":
        return ProjMap5(tuple(tuple(f(x) for x in row) for row in self.matrix))

    def apply_point(self, pt):
        K = self.field
        return [sum((self.matrix[k][l] * K(pt[l]) for l in range(DIM)), K.zero) for k in range(DIM)]


def identity_map(K: NumberField) -> ProjMap5:
    return ProjMap5.sign(K, [1] * DIM)


def sign_maps(K: NumberField, coords=range(DIM)) -> list[ProjMap5]:
    """Diagonal maps ``u_i -> +-u_i`` for ``i`` in ``coords`` (others fixed)."""
    coords = list(coords)
    out = []
    for bits in itertools.product((1, -1), repeat=len(coords)):
        s = [1] * DIM
        for i, b in zip(coords, bits):
            s[i] = b
        out.append(ProjMap5.sign(K, s))
    return out


def sign_flips(K: NumberField, coords=range(DIM)) -> list[ProjMap5]:
    """Generators of the diagonal sign group: one flip ``u_i -> -u_i`` per coordinate."""
    out = []
    for i in coords:
        s = [1] * DIM
        s[i] = -1
        out.append(ProjMap5.sign(K, s))
    return out


def apply_map(m: ProjMap5, q: Quadric) -> Quadric:
    M = m.matrix
    return Quadric(_mul(_mul(_transpose(M), q.gram), M))


def preserves_pencil(m: ProjMap5, p: QuadricPencil):
    """The 2x2 ``T`` with ``m(q_r) = T[r][0] q1 + T[r][1] q2``, or ``None``."""
    basis = [p.q1.entries(), p.q2.entries()]
    cols = [list(col) for col in zip(*basis)]
    T = []
    for q in p.forms():
        img = apply_map(m, q).entries()
        sol = linalg.solve(cols, img)
        if sol is None:
            return None
        K = p.field
        T.append(tuple(K(x) for x in sol))
    return tuple(T)


def group_order_of_maps(gens, cap: int = GROUP_CAP) -> int:
    gens = [g.normalized() for g in gens]
    if not gens:
        return 1
    ident = identity_map(gens[0].field)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = (x * g).normalized()
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise RuntimeError(f"group exceeds {cap} elements")
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def point_on(p: QuadricPencil, pt) -> bool:
    if all(p.field(x).is_zero() for x in pt):
        raise ValueError("(0:0:0:0:0) is not a point")
    return p.q1(pt).is_zero() and p.q2(pt).is_zero()


# ------------------------------------------------------ pencil equivalence


def diagonal_transform(q: Quadric, d) -> Quadric:
    return Quadric(tuple(tuple(d[a] * q.gram[a][b] * d[b] for b in range(DIM)) for a in range(DIM)))


def pencil_equivalent(p1: QuadricPencil, p2: QuadricPencil):
    """Find ``(D, T)`` with ``p2 = T . (D^T p1 D)`` for diagonal ``D`` over the field.

    Returns ``(d, T)`` with ``d`` the diagonal of ``D``, or ``None``.
    The diagonal entries determine the inverse pencil change ``U`` up to
    scale; the squares ``d_a^2`` follow, then every sign choice is tried.
    """
    K = p1.field
    if p2.field != K:
        return None
    A1, B1 = p1.q1.gram, p1.q2.gram
    A2, B2 = p2.q1.gram, p2.q2.gram
    # D A1 D = U00 A2 + U01 B2 and D B1 D = U10 A2 + U11 B2; on the diagonal
    # (A1_aa, B1_aa) is proportional to (U0 . v_a, U1 . v_a) with v_a = (A2_aa, B2_aa).
    rows = []
    for a in range(DIM):
        x, y = A2[a][a], B2[a][a]
        rows.append([-B1[a][a] * x, -B1[a][a] * y, A1[a][a] * x, A1[a][a] * y])
    ns = linalg.nullspace(rows, 4)
    if len(ns) != 1:
        return None
    u00, u01, u10, u11 = [K(x) for x in ns[0]]
    s = []
    for a in range(DIM):
        x, y = A2[a][a], B2[a][a]
        if not A1[a][a].is_zero():
            s.append((u00 * x + u01 * y) / A1[a][a])
        elif not B1[a][a].is_zero():
            s.append((u10 * x + u11 * y) / B1[a][a])
        else:
            return None
    if any(v.is_zero() for v in s):
        return None
    roots = [numfield.sqrt(v / s[0]) for v in s]
    if any(r is None for r in roots):
        return None
    target = [p2.q1.entries(), p2.q2.entries()]
    for signs in itertools.product((1, -1), repeat=DIM - 1):
        d = [roots[0]] + [r * sg for r, sg in zip(roots[1:], signs)]
        q1d, q2d = diagonal_transform(p1.q1, d), diagonal_transform(p1.q2, d)
        if linalg.rank([q1d.entries(), q2d.entries()]) < 2:
            continue
        cols = [list(col) for col in zip(q1d.entries(), q2d.entries())]
        T = []
        for t in target:
            sol = linalg.solve(cols, t)
            if sol is None:
                break
            T.append(tuple(K(v) for v in sol))
        else:
            return tuple(d), tuple(T)
    return None


def check_witness(p1: QuadricPencil, p2: QuadricPencil, witness) -> bool:
    d, T = witness
    q1d, q2d = diagonal_transform(p1.q1, d), diagonal_transform(p1.q2, d)
    return all(
        (q1d.scale(row[0]) + q2d.scale(row[1])).gram == q.gram for row, q in zip(T, p2.forms())
    )


# -------------------------------------------------------------------- JSON


def field_to_json(K: NumberField) -> dict:
    return {"name": K.name, "minpoly": [str(c) for c in K.minpoly]}


def field_from_json(d: dict) -> NumberField:
    K = NumberField.from_coeffs([Fraction(c) for c in d["minpoly"]], d.get("name", ""))
    known = numfield.FIELDS.get(K.name)
    return known if known == K else K


def pencil_to_json(p: QuadricPencil) -> dict:
    return {
        "field": field_to_json(p.field),
        "q1": [[numfield.to_json(x) for x in row] for row in p.q1.gram],
        "q2": [[numfield.to_json(x) for x in row] for row in p.q2.gram],
    }


def pencil_from_json(d: dict) -> QuadricPencil:
    K = field_from_json(d["field"])
    q1 = Quadric(tuple(tuple(numfield.from_json(K, x) for x in row) for row in d["q1"]))
    q2 = Quadric(tuple(tuple(numfield.from_json(K, x) for x in row) for row in d["q2"]))
    return QuadricPencil(q1, q2)


def dumps_pencil(p: QuadricPencil) -> str:
    return json.dumps(pencil_to_json(p), indent=1)


def loads_pencil(text: str) -> QuadricPencil:
    return pencil_from_json(json.loads(text))


def catalog(name: str, **params):
    from .catalog import get

    return get(name, **params)
