"""Exact arithmetic in small number fields ``Q[x]/(m(x))``.

Elements are coefficient vectors in the power basis of the generator. Every
operation is exact; there is no floating point anywhere in this package.

>>> K = NumberField.from_coeffs([-1, -1, 1], "Q(sqrt5)")   # phi^2 = phi + 1
>>> phi = K.gen
>>> phi * phi == phi + 1
True
>>> 1 / phi == phi - 1
True
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import poly


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


@dataclass(frozen=True)
class NumberField:
    """The field ``Q[x]/(minpoly)``; ``minpoly`` is monic, lowest degree first."""

    minpoly: tuple[Fraction, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        m = tuple(_frac(c) for c in self.minpoly)
        object.__setattr__(self, "minpoly", m)
        if len(m) < 2 or m[-1] != 1:
            raise ValueError(f"minimal polynomial must be monic of degree >= 1: {m}")
        if self.degree > 8:
            raise ValueError("only fields of degree <= 8 are supported")
        if self.degree == 2:
            c, b, _ = m
            disc = b * b - 4 * c
            if disc >= 0 and _is_rational_square(disc):
                raise ValueError(f"{self.name or m}: quadratic minimal polynomial is reducible")

    @classmethod
    def from_coeffs(cls, coeffs, name: str = "") -> "NumberField":
        return cls(tuple(_frac(c) for c in coeffs), name)

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def __call__(self, value) -> "FieldElement":
        """Coerce an int, Fraction, coefficient list or element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                if value.field.degree == 1:
                    return self(value.coeffs[0])
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (list, tuple)):
            cs = [_frac(c) for c in value]
            if len(cs) > self.degree:
                return FieldElement(self, tuple(cs)).reduced()
            return FieldElement(self, tuple(cs) + (Fraction(0),) * (self.degree - len(cs)))
        return FieldElement(self, (_frac(value),) + (Fraction(0),) * (self.degree - 1))

    @cached_property
    def _high_powers(self) -> tuple:
        """Reduced coefficient vectors of x^n, ..., x^(2n-2)."""
        n = self.degree
        cur = [-c for c in self.minpoly[:-1]]
        out = []
        for _ in range(max(n - 1, 0)):
            out.append(tuple(cur))
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            cur = [a - top * m for a, m in zip(cur, self.minpoly[:-1])]
        return tuple(out)

    @cached_property
    def zero(self) -> "FieldElement":
        return self(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self(1)

    @cached_property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self(-self.minpoly[0])
        return self([0, 1])

    def __repr__(self):
        return self.name or f"NumberField({[str(c) for c in self.minpoly]})"


def _is_rational_square(q: Fraction) -> bool:
    return rational_sqrt(q) is not None


def rational_sqrt(q: Fraction):
    from math import isqrt

    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: NumberField
    coeffs: tuple[Fraction, ...]

    def reduced(self) -> "FieldElement":
        r = poly.rem(list(self.coeffs), list(self.field.minpoly))
        r = r + [Fraction(0)] * (self.field.degree - len(r))
        return FieldElement(self.field, tuple(r))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                return NotImplemented
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        K = self.field
        n = K.degree
        if n == 1:
            return FieldElement(K, (self.coeffs[0] * o.coeffs[0],))
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:n]
        for k, row in enumerate(K._high_powers):
            t = conv[n + k]
            if t:
                out = [x + t * r for x, r in zip(out, row)]
        return FieldElement(K, tuple(Fraction(x) for x in out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        if self.field.degree == 1:
            return FieldElement(self.field, (1 / self.coeffs[0],))
        if self.field.degree == 2:
            # multiply by the conjugate a + b x' with x + x' = -p
            q, p, _ = self.field.minpoly
            a, b = self.coeffs
            norm = a * a - a * b * p + b * b * q
            if norm == 0:
                raise ZeroDivisionError("minimal polynomial is reducible: zero divisor found")
            return FieldElement(self.field, ((a - b * p) / norm, -b / norm))
        g, s, _ = poly.xgcd(poly.trim(self.coeffs), list(self.field.minpoly))
        if len(g) != 1:
            raise ZeroDivisionError("minimal polynomial is reducible: zero divisor found")
        return self.field(s)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.field.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return format_element(self)

    def embed(self, target: NumberField, gen_image: "FieldElement") -> "FieldElement":
        """Image under the field map sending our generator to ``gen_image``."""
        return poly.evaluate([target(c) for c in self.coeffs], gen_image) if self.coeffs else target.zero

    def mul_matrix(self):
        """Matrix of multiplication by ``self`` over Q (columns = images of basis)."""
        n = self.field.degree
        cols = [(self * self.field([0] * i + [1])).coeffs for i in range(n)]
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def norm(self) -> Fraction:
        from .linalg import det

        return det(self.mul_matrix())

    def trace(self) -> Fraction:
        m = self.mul_matrix()
        return sum((m[i][i] for i in range(len(m))), Fraction(0))


def format_element(x) -> str:
    """Exact rendering: ``"p/q"`` for rationals, ``"[c0, c1, ...]"`` otherwise."""
    if isinstance(x, FieldElement):
        if x.field.degree == 1:
            return str(x.coeffs[0])
        return "[" + ", ".join(str(c) for c in x.coeffs) + "]"
    return str(Fraction(x))


def to_json(x):
    if isinstance(x, FieldElement) and x.field.degree > 1:
        return [str(c) for c in x.coeffs]
    if isinstance(x, FieldElement):
        return str(x.coeffs[0])
    return str(Fraction(x))


def from_json(K: NumberField, value) -> FieldElement:
    if isinstance(value, list):
        return K([_frac(c) for c in value])
    return K(_frac(value) if not isinstance(value, Fraction) else value)


# --- named fields ----------------------------------------------------------

QQ = NumberField.from_coeffs([0, 1], "Q")
QQ_I = NumberField.from_coeffs([1, 0, 1], "Q(i)")
QQ_EPS3 = NumberField.from_coeffs([1, 1, 1], "Q(eps3)")
# Q(sqrt5) presented by the golden ratio phi, phi^2 = phi + 1; sqrt5 = 2*phi - 1.
QQ_SQRT5 = NumberField.from_coeffs([-1, -1, 1], "Q(sqrt5)")
QQ_SQRT2 = NumberField.from_coeffs([-2, 0, 1], "Q(sqrt2)")
# Q(zeta12) = Q(i, eps3): i = z^3, eps3 = z^4.
QQ_ZETA12 = NumberField.from_coeffs([1, 0, -1, 0, 1], "Q(zeta12)")

FIELDS = {K.name: K for K in (QQ, QQ_I, QQ_EPS3, QQ_SQRT5, QQ_SQRT2, QQ_ZETA12)}


def phi() -> FieldElement:
    return QQ_SQRT5.gen


def sqrt5() -> FieldElement:
    return 2 * QQ_SQRT5.gen - 1


def embed_into_zeta12(x: FieldElement) -> FieldElement:
    """Embed elements of Q, Q(i) or Q(eps3) into Q(zeta12)."""
    z = QQ_ZETA12.gen
    images = {QQ: z, QQ_I: z**3, QQ_EPS3: z**4}
    if x.field not in images:
        raise ValueError(f"no embedding of {x.field!r} into Q(zeta12)")
    if x.field == QQ:
        return QQ_ZETA12(x.coeffs[0])
    return x.embed(QQ_ZETA12, images[x.field])


# --- roots in a number field ----------------------------------------------

def _sympy_domain(K: NumberField):
    import sympy

    if K.degree == 1:
        return sympy.QQ
    x = sympy.Symbol("x")
    mp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(K.minpoly)], x)
    dom = sympy.QQ.algebraic_field(sympy.CRootOf(mp, 0))
    if [Fraction(int(c.numerator), int(c.denominator)) for c in dom.mod.to_list()] != list(reversed(K.minpoly)):
        raise ValueError(f"{K!r}: minimal polynomial is not irreducible over Q")
    return dom


def _to_sympy(dom, K: NumberField, x: FieldElement):
    import sympy

    if K.degree == 1:
        c = x.coeffs[0]
        return sympy.QQ(c.numerator, c.denominator)
    rep = [sympy.QQ(c.numerator, c.denominator) for c in reversed(x.coeffs)]
    return dom.dtype(rep, dom.mod.to_list(), sympy.QQ)


def _from_sympy(K: NumberField, c) -> FieldElement:
    if K.degree == 1:
        return K(Fraction(int(c.numerator), int(c.denominator)))
    cs = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(c.to_list())]
    return K(cs)


def roots_in(p, K: NumberField) -> list[FieldElement]:
    """Distinct roots in ``K`` of a nonzero polynomial with coefficients in ``K``.

    Factorisation over the number field is delegated to sympy; every returned
    root is re-checked with our own arithmetic.
    """
    import sympy

    p = poly.trim([K(c) for c in p])
    if not p:
        raise ValueError("the zero polynomial has every element as a root")
    if len(p) == 1:
        return []
    dom = _sympy_domain(K)
    t = sympy.Symbol("t")
    P = sympy.Poly.from_list([_to_sympy(dom, K, c) for c in reversed(p)], t, domain=dom)
    roots = []
    for fac, _ in P.factor_list()[1]:
        if fac.degree() != 1:
            continue
        a, b = fac.rep.to_list()
        r = -_from_sympy(K, b) / _from_sympy(K, a)
        if poly.evaluate(p, r) != 0:
            raise ArithmeticError("factorisation returned a non-root")
        if r not in roots:
            roots.append(r)
    return roots


def sqrt(x: FieldElement):
    """A square root of ``x`` in its own field, or ``None`` if there is none."""
    K = x.field
    if x.is_zero():
        return K.zero
    if K.degree == 1:
        r = rational_sqrt(x.coeffs[0])
        return None if r is None else K(r)
    rs = roots_in([-x, K.zero, K.one], K)
    return rs[0] if rs else None


def is_square(x: FieldElement) -> bool:
    return sqrt(x) is not None


def parse_minpoly(text: str) -> NumberField:
    """Parse a dense rational coefficient list such as ``"[ -1, -1, 1 ]"``."""
    body = text.strip()
    if body.startswith("minpoly="):
        body = body[len("minpoly="):]
    body = body.strip().lstrip("[").rstrip("]")
    coeffs = [_frac(c.strip()) for c in body.split(",") if c.strip()]
    return NumberField.from_coeffs(coeffs)
