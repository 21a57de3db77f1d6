"""The Weyl group W(D5) as even sign vectors semidirect permutations of 1..5.

An element is a pair ``(a, b)``: ``a`` is a 0/1 vector of even weight and ``b``
a permutation. Products follow ``(a1, b1)(a2, b2) = (a1 + b1.a2, b1 b2)`` where
``(b.a)[b(i)] = a[i]`` and ``b1 b2`` applies ``b2`` first. With this rule
``b c_i b^-1 = c_{b(i)}``.

Indices are 1-based in every string and 0-based in storage.

>>> g = parse("c4(12)(45)")
>>> g.order()
4
>>> str(g * g)
'c4c5'
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache

N = 5
ID_PERM = tuple(range(N))
ZERO = (0,) * N


@dataclass(frozen=True, order=True, slots=True)
class WeylElement:
    sign: tuple[int, ...] = ZERO
    perm: tuple[int, ...] = ID_PERM

    def __post_init__(self):
        if len(self.sign) != N or len(self.perm) != N:
            raise ValueError("sign vector and permutation must have length 5")
        if sum(self.sign) % 2:
            raise ValueError(f"sign vector {self.sign} has odd weight")
        if sorted(self.perm) != list(ID_PERM):
            raise ValueError(f"{self.perm} is not a permutation of 0..4")

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        b1 = self.perm
        moved = [0] * N
        for i, x in enumerate(other.sign):
            moved[b1[i]] = x
        sign = tuple(x ^ y for x, y in zip(self.sign, moved))
        return WeylElement(sign, tuple(b1[j] for j in other.perm))

    def inverse(self) -> "WeylElement":
        inv = [0] * N
        for i, j in enumerate(self.perm):
            inv[j] = i
        # b^-1 . a places a[i] at b^-1(i)
        sign = [0] * N
        for i, x in enumerate(self.sign):
            sign[inv[i]] = x
        return WeylElement(tuple(sign), tuple(inv))

    def is_identity(self) -> bool:
        return self.sign == ZERO and self.perm == ID_PERM

    def in_kernel(self) -> bool:
        """True when the permutation part is trivial."""
        return self.perm == ID_PERM

    def order(self) -> int:
        n, g = 1, self
        while not g.is_identity():
            g = g * self
            n += 1
        return n

    def sign_part(self) -> "WeylElement":
        return WeylElement(self.sign, ID_PERM)

    def perm_part(self) -> "WeylElement":
        return WeylElement(ZERO, self.perm)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"WeylElement({format_element(self)!r})"


IDENTITY = WeylElement()


def c(i: int) -> WeylElement:
    """The sign generator ``c_i`` (1-based): zero at ``i``, one elsewhere."""
    if not 1 <= i <= N:
        raise ValueError(f"no generator c{i}")
    return WeylElement(tuple(0 if j == i - 1 else 1 for j in range(N)))


def sign_element(bits) -> WeylElement:
    return WeylElement(tuple(int(b) for b in bits))


def cycle(*points: int) -> WeylElement:
    """The cycle ``(p1 p2 ... pk)`` on 1-based points: p1 -> p2 -> ... -> p1."""
    perm = list(ID_PERM)
    if len(set(points)) != len(points):
        raise ValueError(f"repeated point in cycle {points}")
    for a, b in zip(points, points[1:] + points[:1]):
        if not (1 <= a <= N):
            raise ValueError(f"point {a} out of range")
        perm[a - 1] = b - 1
    return WeylElement(ZERO, tuple(perm))


def even_sign_vectors() -> list[tuple[int, ...]]:
    return [v for v in itertools.product((0, 1), repeat=N) if sum(v) % 2 == 0]


@lru_cache(maxsize=None)
def all_elements() -> tuple[WeylElement, ...]:
    """All 1920 elements in a fixed order (permutation-major, identity first)."""
    return tuple(
        WeylElement(s, p)
        for p in itertools.permutations(ID_PERM)
        for s in even_sign_vectors()
    )


# ---------------------------------------------------------------- text grammar


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"c([1-5])|\(([1-5]+)\)|(id)|(1)|(e)")


def parse(text: str) -> WeylElement:
    """Parse a product such as ``c4(12)(45)``; ``""``, ``1``, ``e``, ``id`` mean identity."""
    s = "".join(text.split())
    g, pos = IDENTITY, 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        if m.group(1):
            g = g * c(int(m.group(1)))
        elif m.group(2):
            pts = [int(ch) for ch in m.group(2)]
            if len(set(pts)) != len(pts):
                raise ParseError("repeated point in cycle", text, pos)
            g = g * cycle(*pts)
        pos = m.end()
    return g


def parse_list(text: str) -> list[WeylElement]:
    """Comma separated generators; an empty string gives an empty list."""
    return [parse(part) for part in text.split(",") if part.strip()]


def format_sign(sign) -> str:
    support = [i + 1 for i, x in enumerate(sign) if x]
    if not support:
        return ""
    if len(support) == 4:
        (missing,) = set(range(1, N + 1)) - set(support)
        return f"c{missing}"
    return "".join(f"c{i}" for i in support)


def format_perm(perm) -> str:
    seen, out = set(), []
    for start in range(N):
        if start in seen or perm[start] == start:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = perm[j]
        out.append("(" + "".join(cyc) + ")")
    return "".join(out)


def format_element(g: WeylElement) -> str:
    return (format_sign(g.sign) + format_perm(g.perm)) or "id"


# ------------------------------------------------------------------ subgroups


@dataclass(frozen=True)
class Subgroup:
    elements: frozenset
    generators: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __le__(self, other: "Subgroup") -> bool:
        return self.elements <= other.elements

    def gens(self) -> tuple:
        """Generators if known, otherwise every element."""
        return self.generators or tuple(sorted(self.elements))

    def conjugate(self, t: WeylElement) -> "Subgroup":
        ti = t.inverse()
        return Subgroup(
            frozenset(t * g * ti for g in self.elements),
            tuple(t * g * ti for g in self.generators),
        )

    def __repr__(self):
        gens = ", ".join(format_element(g) for g in self.generators)
        return f"Subgroup(<{gens}>, order={self.order})"


def closure(generators) -> Subgroup:
    gens = tuple(generators)
    elements = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(frozenset(elements), gens)


def group(text: str) -> Subgroup:
    """Closure of a comma separated generator list in the element grammar."""
    return closure(parse_list(text))


@lru_cache(maxsize=None)
def whole_group() -> Subgroup:
    return Subgroup(frozenset(all_elements()), (c(1), c(2), c(3), c(4), cycle(1, 2), cycle(1, 2, 3, 4, 5)))


@lru_cache(maxsize=None)
def sign_kernel() -> Subgroup:
    return closure([c(1), c(2), c(3), c(4)])


def conjugate_into(g_sub: Subgroup, target: Subgroup):
    """First ``t`` (in ``all_elements`` order) with ``t g_sub t^-1`` inside ``target``."""
    if target.order % g_sub.order:
        return None
    gens = g_sub.gens()
    for t in all_elements():
        ti = t.inverse()
        if all(t * g * ti in target.elements for g in gens):
            return t
    return None


def are_conjugate(g1: Subgroup, g2: Subgroup) -> bool:
    return g1.order == g2.order and conjugate_into(g1, g2) is not None


def centralizer(g_sub: Subgroup) -> Subgroup:
    gens = g_sub.gens()
    return Subgroup(frozenset(t for t in all_elements() if all(t * g == g * t for g in gens)))


def image_in_s5(g_sub: Subgroup) -> Subgroup:
    """Projection onto the permutation part, as pure permutations."""
    return Subgroup(frozenset(g.perm_part() for g in g_sub.elements))


def kernel_in_a(g_sub: Subgroup) -> Subgroup:
    return Subgroup(frozenset(g for g in g_sub.elements if g.in_kernel()))


def generating_set(sub: Subgroup) -> list[WeylElement]:
    """A short generating set, greedily picking elements of large order."""
    gens, span = [], closure([])
    for g in sorted(sub.elements, key=lambda x: (-x.order(), x)):
        if g not in span:
            gens.append(g)
            span = closure(gens)
            if span.order == sub.order:
                break
    return gens


def find_complement(g_sub: Subgroup):
    """A subgroup meeting the sign kernel trivially and mapping onto the image, or None.

    Any complement is generated by one lift of each generator of the image, so
    trying every tuple of lifts is exhaustive.
    """
    image = image_in_s5(g_sub)
    target = image.order
    gens = generating_set(image)
    lifts = [[g for g in g_sub.elements if g.perm == h.perm] for h in gens]
    for choice in itertools.product(*(sorted(l) for l in lifts)):
        k = closure(choice)
        if k.order == target:
            return k
    return None


def is_split_extension(g_sub: Subgroup) -> bool:
    return find_complement(g_sub) is not None


# -------------------------------------------------------------- named classes


class ClassName(enum.Enum):
    C2_4_C2 = "C2^4:C2"
    C2_4_C4 = "C2^4:C4"
    C2_4_S3 = "C2^4:S3"
    C2_4_D5 = "C2^4:D5"
    C2_3_S3 = "C2^3:S3"
    C2_3_NS_S3 = "C2^3.S3"
    C2_NS_S3 = "C2.S3"
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"

    def __str__(self):
        return self.value

    @property
    def pretty(self) -> str:
        return _PRETTY[self]


_PRETTY = {
    ClassName.C2_4_C2: "C₂⁴⋊C₂",
    ClassName.C2_4_C4: "C₂⁴⋊C₄",
    ClassName.C2_4_S3: "C₂⁴⋊S₃",
    ClassName.C2_4_D5: "C₂⁴⋊D₅",
    ClassName.C2_3_S3: "C₂³⋊S₃",
    ClassName.C2_3_NS_S3: "C₂³·S₃",
    ClassName.C2_NS_S3: "C₂·S₃",
    ClassName.I1: "I₁",
    ClassName.I2: "I₂",
    ClassName.I3: "I₃",
}

_A = "c1,c2,c3,c4,"
CLASS_GENERATORS = {
    ClassName.C2_4_C2: _A + "(12)(45)",
    ClassName.C2_4_C4: _A + "(1425)",
    ClassName.C2_4_S3: _A + "(12)(45),(123)",
    ClassName.C2_4_D5: _A + "(12)(45),(15342)",
    ClassName.C2_3_S3: "c1,c2,c3,(12)(45),(123)",
    ClassName.C2_3_NS_S3: "c1,c2,c3,(123),c4(12)(45)",
    ClassName.C2_NS_S3: "c4c5,(123),c4(12)(45)",
    ClassName.I1: "c1c5,c1(23),(234)",
    ClassName.I2: "c1(15)(23),(234)",
    ClassName.I3: "c1(23),(15),(234)",
}

_ALIASES = {}
for _n in ClassName:
    for _s in (_n.value, _n.name, _PRETTY[_n]):
        _ALIASES[_s.lower()] = _n
    _ALIASES[_n.value.replace(":", "x").lower()] = _n


def class_name(text) -> ClassName:
    if isinstance(text, ClassName):
        return text
    try:
        return _ALIASES[text.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown class name {text!r}") from None


@lru_cache(maxsize=None)
def named_class(name) -> Subgroup:
    return group(CLASS_GENERATORS[class_name(name)])
