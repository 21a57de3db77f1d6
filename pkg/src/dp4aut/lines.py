"""The sixteen lines: W(D5) action, incidence, Galois actions, twisting and orbits."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import picard, weyl
from .weyl import WeylElement


@dataclass(frozen=True, order=True)
class Line:
    """``E_i``, ``L_ij`` (stored with i < j) or ``C``; indices are 1-based."""

    kind: str
    idx: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind == "E" and len(self.idx) == 1 and 1 <= self.idx[0] <= 5:
            return
        if self.kind == "L" and len(self.idx) == 2:
            i, j = self.idx
            if i != j and 1 <= i <= 5 and 1 <= j <= 5:
                object.__setattr__(self, "idx", (min(i, j), max(i, j)))
                return
        if self.kind == "C" and not self.idx:
            return
        raise ValueError(f"not a line: {self.kind}{self.idx}")

    @classmethod
    def e(cls, i):
        return cls("E", (i,))

    @classmethod
    def l(cls, i, j):
        return cls("L", (i, j))

    @classmethod
    def parse(cls, text: str) -> "Line":
        t = text.strip().replace("_", "")
        if t == "C":
            return cls("C")
        if t[:1] == "E" and t[1:].isdigit() and len(t) == 2:
            return cls.e(int(t[1]))
        if t[:1] == "L" and t[1:].isdigit() and len(t) == 3:
            return cls.l(int(t[1]), int(t[2]))
        raise ValueError(f"cannot parse line {text!r}")

    @classmethod
    def coerce(cls, x) -> "Line":
        return x if isinstance(x, Line) else cls.parse(x)

    def __str__(self):
        return self.kind + "".join(map(str, self.idx))

    __repr__ = __str__


ALL_LINES = tuple(
    [Line.e(i) for i in range(1, 6)]
    + [Line.l(i, j) for i in range(1, 6) for j in range(i + 1, 6)]
    + [Line("C")]
)


def _c_action(i: int, line: Line) -> Line:
    if line.kind == "C":
        return Line.e(i)
    if line.kind == "E":
        j = line.idx[0]
        return Line("C") if j == i else Line.l(i, j)
    j, k = line.idx
    if i in (j, k):
        return Line.e(k if j == i else j)
    rest = sorted({1, 2, 3, 4, 5} - {i, j, k})
    return Line.l(*rest)


def sign_action(sign, line: Line) -> Line:
    """Action of the even sign vector: product of ``c_i`` over its support."""
    for i, x in enumerate(sign):
        if x:
            line = _c_action(i + 1, line)
    return line


def perm_action(perm, line: Line) -> Line:
    if line.kind == "C":
        return line
    return Line(line.kind, tuple(perm[i - 1] + 1 for i in line.idx))


def line_action(g: WeylElement, line) -> Line:
    """Relabel by the permutation part first, then apply the sign part."""
    return sign_action(g.sign, perm_action(g.perm, Line.coerce(line)))


@lru_cache(maxsize=None)
def _incidence_table():
    cls = {l: picard.class_of(l) for l in ALL_LINES}
    return {(a, b): picard.intersect(cls[a], cls[b]) for a in ALL_LINES for b in ALL_LINES}


def incidence(l1, l2) -> int:
    return _incidence_table()[(Line.coerce(l1), Line.coerce(l2))]


def torsor_check() -> bool:
    """The sign kernel acts simply transitively on the 16 lines."""
    kernel = list(weyl.sign_kernel().elements)
    for l1 in ALL_LINES:
        for l2 in ALL_LINES:
            if sum(1 for a in kernel if line_action(a, l1) == l2) != 1:
                return False
    return True


# ------------------------------------------------------------- Galois actions


class HomomorphismError(ValueError):
    pass


class CocycleError(ValueError):
    def __init__(self, pair, msg=""):
        super().__init__(msg or f"cocycle condition fails at pair {pair}")
        self.pair = pair


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class GaloisAction:
    """A finite group (multiplication table over indices 0..n-1) mapped into W(D5).

    ``rep[g]`` is the image of ``g``; ``cocycle[g]``, if present, is the sign
    vector ``a_g`` (as a kernel element) twisting the action.
    """

    table: tuple[tuple[int, ...], ...]
    rep: tuple[WeylElement, ...]
    cocycle: tuple[WeylElement, ...] | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        object.__setattr__(self, "rep", tuple(self.rep))
        if self.cocycle is not None:
            object.__setattr__(self, "cocycle", tuple(self.cocycle))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(len(self.table))))
        self.validate()

    @property
    def size(self) -> int:
        return len(self.table)

    def name(self, i: int) -> str:
        return self.labels[i]

    def validate(self):
        n = self.size
        if any(len(r) != n for r in self.table) or len(self.rep) != n:
            raise HomomorphismError("table and rep sizes disagree")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise HomomorphismError("table entry out of range")
        for i in range(n):
            for j in range(n):
                if self.rep[self.table[i][j]] != self.rep[i] * self.rep[j]:
                    raise HomomorphismError(
                        f"rep is not a homomorphism at ({self.name(i)}, {self.name(j)})"
                    )
        if self.cocycle is None:
            return
        if len(self.cocycle) != n:
            raise CocycleError(None, "cocycle must be given on every group element")
        for a in self.cocycle:
            if not a.in_kernel():
                raise CocycleError(None, f"cocycle value {a} is not a sign vector")
        for i in range(n):
            ri, rii = self.rep[i], self.rep[i].inverse()
            for j in range(n):
                # gamma acts on A by conjugation through its image
                lhs = self.cocycle[self.table[i][j]]
                rhs = self.cocycle[i] * (ri * self.cocycle[j] * rii)
                if lhs != rhs:
                    raise CocycleError((self.name(i), self.name(j)))

    def act(self, i: int, line: Line) -> Line:
        line = line_action(self.rep[i], line)
        if self.cocycle is not None:
            line = sign_action(self.cocycle[i].sign, line)
        return line


def galois_orbits(act: GaloisAction) -> list[frozenset]:
    seen, orbits = set(), []
    for l in ALL_LINES:
        if l in seen:
            continue
        orb = frozenset(act.act(i, l) for i in range(act.size))
        seen |= orb
        orbits.append(orb)
    return orbits


def is_k_minimal(orbits) -> bool:
    for orb in orbits:
        ls = sorted(orb)
        if not any(incidence(a, b) >= 1 for a in ls for b in ls if a != b):
            return False
    return True


def is_quasi_split(orbits) -> bool:
    return any(len(o) == 1 for o in orbits)


def format_orbits(orbits) -> list[list[str]]:
    return sorted(([str(l) for l in sorted(o)] for o in orbits), key=lambda o: (len(o), o))


# ------------------------------------------------------------------ scenarios


def twist_scenario() -> GaloisAction:
    """C4 acting through (45) with cocycle s -> c4, s^2 -> c4c5, s^3 -> c5."""
    p = weyl.parse
    return GaloisAction(
        cyclic_table(4),
        (p("id"), p("(45)"), p("id"), p("(45)")),
        (p("id"), p("c4"), p("c4c5"), p("c5")),
        ("1", "s", "s2", "s3"),
    )


def scenario_from_dict(d: dict) -> GaloisAction:
    """``{"elements": [...], "table": [[...]], "rep": [...], "cocycle": [[g, word], ...]}``.

    Table entries and cocycle keys may be element labels or indices.
    """
    labels = [str(x) for x in d.get("elements") or range(len(d["table"]))]
    index = {name: i for i, name in enumerate(labels)}

    def ix(x):
        if isinstance(x, int):
            return x
        if x not in index:
            raise ValueError(f"unknown group element {x!r}")
        return index[x]

    table = [[ix(x) for x in row] for row in d["table"]]
    rep = [weyl.parse(w) for w in d["rep"]]
    cocycle = None
    if d.get("cocycle") is not None:
        vals = [None] * len(labels)
        for g, word in d["cocycle"]:
            vals[ix(g)] = weyl.parse(word)
        if any(v is None for v in vals):
            missing = [labels[i] for i, v in enumerate(vals) if v is None]
            raise CocycleError(None, f"cocycle missing values for {missing}")
        cocycle = vals
    return GaloisAction(table, rep, cocycle, tuple(labels))


def scenario_to_dict(act: GaloisAction) -> dict:
    d = {
        "elements": list(act.labels),
        "table": [[act.labels[x] for x in row] for row in act.table],
        "rep": [str(g) for g in act.rep],
    }
    if act.cocycle is not None:
        d["cocycle"] = [[act.labels[i], str(a)] for i, a in enumerate(act.cocycle)]
    return d


def load_scenario(path) -> GaloisAction:
    with open(path) as f:
        return scenario_from_dict(json.load(f))
