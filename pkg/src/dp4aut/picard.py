"""The Picard lattice Z^6 with basis (E1, ..., E5, H) and the W(D5) action on it."""
from __future__ import annotations

import itertools

from . import linalg
from .weyl import WeylElement

GRAM = tuple(tuple((-1 if i < 5 else 1) if i == j else 0 for j in range(6)) for i in range(6))


def E(i: int) -> tuple[int, ...]:
    return tuple(int(j == i - 1) for j in range(6))


H = (0, 0, 0, 0, 0, 1)


def L(i: int, j: int) -> tuple[int, ...]:
    return tuple(h - a - b for h, a, b in zip(H, E(i), E(j)))


C = (-1, -1, -1, -1, -1, 2)


def intersect(d1, d2) -> int:
    return sum(x * y * GRAM[k][k] for k, (x, y) in enumerate(zip(d1, d2)))


def canonical_class() -> tuple[int, ...]:
    return (1, 1, 1, 1, 1, -3)


def add(*ds):
    return tuple(sum(xs) for xs in zip(*ds))


def neg(d):
    return tuple(-x for x in d)


def exceptional_classes(a_max: int = 3, b_max: int = 2) -> set[tuple[int, ...]]:
    """All ``aH - sum b_i E_i`` with ``D.D = D.K = -1`` in the given box."""
    K = canonical_class()
    out = set()
    rng = range(-b_max, b_max + 1)
    for a in range(-a_max, a_max + 1):
        for b in itertools.product(rng, repeat=5):
            d = tuple(-x for x in b) + (a,)
            if intersect(d, d) == -1 and intersect(d, K) == -1:
                out.add(d)
    return out


def exceptional_pairs() -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The five conic-class pairs ``{H - E_i, -K - H + E_i}``."""
    mK = neg(canonical_class())
    pairs = []
    for i in range(1, 6):
        a = add(H, neg(E(i)))
        pairs.append((a, add(mK, neg(a))))
    return pairs


def class_of(line) -> tuple[int, ...]:
    from .lines import Line

    line = Line.coerce(line)
    if line.kind == "E":
        return E(line.idx[0])
    if line.kind == "L":
        return L(*line.idx)
    return C


def pic_action(g: WeylElement, via: tuple[int, int] = (4, 5)) -> tuple[tuple[int, ...], ...]:
    """6x6 integer matrix (rows) whose columns are the images of E1..E5, H.

    ``H`` is sent via ``H = L_jk + E_j + E_k`` with ``(j, k) = via``.
    """
    from .lines import Line, line_action

    cols = [class_of(line_action(g, Line.e(i))) for i in range(1, 6)]
    j, k = via
    cols.append(add(*(class_of(line_action(g, l)) for l in (Line.l(j, k), Line.e(j), Line.e(k)))))
    return tuple(tuple(col[r] for col in cols) for r in range(6))


def apply(m, d) -> tuple[int, ...]:
    return tuple(sum(m[r][c] * d[c] for c in range(6)) for r in range(6))


def matmul(a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(6)) for c in range(6)) for r in range(6))


def identity_matrix():
    return tuple(tuple(int(r == c) for c in range(6)) for r in range(6))


def preserves_form(m) -> bool:
    mt = tuple(zip(*m))
    return matmul(matmul(mt, GRAM), m) == GRAM


def invariant_rank(maps) -> int:
    """Rank of the sublattice fixed by every matrix in ``maps``."""
    rows = []
    for m in maps:
        for r in range(6):
            rows.append([m[r][c] - int(r == c) for c in range(6)])
    if not rows:
        return 6
    return 6 - linalg.rank(rows)


def format_matrix(m) -> str:
    w = max(len(str(x)) for row in m for x in row)
    return "\n".join(" ".join(str(x).rjust(w) for x in row) for row in m)
