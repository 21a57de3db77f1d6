"""Six explicit quartic del Pezzo surfaces with their automorphism generators.

Each record carries the pencil, generator maps, the expected action of each
generator on the pencil (a 2x2 matrix ``T`` with ``g(q_r) = T[r][0] q1 + T[r][1] q2``),
the expected order of the generated projective group, the five points the
discriminant should cut out (up to a Moebius map) and points expected on the
surface. ``verify`` runs every check and returns a list of ``Check``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import numfield, poly
from .numfield import QQ, QQ_EPS3, QQ_I, QQ_SQRT5, QQ_ZETA12, FieldElement, NumberField
from .p1 import P1Point, equivalent_point_sets
from .surfaces import (
    EtaleAlgebra,
    ProjMap5,
    Quadric,
    QuadricPencil,
    apply_map,
    check_witness,
    diagonal_transform,
    discriminant_points,
    group_order_of_maps,
    is_smooth,
    pencil_equivalent,
    pencil_from_terms,
    point_on,
    preserves_pencil,
    sign_flips,
    trace_quadrics,
)

NAMES = ("c2", "c4", "s3-split", "d5", "c23-semidirect", "c23-nonsplit")
HALF = Fraction(1, 2)


@dataclass
class SurfaceRecord:
    name: str
    field: NumberField
    pencil: QuadricPencil
    generators: dict
    relations: dict  # generator name -> expected T
    relation_source: str  # "reference" or "derived"
    sign_group: list
    expected_order: int
    points: list
    points_field: NumberField
    embed: Callable = None
    special_points: list = field(default_factory=list)  # (coords, expected)
    extras: dict = field(default_factory=dict)

    def all_generators(self):
        return list(self.sign_group) + list(self.generators.values())


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _T(K, rows):
    return tuple(tuple(K(x) for x in r) for r in rows)


def _pts(K, pairs):
    return [P1Point.of(K, x, y) for x, y in pairs]


def _rat_embed(K):
    return lambda e: K(e.coeffs[0]) if e.field.degree == 1 else K(e)


# --------------------------------------------------------------------- c2


def c2(a=2) -> SurfaceRecord:
    K = QQ
    a = K(a)
    if a.is_zero() or a == 1 or a == -1:
        raise ValueError("need a != 0, 1, -1")
    p = pencil_from_terms(
        K,
        {(i, i): 1 for i in range(5)},
        {(0, 0): 1, (1, 1): a, (2, 2): -1, (3, 3): -a},
    )
    # u0 <-> u2, u1 <-> u3 keeps q1 and negates q2
    g = ProjMap5.from_images(K, [{2: 1}, {3: 1}, {0: 1}, {1: 1}, {4: 1}])
    return SurfaceRecord(
        name="c2",
        field=K,
        pencil=p,
        generators={"g1": g},
        relations={"g1": _T(K, [[1, 0], [0, -1]])},
        relation_source="derived",
        sign_group=sign_flips(K),
        expected_order=32,
        points=_pts(K, [(1, 0), (0, 1), (1, 1), (1 + a, 1 - a), (1 - a, 1 + a)]),
        points_field=K,
        extras={"a": a},
    )


# --------------------------------------------------------------------- c4


def c4() -> SurfaceRecord:
    K = QQ_I
    i = K.gen
    p = pencil_from_terms(
        K,
        {(j, j): 1 for j in range(5)},
        {(0, 0): 1, (1, 1): i, (2, 2): -1, (3, 3): -i},
    )
    g1 = ProjMap5.from_images(K, [{1: 1}, {2: 1}, {3: 1}, {0: 1}, {4: 1}])
    return SurfaceRecord(
        name="c4",
        field=K,
        pencil=p,
        generators={"g1": g1},
        relations={"g1": _T(K, [[1, 0], [0, -i]])},
        relation_source="derived",
        sign_group=sign_flips(K),
        expected_order=64,
        points=_pts(K, [(1, 1), (1, -1), (1, 0), (1, i), (1, -i)]),
        points_field=K,
    )


# --------------------------------------------------------------- s3-split


def s3_split() -> SurfaceRecord:
    K = QQ_EPS3
    e = K.gen
    p = pencil_from_terms(
        K,
        {(0, 0): 1, (1, 1): e, (2, 2): e * e, (3, 3): 1},
        {(0, 0): 1, (1, 1): e * e, (2, 2): e, (4, 4): 1},
    )
    g1 = ProjMap5.from_images(K, [{0: 1}, {2: 1}, {1: 1}, {4: 1}, {3: 1}])
    g2 = ProjMap5.from_images(K, [{1: 1}, {2: 1}, {0: 1}, {3: e}, {4: e * e}])
    return SurfaceRecord(
        name="s3-split",
        field=K,
        pencil=p,
        generators={"g1": g1, "g2": g2},
        relations={"g1": _T(K, [[0, 1], [1, 0]]), "g2": _T(K, [[e * e, 0], [0, e]])},
        relation_source="derived",
        sign_group=sign_flips(K),
        expected_order=96,
        points=_pts(K, [(1, 0), (0, 1), (1, 1), (-e, 1), (1, -e)]),
        points_field=K,
    )


# --------------------------------------------------------------------- d5


def _phi():
    return QQ_SQRT5.gen


def d5_reference(a=None) -> QuadricPencil:
    """The reference pencil; the undefined symbol in the last q2 coefficient is set to ``a``."""
    K = QQ_SQRT5
    s5 = numfield.sqrt5()
    a = s5 if a is None else K(a)
    q1 = {(0, 0): -(s5 + 1), (1, 1): 5 * s5 - 11, (2, 2): -(s5 + 1), (3, 3): 5 * s5 - 11, (4, 4): -(8 * s5 - 24)}
    q2 = {(0, 0): s5 - 1, (1, 1): -(2 * s5 - 4), (2, 2): -(s5 + 1), (3, 3): -(6 * s5 - 14), (4, 4): 8 * a - 16}
    return pencil_from_terms(K, q1, q2)


def d5_start_points():
    K, f = QQ_SQRT5, _phi()
    return _pts(K, [(-1, f + 1), (f + 1, -1), (1, 1), (2, f - 1), (f - 1, 2)])


def d5_coordinate_roots():
    """Affine coordinates x/y of the start points, in the order matching u0..u4."""
    f = _phi()
    return [-(f * f), -1 / (f * f), QQ_SQRT5.one, 1 / (2 * f), 2 * f]


def d5_recomputed() -> tuple[QuadricPencil, dict]:
    """Trace pencil of the start points, diagonally rescaled so that q1 is the reference q1.

    Returns the pencil and a dict with the scalar and the diagonal used.
    """
    K = QQ_SQRT5
    roots = d5_coordinate_roots()
    alg = EtaleAlgebra.from_roots(K, roots)
    basis = alg.idempotents([[-r, 1] for r in roots])
    q0, q1 = trace_quadrics(alg, None, basis).forms()
    target = d5_reference().q1
    t = target.gram[0][0] / q1.gram[0][0]
    d = []
    for k in range(5):
        r = numfield.sqrt(target.gram[k][k] / (t * q1.gram[k][k]))
        if r is None:
            raise ArithmeticError("rescaling to the reference q1 needs a non-square")
        d.append(r)
    new = QuadricPencil(diagonal_transform(q1, d).scale(t), diagonal_transform(q0, d).scale(t))
    return new, {"t": t, "d": tuple(d)}


def d5_generators():
    K, f = QQ_SQRT5, _phi()
    g1 = ProjMap5.from_images(K, [{4: 2}, {0: 2 * f + 1}, {3: f - 1}, {1: f}, {2: (f + 1) * HALF}])
    g2 = ProjMap5.from_images(K, [{1: 2 - f}, {0: f + 1}, {2: 1}, {4: 2 * f}, {3: (f - 1) * HALF}])
    return {"g1": g1, "g2": g2}


def d5_reference_relations():
    K, f = QQ_SQRT5, _phi()
    return {"g1": _T(K, [[-f, -f], [f, -f - 1]]), "g2": _T(K, [[0, 1], [1, 0]])}


def d5() -> SurfaceRecord:
    K = QQ_SQRT5
    pencil, info = d5_recomputed()
    reference = d5_reference()
    return SurfaceRecord(
        name="d5",
        field=K,
        pencil=pencil,
        generators=d5_generators(),
        relations=d5_reference_relations(),
        relation_source="reference",
        sign_group=sign_flips(K),
        expected_order=160,
        points=d5_start_points(),
        points_field=K,
        extras={"reference": reference, "rescaling": info},
    )


# ------------------------------------------------------- the C2^3 examples


def c23_quintic(K=QQ):
    """``P = (x-2)(x-1/2)(x+1)(x^2-x+1)`` and its factors, lowest degree first."""
    factors = [[-2, 1], [Fraction(-1, 2), 1], [1, 1], [1, -1, 1]]
    factors = [[K(c) for c in f] for f in factors]
    p = [K.one]
    for f in factors:
        p = poly.mul(p, f)
    return p, factors


def c23_algebra(K=QQ):
    p, factors = c23_quintic(K)
    alg = EtaleAlgebra(K, p)
    e1, e2, e3, eq, teq = alg.component_basis(factors)
    # split components first, then theta*e_q before e_q
    return alg, factors, [e1, e2, e3, teq, eq]


def c23_trace_pencil(K=QQ, b=0, c=1) -> QuadricPencil:
    alg, factors, basis = c23_algebra(K)
    lam = alg.component_lambda(factors, [1, 1, 1, [K(c), K(b)]])
    return trace_quadrics(alg, lam, basis)


def c23_bc_pencil(K, b, c) -> QuadricPencil:
    """The reference two-parameter family of twists."""
    b, c = K(b), K(c)
    q1 = {(0, 0): 1, (1, 1): -8, (2, 2): 1, (3, 3): -3 * (c + 2 * b), (3, 4): 6 * (c - b), (4, 4): 3 * (b + 2 * c)}
    q2 = {(0, 0): 2, (1, 1): -4, (2, 2): -1, (3, 3): -3 * (b + 2 * c), (3, 4): -6 * (2 * b + c), (4, 4): 3 * (c - b)}
    return pencil_from_terms(K, q1, q2)


def c23_alpha_lambda(alpha):
    """``(b, c)`` of the twist ``(1, 1, 1, (-1/3 + alpha/9) x - 2 alpha/9)``."""
    return Fraction(-1, 3) + alpha * Fraction(1, 9), alpha * Fraction(-2, 9)


def c23_alpha_pencil(K, alpha) -> QuadricPencil:
    a = K(alpha)
    q1 = {(0, 0): 1, (1, 1): -8, (2, 2): 1, (3, 3): 2, (3, 4): 2 * (1 - a), (4, 4): -(a + 1)}
    q2 = {(0, 0): 2, (1, 1): -4, (2, 2): -1, (3, 3): a + 1, (3, 4): 4, (4, 4): 1 - a}
    return pencil_from_terms(K, q1, q2)


def _c23_points(K):
    e = K.gen if K == QQ_EPS3 else QQ_ZETA12.gen ** 4
    return _pts(K, [(2, 1), (1, 2), (1, -1), (-e, 1), (1, -e)])


def _c23_g1(K):
    return ProjMap5.from_images(K, [{2: 1}, {0: HALF}, {1: 2}, {4: 1}, {3: -1, 4: -1}])


def c23_semidirect() -> SurfaceRecord:
    K = QQ
    g2 = ProjMap5.from_images(K, [{1: 2}, {0: HALF}, {2: 1}, {4: 1}, {3: 1}])
    return SurfaceRecord(
        name="c23-semidirect",
        field=K,
        pencil=c23_bc_pencil(K, 0, 1),
        generators={"g1": _c23_g1(K), "g2": g2},
        relations={"g1": _T(K, [[0, -1], [1, -1]]), "g2": _T(K, [[0, -1], [-1, 0]])},
        relation_source="reference",
        sign_group=sign_flips(K, (0, 1, 2)),
        expected_order=48,
        points=_c23_points(QQ_EPS3),
        points_field=QQ_EPS3,
        embed=_rat_embed(QQ_EPS3),
    )


def _check_alpha_beta(alpha: FieldElement, beta: FieldElement):
    if alpha * alpha + beta * beta != -3:
        raise ValueError("need alpha^2 + beta^2 = -3")
    if beta.is_zero():
        raise ValueError("beta must be nonzero")


def c23_nonsplit(alpha=None, beta=None) -> SurfaceRecord:
    """Over Q(i); default ``(alpha, beta) = (1, 2i)``."""
    K = QQ_I
    i = K.gen
    alpha = K(1) if alpha is None else K(alpha)
    beta = 2 * i if beta is None else K(beta)
    _check_alpha_beta(alpha, beta)
    ib = 1 / beta
    g2 = ProjMap5.from_images(
        K,
        [{1: 2}, {0: HALF}, {2: 1}, {3: (-alpha - 1) * ib, 4: -2 * ib}, {3: (alpha - 1) * ib, 4: (alpha + 1) * ib}],
    )
    return SurfaceRecord(
        name="c23-nonsplit",
        field=K,
        pencil=c23_alpha_pencil(K, alpha),
        generators={"g1": _c23_g1(K), "g2": g2},
        relations={"g1": _T(K, [[0, -1], [1, -1]]), "g2": _T(K, [[0, -1], [-1, 0]])},
        relation_source="reference",
        sign_group=sign_flips(K, (0, 1, 2)),
        expected_order=48,
        points=_c23_points(QQ_ZETA12),
        points_field=QQ_ZETA12,
        embed=numfield.embed_into_zeta12,
        special_points=[((2, 1, 2, 0, 0), True), ((1, 0, 0, 0, 0), False)],
        extras={"alpha": alpha, "beta": beta},
    )


_BUILDERS = {
    "c2": c2,
    "c4": c4,
    "s3-split": s3_split,
    "d5": d5,
    "c23-semidirect": c23_semidirect,
    "c23-nonsplit": c23_nonsplit,
}


def get(name: str, **params) -> SurfaceRecord:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown surface {name!r}; known: {', '.join(NAMES)}") from None
    return builder(**params)


# -------------------------------------------------------------------- checks


def fmt_T(T) -> str:
    return "[" + "; ".join(" ".join(numfield.format_element(x) for x in row) for row in T) + "]"


def verify(rec: SurfaceRecord) -> list[Check]:
    out = [Check("smooth", is_smooth(rec.pencil))]

    pts = discriminant_points(rec.pencil, rec.points_field, rec.embed)
    witness = equivalent_point_sets(pts, rec.points) if len(pts) == 5 else None
    out.append(Check("discriminant-points", witness is not None, f"roots {pts}"))

    for gname, g in rec.generators.items():
        T = preserves_pencil(g, rec.pencil)
        if T is None:
            out.append(Check(f"{gname}-preserves-pencil", False))
            continue
        expected = rec.relations.get(gname)
        ok = expected is None or T == expected
        out.append(Check(f"{gname}-relation", ok, fmt_T(T)))
    for k, s in enumerate(rec.sign_group):
        if preserves_pencil(s, rec.pencil) is None:
            out.append(Check(f"sign-{k}-preserves-pencil", False))
            break
    else:
        out.append(Check("signs-preserve-pencil", True, f"{len(rec.sign_group)} flips"))

    order = group_order_of_maps(rec.all_generators())
    out.append(Check("group-order", order == rec.expected_order, f"{order} (expected {rec.expected_order})"))

    for pt, expected in rec.special_points:
        got = point_on(rec.pencil, pt)
        out.append(Check(f"point-{':'.join(map(str, pt))}", got == expected, f"on surface: {got}"))

    if rec.name == "d5":
        out.extend(_d5_extra(rec))
    if rec.name == "c23-semidirect":
        out.extend(_trace_form_checks())
    if rec.name == "c23-nonsplit":
        out.extend(_alpha_checks(rec))
    return out


def _d5_extra(rec) -> list[Check]:
    reference = rec.extras["reference"]
    w = pencil_equivalent(reference, rec.pencil)
    return [
        Check("reference-q1-recovered", rec.pencil.q1 == reference.q1),
        # informational: the reference q2 against the recomputed pencil
        Check("reference-pencil-comparison", True, "equivalent" if w is not None else "not equivalent"),
    ]


def c23_witness():
    """Diagonal rescaling taking the trace pencil to the reference quasi-split pencil."""
    return pencil_equivalent(c23_trace_pencil(QQ), c23_bc_pencil(QQ, 0, 1))


def _trace_form_checks() -> list[Check]:
    w = c23_witness()
    out = [Check("trace-form-equivalent", w is not None, str(w))]
    if w is None:
        return out
    ok = all(
        check_witness(c23_trace_pencil(QQ, b, c), c23_bc_pencil(QQ, b, c), w)
        for b, c in [(0, 1), (1, 0), (2, -3), (Fraction(1, 3), Fraction(5, 7))]
    )
    out.append(Check("bc-family-same-witness", ok))
    return out


def embed_witness(w, K):
    d, T = w
    f = _rat_embed(K)
    return tuple(f(x) for x in d), tuple(tuple(f(x) for x in r) for r in T)


def alpha_pencil_from_trace(K, alpha) -> QuadricPencil:
    b, c = c23_alpha_lambda(K(alpha))
    return c23_trace_pencil(K, b, c)


def _alpha_checks(rec) -> list[Check]:
    K = rec.field
    w = c23_witness()
    if w is None:
        return [Check("alpha-twist-from-trace", False, "no base witness")]
    alpha = rec.extras["alpha"]
    ok = check_witness(alpha_pencil_from_trace(K, alpha), rec.pencil, embed_witness(w, K))
    return [Check("alpha-twist-from-trace", ok)]


def all_passed(checks) -> bool:
    return all(c.ok for c in checks)
