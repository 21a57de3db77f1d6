from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import euler_sum
from dp4aut import catalog, numfield, p1, surfaces
from dp4aut.numfield import QQ
from dp4aut.surfaces import EtaleAlgebra, ProjMap5, Quadric, QuadricPencil

distinct_roots = st.lists(st.integers(-9, 9), min_size=5, max_size=5, unique=True)


def diag_pencil(alphas):
    return QuadricPencil(Quadric.diagonal(QQ, [1] * 5), Quadric.diagonal(QQ, alphas))


def test_gram_convention():
    q = Quadric.from_terms(QQ, {(0, 1): 3, (2, 2): 5})
    assert q.gram[0][1] == Fraction(3, 2) and q.gram[1][0] == Fraction(3, 2)
    assert q.terms() == {(0, 1): QQ(3), (2, 2): QQ(5)}
    assert q([1, 1, 1, 0, 0]) == 8


def test_degenerate_pencil():
    q = Quadric.diagonal(QQ, [1, 2, 3, 4, 5])
    with pytest.raises(surfaces.DegeneratePencilError):
        QuadricPencil(q, q)
    with pytest.raises(surfaces.DegeneratePencilError):
        QuadricPencil(q, q.scale(QQ(-3)))


def test_diagonal_discriminant():
    # det(mu I + lam diag(a)) = prod (mu + a_i lam)
    d = surfaces.discriminant(diag_pencil([0, 1, 2, 3, 4]))
    assert [x.coeffs[0] for x in d] == [1, 10, 35, 50, 24, 0]
    assert surfaces.is_smooth(diag_pencil([0, 1, 2, 3, 4]))
    assert not surfaces.is_smooth(diag_pencil([1, 1, 2, 3, 4]))


@given(distinct_roots)
def test_diagonal_discriminant_points(alphas):
    pts = surfaces.discriminant_points(diag_pencil(alphas))
    assert set(pts) == {p1.P1Point.of(QQ, -a, 1) if a else p1.P1Point.of(QQ, 0, 1) for a in alphas}


@given(st.lists(st.integers(-7, 7), min_size=5, max_size=5), st.integers(-3, 3))
def test_euler_identities(low, shift):
    # P = x^5 + (random lower terms)
    P = [QQ(c) for c in low] + [QQ(1)]
    try:
        alg = EtaleAlgebra(QQ, P)
    except ValueError:
        return
    w = alg.inv(alg.p_prime())
    for m in range(5):
        assert alg.trace(alg.mul(alg.power(alg.theta, m), w)) == (1 if m == 4 else 0)
    assert alg.trace(alg.one) == 5


@given(distinct_roots)
def test_euler_identities_against_partial_fractions(roots):
    alg = EtaleAlgebra.from_roots(QQ, roots)
    w = alg.inv(alg.p_prime())
    for m in range(7):
        assert alg.trace(alg.mul(alg.power(alg.theta, m), w)) == euler_sum(roots, m)


def test_trace_of_theta():
    alg = EtaleAlgebra(QQ, [1, 2, 3, 4, 7, 1])
    assert alg.trace(alg.theta) == -7


@given(distinct_roots)
def test_trace_pencil_discriminant_matches_roots(roots):
    pencil = surfaces.trace_quadrics(EtaleAlgebra.from_roots(QQ, roots))
    pts = surfaces.discriminant_points(pencil)
    assert len(pts) == 5
    assert p1.equivalent_point_sets(pts, [p1.P1Point.of(QQ, r, 1) for r in roots]) is not None


def test_not_invertible():
    alg = EtaleAlgebra.from_roots(QQ, [0, 1, 2, 3, 4])
    with pytest.raises(surfaces.NotInvertibleError):
        alg.inv(alg.theta)


def test_bad_algebras():
    with pytest.raises(ValueError):
        EtaleAlgebra(QQ, [0, 0, 1, 0, 0, 1][:5])
    with pytest.raises(ValueError):
        EtaleAlgebra.from_roots(QQ, [1, 1, 2, 3, 4])


def test_sign_group_has_order_16():
    assert surfaces.group_order_of_maps(surfaces.sign_maps(QQ)) == 16
    assert surfaces.group_order_of_maps(surfaces.sign_flips(QQ)) == 16


def test_group_cap():
    m = ProjMap5.of(QQ, [[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    with pytest.raises(RuntimeError):
        surfaces.group_order_of_maps([m], cap=50)


def test_singular_map_rejected():
    with pytest.raises(ValueError):
        ProjMap5.of(QQ, [[1] * 5] * 5)


def test_generic_map_moves_pencil():
    m = ProjMap5.of(QQ, [[1, 2, 0, 0, 1], [0, 1, 3, 0, 0], [1, 0, 1, 1, 0], [0, 0, 2, 1, 5], [1, 1, 1, 1, 2]])
    assert surfaces.preserves_pencil(m, catalog.c2().pencil) is None
    assert surfaces.preserves_pencil(surfaces.identity_map(QQ), catalog.c2().pencil) == ((1, 0), (0, 1))


def test_point_on():
    rec = catalog.c23_nonsplit()
    assert surfaces.point_on(rec.pencil, [2, 1, 2, 0, 0])
    assert not surfaces.point_on(rec.pencil, [1, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        surfaces.point_on(rec.pencil, [0] * 5)


@given(st.integers(1, 9), st.integers(-5, 5).filter(bool))
def test_point_on_scale_invariant(k, t):
    p = catalog.c23_nonsplit().pencil
    assert surfaces.point_on(p, [2 * t, t, 2 * t, 0, 0])
    assert not surfaces.point_on(p, [k, 0, 0, 0, 0])


def test_pencil_equivalent_self():
    p = catalog.c2().pencil
    d, T = surfaces.pencil_equivalent(p, p)
    assert surfaces.check_witness(p, p, (d, T))


@given(st.lists(st.sampled_from([1, -1, 2, 3, Fraction(1, 2)]), min_size=5, max_size=5))
def test_pencil_equivalent_finds_rescalings(d):
    p = diag_pencil([0, 1, 2, 3, 4])
    q = QuadricPencil(surfaces.diagonal_transform(p.q1, [QQ(x) for x in d]), surfaces.diagonal_transform(p.q2, [QQ(x) for x in d]))
    w = surfaces.pencil_equivalent(p, q)
    assert w is not None and surfaces.check_witness(p, q, w)


def test_pencil_equivalent_different_fields():
    assert surfaces.pencil_equivalent(catalog.c23_semidirect().pencil, catalog.d5().pencil) is None


def test_pencil_equivalent_needs_squares():
    p = diag_pencil([0, 1, 2, 3, 4])
    # q1 scaled by 2 in one coordinate only: not a square ratio
    q = QuadricPencil(Quadric.diagonal(QQ, [2, 1, 1, 1, 1]), Quadric.diagonal(QQ, [0, 1, 2, 3, 4]))
    assert surfaces.pencil_equivalent(p, q) is None


def test_json_roundtrip():
    for name in catalog.NAMES:
        p = catalog.get(name).pencil
        back = surfaces.loads_pencil(surfaces.dumps_pencil(p))
        assert back == p and back.field == p.field


def test_catalog_delegation():
    assert surfaces.catalog("c4").field.name == "Q(i)"
    with pytest.raises(KeyError):
        surfaces.catalog("bogus")


def test_d5_reference_coefficient():
    s5 = numfield.sqrt5()
    q2 = catalog.d5_reference().q2.terms()
    assert q2[(4, 4)] == 8 * s5 - 16
