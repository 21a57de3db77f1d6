import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import line_meets, weyl_elements
from dp4aut import lines, picard, weyl
from dp4aut.lines import ALL_LINES, GaloisAction, Line


def test_sixteen_lines():
    assert len(ALL_LINES) == 16 and len(set(ALL_LINES)) == 16


@pytest.mark.parametrize("text", ["E1", "L25", "L_34", "C"])
def test_parse_roundtrip(text):
    l = Line.parse(text)
    assert Line.parse(str(l)) == l


def test_bad_lines():
    for bad in ["E6", "L11", "X", "L123"]:
        with pytest.raises(ValueError):
            Line.parse(bad)


def test_incidence_matches_blowup_rules():
    for a in ALL_LINES:
        for b in ALL_LINES:
            assert lines.incidence(a, b) == line_meets(str(a), str(b)), (a, b)
            assert lines.incidence(a, b) == picard.intersect(picard.class_of(a), picard.class_of(b))


def test_each_line_meets_five_others():
    for a in ALL_LINES:
        assert sum(lines.incidence(a, b) for b in ALL_LINES if b != a) == 5


def test_sign_kernel_is_simply_transitive():
    assert lines.torsor_check()
    images = {lines.line_action(a, Line("C")) for a in weyl.sign_kernel()}
    assert len(images) == 16


@given(weyl_elements(), st.sampled_from(ALL_LINES), st.sampled_from(ALL_LINES))
def test_action_preserves_incidence(g, a, b):
    assert lines.incidence(lines.line_action(g, a), lines.line_action(g, b)) == lines.incidence(a, b)


@given(weyl_elements(), weyl_elements(), st.sampled_from(ALL_LINES))
def test_line_action_is_an_action(g, h, l):
    assert lines.line_action(g * h, l) == lines.line_action(g, lines.line_action(h, l))


def test_c4_45_sends_e5_to_c():
    assert lines.line_action(weyl.parse("c4(45)"), "E5") == Line("C")


def test_twist_orbits():
    act = lines.twist_scenario()
    orbits = lines.galois_orbits(act)
    assert sorted(map(sorted, lines.format_orbits(orbits))) == sorted(
        map(sorted, [["C", "E4", "E5", "L45"], ["E1", "L14", "L15", "L23"], ["E2", "L13", "L24", "L25"], ["E3", "L12", "L34", "L35"]])
    )
    assert lines.is_k_minimal(orbits)
    assert not lines.is_quasi_split(orbits)


def test_trivial_and_swap():
    triv = lines.galois_orbits(GaloisAction([[0]], [weyl.IDENTITY]))
    assert len(triv) == 16 and lines.is_quasi_split(triv) and not lines.is_k_minimal(triv)
    swap = lines.galois_orbits(GaloisAction(lines.cyclic_table(2), [weyl.IDENTITY, weyl.parse("(45)")]))
    assert lines.is_quasi_split(swap) and not lines.is_k_minimal(swap)


def test_cocycle_violation_names_pair():
    p = weyl.parse
    with pytest.raises(lines.CocycleError) as e:
        GaloisAction(lines.cyclic_table(4), [p("id"), p("(45)"), p("id"), p("(45)")], [p("id"), p("c4"), p("id"), p("c5")])
    assert e.value.pair is not None


def test_not_a_homomorphism():
    with pytest.raises(lines.HomomorphismError):
        GaloisAction(lines.cyclic_table(2), [weyl.IDENTITY, weyl.parse("(123)")])


def test_cohomologous_cocycles_give_same_orbit_shape():
    # twisting the cocycle by the coboundary of c1 changes nothing up to relabelling
    p = weyl.parse
    base = lines.twist_scenario()
    b = p("c1")
    cob = [b * base.rep[i] * b * base.rep[i].inverse() for i in range(4)]
    coc = [base.cocycle[i] * cob[i] for i in range(4)]
    other = GaloisAction(base.table, base.rep, coc)
    s1 = sorted(len(o) for o in lines.galois_orbits(base))
    s2 = sorted(len(o) for o in lines.galois_orbits(other))
    assert s1 == s2
    assert lines.is_k_minimal(lines.galois_orbits(other))


def test_scenario_json_roundtrip(tmp_path):
    act = lines.twist_scenario()
    f = tmp_path / "twist.json"
    f.write_text(json.dumps(lines.scenario_to_dict(act)))
    back = lines.load_scenario(f)
    assert lines.format_orbits(lines.galois_orbits(back)) == lines.format_orbits(lines.galois_orbits(act))
