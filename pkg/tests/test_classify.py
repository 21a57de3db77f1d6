import hypothesis.strategies as st
import pytest
from hypothesis import given

from dp4aut import classify, weyl
from dp4aut.classify import FieldProfile as FP
from dp4aut.weyl import ClassName as CN

# (i, eps3, sqrt5, s2s) -> (maximal qs set, maximal set)
TABLE = {
    (0, 0, 0, 0): ({"C2^4:C2", "C2^3:S3"}, {"C2^4:C2", "C2^3:S3"}),
    (0, 0, 0, 1): ({"C2^4:C2", "C2^3:S3"}, {"C2^4:C2", "C2^3:S3", "C2^3.S3"}),
    (0, 0, 1, 0): ({"C2^4:D5", "C2^3:S3"}, {"C2^4:D5", "C2^3:S3"}),
    (0, 0, 1, 1): ({"C2^4:D5", "C2^3:S3"}, {"C2^4:D5", "C2^3:S3", "C2^3.S3"}),
    (0, 1, 0, 1): ({"C2^4:S3"}, {"C2^4:S3"}),
    (0, 1, 1, 1): ({"C2^4:S3", "C2^4:D5"}, {"C2^4:S3", "C2^4:D5"}),
    (1, 0, 0, 1): ({"C2^4:C4", "C2^3:S3"}, {"C2^4:C4", "C2^3:S3", "C2^3.S3"}),
    (1, 0, 1, 1): ({"C2^4:C4", "C2^4:D5", "C2^3:S3"}, {"C2^4:C4", "C2^4:D5", "C2^3:S3", "C2^3.S3"}),
    (1, 1, 0, 1): ({"C2^4:C4", "C2^4:S3"}, {"C2^4:C4", "C2^4:S3"}),
    (1, 1, 1, 1): ({"C2^4:C4", "C2^4:S3", "C2^4:D5"}, {"C2^4:C4", "C2^4:S3", "C2^4:D5"}),
}

profiles = st.sampled_from(classify.valid_profiles())
subgroups = st.sampled_from(list(CN)).map(weyl.named_class)


def names(s):
    return {str(x) for x in s}


def test_valid_profiles():
    assert len(classify.all_profiles()) == 16
    assert len(classify.valid_profiles()) == 10
    with pytest.raises(classify.ProfileError):
        FP(has_i=True).validate()
    with pytest.raises(classify.ProfileError):
        FP(has_eps3=True).validate()


@pytest.mark.parametrize("bits", sorted(TABLE))
def test_table(bits):
    p = FP(*map(bool, bits))
    qs, m = TABLE[bits]
    assert names(classify.maximal_qs(p)) == qs
    assert names(classify.maximal_m(p)) == m


def test_eps3_absorbs_the_s3_classes():
    # C2^3:S3 and C2^3.S3 both sit inside C2^4:S3
    big = weyl.named_class(CN.C2_4_S3)
    for n in (CN.C2_3_S3, CN.C2_3_NS_S3):
        assert weyl.conjugate_into(weyl.named_class(n), big) is not None
    assert weyl.conjugate_into(weyl.named_class(CN.C2_3_NS_S3), weyl.named_class(CN.C2_3_S3)) is None


def test_field_catalog():
    assert names(classify.maximal_m(classify.profile_for_field("Q(i)"))) == {"C2^4:C4", "C2^3:S3", "C2^3.S3"}
    assert classify.profile_for_field("Q(sqrt2)") == classify.profile_for_field("Q")
    with pytest.raises(classify.ProfileError):
        classify.profile_for_field("Q(7^(1/3))")


def test_parse_profile():
    assert classify.parse_profile("all-true") == FP(True, True, True, True)
    assert classify.parse_profile("i=yes,s2s=yes") == FP(True, False, False, True)
    with pytest.raises(classify.ProfileError):
        classify.parse_profile("i=no,eps3=yes,sqrt5=no,s2s=no")
    with pytest.raises(classify.ProfileError):
        classify.parse_profile("foo=yes")


def test_all_true_has_three_maximal_groups():
    assert names(classify.maximal_m(classify.parse_profile("all-true"))) == {"C2^4:C4", "C2^4:S3", "C2^4:D5"}


def _leq(p, q):
    return all(a <= b for a, b in zip(p.as_dict().values(), q.as_dict().values()))


@given(profiles, profiles, subgroups)
def test_in_mk_monotone(p, q, g):
    if _leq(p, q) and classify.in_mk(g, p):
        assert classify.in_mk(g, q)


@given(profiles)
def test_rationality_difference(p):
    diff = {n for n in CN if classify.in_mk(weyl.named_class(n), p) != classify.in_mk_rat(weyl.named_class(n), p)}
    if p.sum2sq_minus3 and not p.has_eps3:
        # I2 is conjugate to C2.S3 and is dropped with it
        assert diff == {CN.C2_3_NS_S3, CN.C2_NS_S3, CN.I2}
    else:
        assert diff == set()


@given(profiles)
def test_rat_subset(p):
    for n in CN:
        g = weyl.named_class(n)
        if classify.in_mk_rat(g, p):
            assert classify.in_mk(g, p)


def test_stable_window():
    aut = weyl.named_class(CN.C2_NS_S3)
    assert classify.stable_window(weyl.group("c4(45)"), aut) == "excluded"
    assert classify.stable_window(weyl.named_class(CN.I2), weyl.closure([])) == "possible"
    assert classify.stable_window(weyl.closure([]), weyl.closure([])) == "excluded"
    # no conjugate of I1, I2, I3 fits inside the centralizer of C2.S3
    cen = weyl.centralizer(aut)
    for n in (CN.I1, CN.I2, CN.I3):
        assert cen.order < weyl.named_class(n).order
