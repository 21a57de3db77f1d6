import json

import pytest

from dp4aut import lines
from dp4aut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, (json.loads(out) if out.strip() else None), err


def test_classify_q_i(capsys):
    code, rep, _ = run_json(capsys, "classify", "--field", "Q(i)")
    assert code == 0
    assert rep["maximal_m"] == ["C2^4:C4", "C2^3:S3", "C2^3.S3"]
    assert rep["rationality_excluded"] == ["C2^3.S3", "C2.S3"]


def test_classify_all_true(capsys):
    code, rep, _ = run_json(capsys, "classify", "--profile", "all-true")
    assert code == 0 and len(rep["maximal_m"]) == 3
    assert rep["rationality_excluded"] == []


def test_classify_bad_profile(capsys):
    code, _, err = run(capsys, "classify", "--profile", "i=no,eps3=yes,sqrt5=no,s2s=no")
    assert code == 2 and "s2s" in err
    assert run(capsys, "classify", "--field", "Q(i)", "--profile", "all-true")[0] == 2


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "classify", "--field", "Q")
    assert code == 0 and json.loads(out)["command"] == "classify"


def test_group_centralizer(capsys):
    code, rep, _ = run_json(capsys, "group", "c4c5,(123),c4(12)(45)", "centralizer")
    assert code == 0
    assert rep["result"] == {"order": 4, "generators": ["c4(45)"]}


@pytest.mark.parametrize("gens, order", [("c1,c2", 4), ("", 1), ("C2^4:D5", 160), ("I3", 24)])
def test_group_order(capsys, gens, order):
    code, rep, _ = run_json(capsys, "group", gens, "order")
    assert code == 0 and rep["result"] == order


def test_group_split_and_conjugate(capsys):
    assert run_json(capsys, "group", "C2^3.S3", "is-split")[1]["result"] is False
    assert run_json(capsys, "group", "C2^3:S3", "is-split")[1]["result"] is True
    code, rep, _ = run_json(capsys, "group", "C2^3.S3", "conjugate-into", "C2^4:S3")
    assert code == 0 and rep["result"] is not None
    assert run(capsys, "group", "c1", "conjugate-into")[0] == 2


def test_group_image_kernel(capsys):
    assert run_json(capsys, "group", "C2.S3", "image-s5")[1]["result"]["order"] == 6
    assert run_json(capsys, "group", "C2.S3", "kernel")[1]["result"]["generators"] == ["c4c5"]


def test_group_parse_error(capsys):
    code, _, err = run(capsys, "group", "c4(12)x", "order")
    assert code == 2 and "position 6" in err


def test_lines_builtins(capsys):
    code, rep, _ = run_json(capsys, "lines", "twist")
    assert code == 0
    assert rep["orbit_sizes"] == [4, 4, 4, 4]
    assert rep["k_minimal"] is True and rep["quasi_split"] is False
    rep = run_json(capsys, "lines", "trivial")[1]
    assert len(rep["orbits"]) == 16 and rep["quasi_split"] and not rep["k_minimal"]
    assert run_json(capsys, "lines", "swap45")[1]["quasi_split"] is True


def test_lines_file_and_cocycle_error(capsys, tmp_path):
    good = tmp_path / "twist.json"
    good.write_text(json.dumps(lines.scenario_to_dict(lines.twist_scenario())))
    assert run_json(capsys, "lines", str(good))[1]["k_minimal"] is True
    d = lines.scenario_to_dict(lines.twist_scenario())
    d["cocycle"][2][1] = "id"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(d))
    code, _, err = run(capsys, "lines", str(bad))
    assert code == 2 and "pair" in err
    assert run(capsys, "lines", str(tmp_path / "missing.json"))[0] == 2


def test_surface_verify(capsys):
    code, rep, _ = run_json(capsys, "surface", "d5", "--verify")
    assert code == 0 and rep["passed"]
    names = {c["name"]: c for c in rep["checks"]}
    assert names["reference-pencil-comparison"]["detail"] == "equivalent"
    code, rep, _ = run_json(capsys, "surface", "c23-nonsplit", "--verify")
    assert code == 0
    assert any(c["name"] == "point-2:1:2:0:0" and c["ok"] for c in rep["checks"])


def test_surface_text_output(capsys):
    code, out, _ = run(capsys, "surface", "c4", "--verify")
    assert code == 0 and "[PASS] group-order" in out and "FAIL" not in out


def test_surface_params(capsys):
    assert run(capsys, "surface", "c2", "--a", "5", "--verify")[0] == 0
    assert run(capsys, "surface", "c2", "--a", "1")[0] == 2
    assert run(capsys, "surface", "c23-nonsplit", "--alpha", "[0, 2]", "--beta", "1", "--verify")[0] == 0
    assert run(capsys, "surface", "c23-nonsplit", "--alpha", "1", "--beta", "1")[0] == 2


def test_surface_dump_roundtrip(capsys):
    from dp4aut import catalog, surfaces

    rep = run_json(capsys, "surface", "c4", "--dump")[1]
    assert surfaces.pencil_from_json(rep["pencil"]) == catalog.c4().pencil


def test_surface_unknown(capsys):
    code, _, err = run(capsys, "surface", "bogus")
    assert code == 2 and "bogus" in err


def test_traceform(capsys):
    code, rep, _ = run_json(capsys, "traceform", "--roots", "0;1;2;3;4")
    assert code == 0 and rep["smooth"] is True
    code, rep, _ = run_json(capsys, "traceform", "--poly", "1;0;0;0;0;1", "--lambda", "1;1")
    assert code == 0
    assert run(capsys, "traceform", "--roots", "1;1;2;3;4")[0] == 2
    assert run(capsys, "traceform")[0] == 2


def test_deterministic(capsys):
    a = run(capsys, "group", "I1", "elements", "--json")[1]
    b = run(capsys, "group", "I1", "elements", "--json")[1]
    assert a == b


def test_bad_usage(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "group", "c1", "frobnicate")[0] == 2
