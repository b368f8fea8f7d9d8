import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadpencil.cli import ProblemFile, dump_problem, main, parse_problem, render, run
from quadpencil.errors import InvalidInput

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"

MINIMAL = json.dumps({
    "task": "decide-rplane", "n": 2, "r": 0,
    "f": {"dim": 3, "entries": ["1", "0", "0", "1", "0", "1"]},
    "g": {"dim": 3, "entries": ["1", "0", "0", "2", "0", "3"]},
})


def test_minimal_parse():
    pf = parse_problem(MINIMAL)
    assert pf.f.dim == pf.g.dim == 3 and (pf.n, pf.r) == (2, 0)


def test_cross_terms_are_halved():
    text = MINIMAL.replace('["1", "0", "0", "1", "0", "1"]', '["1", "3/7", "0", "1", "0", "1"]')
    assert parse_problem(text).f.gram[0][1] == pytest.approx(3 / 14)


@pytest.mark.parametrize("mutate, where", [
    (lambda d: d["f"]["entries"].__setitem__(2, "1/0"), "$.f.entries[2]"),
    (lambda d: d["f"]["entries"].__setitem__(0, "x"), "$.f.entries[0]"),
    (lambda d: d.pop("g"), "$"),
    (lambda d: d["g"]["entries"].pop(), "$.g.entries"),
    (lambda d: d.__setitem__("task", "frobnicate"), "$.task"),
])
def test_parse_errors_carry_location(mutate, where):
    d = json.loads(MINIMAL)
    mutate(d)
    with pytest.raises(InvalidInput) as e:
        parse_problem(json.dumps(d))
    assert e.value.location == where


def test_malformed_json_location():
    with pytest.raises(InvalidInput) as e:
        parse_problem('{"task": "decide-rplane",\n "n": }')
    assert e.value.location.startswith("line 2")


entry = st.fractions(max_denominator=20).map(lambda q: f"{q.numerator}/{q.denominator}")


@settings(max_examples=50)
@given(st.integers(1, 4).flatmap(lambda m: st.tuples(
    st.just(m), st.lists(entry, min_size=m * (m + 1) // 2, max_size=m * (m + 1) // 2),
    st.lists(entry, min_size=m * (m + 1) // 2, max_size=m * (m + 1) // 2))))
def test_round_trip(data):
    m, fe, ge = data
    text = json.dumps({"task": "witt-trivial", "f": {"dim": m, "entries": fe},
                       "g": {"dim": m, "entries": ge}, "options": {"residue_degree_limit": 5}})
    pf = parse_problem(text)
    again = parse_problem(dump_problem(pf))
    assert again == pf
    assert dump_problem(again) == dump_problem(pf)


EXPECTED = {
    "planted_yes_r1_n4": (0, "yes"),
    "planted_yes_r1_n3": (0, "yes"),
    "conic_pair_no": (0, "no"),
    "odd_gate_no": (0, "no"),
    "indeterminate_cubic_residue": (2, "indeterminate"),
    "singular_pencil_error": (1, None),
    "witt_trivial_yes": (0, "yes"),
    "form_invariants": (0, None),
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_exit_code_contract(name):
    pf = parse_problem((PROBLEMS / f"{name}.json").read_text())
    doc, code = run(pf)
    want_code, want_decision = EXPECTED[name]
    assert code == want_code
    assert doc["report"].get("decision") == want_decision


def test_reports_are_byte_stable():
    pf = parse_problem((PROBLEMS / "indeterminate_cubic_residue.json").read_text())
    a, _ = run(pf)
    b, _ = run(pf)
    assert render(a["report"]) == render(b["report"])
    assert "timing" not in a["report"]


def test_report_fields():
    doc, _ = run(parse_problem((PROBLEMS / "planted_yes_r1_n4.json").read_text()))
    rep = doc["report"]
    for key in ("decision", "hypothesis", "delta", "residue_checks", "specialization", "warnings"):
        assert key in rep
    assert set(rep["delta"]) >= {"polynomial", "factorization"}


def test_main_decide_and_invariants(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["decide", "--input", str(PROBLEMS / "conic_pair_no.json"), "--output", str(out)]) == 0
    assert json.loads(out.read_text())["report"]["decision"] == "no"
    form = tmp_path / "f.json"
    form.write_text(json.dumps({"dim": 6, "entries": ["1", "0", "0", "0", "0", "0", "1", "0", "0", "0",
                                                      "0", "1", "0", "0", "0", "1", "0", "0", "1", "0", "1"]}))
    assert main(["invariants", "--form", str(form), "--place", "3"]) == 0
    rep = json.loads(capsys.readouterr().out)["report"]
    assert rep["witt_index_local"] == 2 and rep["witt_index_Q"] == 0


def test_main_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"task": "decide-rplane", "n": 2, "r": 0, "f": {"dim": 3, "entries": ["1/0"]}}')
    assert main(["decide", "--input", str(bad)]) == 1
    err = json.loads(capsys.readouterr().out)["report"]["error"]
    assert err["type"] == "invalid_input"
    assert main(["decide", "--input", str(tmp_path / "missing.json")]) == 1


def test_main_override_degree_limit(capsys):
    code = main(["decide", "--input", str(PROBLEMS / "indeterminate_cubic_residue.json"),
                 "--residue-degree-limit", "1"])
    assert code == 2
    rep = json.loads(capsys.readouterr().out)["report"]
    assert any("exceeds limit" in c["reason"] for c in rep["residue_checks"])


def test_demo_subcommand(capsys):
    assert main(["demo", "remark3-10"]) == 0
    rep = json.loads(capsys.readouterr().out)["report"]
    assert rep["hypothesis"]["status"] == "violated"
    assert (rep["r"], rep["n"], rep["dim"]) == (4, 9, 10)
    assert rep["locally_solvable_everywhere_checked"]


def test_problemfile_defaults():
    assert ProblemFile("demo-remark3", variant="7").options["search_bound"] is None
