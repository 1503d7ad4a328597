"""File format round-trips and the command surface."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from splicezeta.corpus import golden_plumbing_graphs, golden_splice_diagrams
from splicezeta.io import ParseError, parse_diagram, print_diagram

CORPUS = Path(__file__).resolve().parent.parent / "src" / "splicezeta" / "corpus"


def run_cli(*args, expect: int = 0):
    proc = subprocess.run(
        [sys.executable, "-m", "splicezeta.cli", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == expect, (args, proc.returncode, proc.stderr, proc.stdout)
    return proc.stdout


def test_roundtrip_splice():
    for name, d in golden_splice_diagrams().items():
        text = print_diagram(d, name)
        kind, got_name, obj = parse_diagram(text)
        assert kind == "splice" and got_name == name
        assert print_diagram(obj, name) == text


def test_roundtrip_plumbing():
    for name, g in golden_plumbing_graphs().items():
        text = print_diagram(g, name)
        kind, got_name, obj = parse_diagram(text)
        assert kind == "plumbing" and got_name == name
        assert print_diagram(obj, name) == text


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_diagram("")
    with pytest.raises(ParseError):
        parse_diagram("splice-diagram x\nunknownrec a b\n")
    with pytest.raises(ParseError):
        parse_diagram("splice-diagram x\nvertex a\nvertex a\n")
    with pytest.raises(ParseError):
        parse_diagram("splice-diagram x\nvertex a\nfarrow f at a w=oops N=1\n")
    with pytest.raises(ParseError):
        parse_diagram("plumbing-graph x\nvertex a\n")  # missing self=


def test_comments_and_defaults():
    kind, name, d = parse_diagram(
        "# leading comment\nsplice-diagram demo\nvertex a # trailing\nvertex b\nedge a b\n"
    )
    assert d.edges[0].wa == 1 and d.edges[0].wb == 1


def test_cli_validate_ok_and_violations(tmp_path):
    out = run_cli("validate", str(CORPUS / "two_cusp.sd"))
    assert "valid" in out
    bad = tmp_path / "bad.sd"
    bad.write_text(
        "splice-diagram bad\nvertex v\nvertex b1\nvertex b2\nvertex b3\n"
        "edge v b1 2 1\nedge v b2 4 1\nedge v b3 3 1\nfarrow a at v w=1 N=1\n"
    )
    payload = json.loads(run_cli("validate", str(bad), "--json"))
    assert payload["valid"] is False
    assert any(v["kind"] == "coprimality" for v in payload["violations"])


def test_cli_zeta_json_golden():
    payload = json.loads(run_cli("zeta", str(CORPUS / "two_cusp.sd"), "--json"))
    z = payload["zeta"]
    assert z["numerator"] == ["-7/3", "7/6", "1/3"]
    assert z["denominator"] == ["13/3", "1/6", "-19/6", "1"]
    assert len(z["node_terms"]) == 3 and len(z["edge_terms"]) == 2


def test_cli_poles_and_eig():
    payload = json.loads(run_cli("poles", str(CORPUS / "two_cusp.sd"), "--json"))
    assert {p["s0"] for p in payload["poles"]} == {"-1", "2", "13/6"}
    out = json.loads(run_cli("eig", str(CORPUS / "two_cusp.sd"), "--lambda", "1/2", "--json"))
    assert out["in_eig"] is False


def test_cli_convert_and_reparse(tmp_path):
    out = run_cli("convert", str(CORPUS / "two_cusp.pg"))
    kind, name, d = parse_diagram(out)
    assert kind == "splice" and len(d.nodes()) == 3


def test_cli_splice_and_stars():
    payload = json.loads(
        run_cli("splice", str(CORPUS / "two_cusp.sd"), "--edge", "v1:v0", "--json")
    )
    assert payload["M"] == 1 and payload["i"] == -1
    assert payload["identity_holds"] is True
    stars = json.loads(run_cli("stars", str(CORPUS / "two_cusp.sd"), "--json"))
    assert set(stars["stars"]) == {"v1", "v0", "v1p"}


def test_cli_goal1_allowed_semigroup():
    payload = json.loads(run_cli("goal1", str(CORPUS / "two_cusp.sd"), "--json"))
    assert payload["holds"] is True and payload["allowed"] is False
    payload = json.loads(run_cli("allowed", str(CORPUS / "two_cusp.sd"), "--json"))
    assert payload["allowed"] is False
    payload = json.loads(run_cli("semigroup", str(CORPUS / "two_cusp.sd"), "--json"))
    assert payload["holds"] is False


def test_cli_realize_effective():
    payload = json.loads(
        run_cli(
            "realize", str(CORPUS / "two_cusp.sd"), "--lambda", "1/6", "--effective", "--json"
        )
    )
    assert payload["status"] == "realized"
    sol = payload["found"][0]
    assert all(v >= 1 for v in sol["values"].values())
    # warrow records appear in the text output
    text = run_cli("realize", str(CORPUS / "two_cusp.sd"), "--lambda", "1/6", "--effective")
    assert "warrow" in text


def test_cli_realize_unrealizable():
    payload = json.loads(
        run_cli("realize", str(CORPUS / "two_cusp_mult7.sd"), "--lambda", "37/42", "--json")
    )
    assert payload["status"] == "unrealizable-within-bound"
    assert payload["congruences"]


def test_cli_exit_codes(tmp_path):
    run_cli("validate", "/nonexistent.sd", expect=1)
    # precondition violation: convert on a splice diagram
    run_cli("convert", str(CORPUS / "two_cusp.sd"), expect=2)
    # non-unimodular conversion also refuses
    run_cli("stars", str(CORPUS / "rodrigues.pg"), expect=2)
    # realize with lambda outside Eig
    run_cli("realize", str(CORPUS / "two_cusp.sd"), "--lambda", "1/5", expect=2)
    bad = tmp_path / "broken.sd"
    bad.write_text("splice-diagram x\nmystery record\n")
    run_cli("validate", str(bad), expect=1)


def test_cli_deterministic_output():
    a = run_cli("zeta", str(CORPUS / "two_cusp.sd"), "--json")
    b = run_cli("zeta", str(CORPUS / "two_cusp.sd"), "--json")
    assert a == b


def test_cli_selfcheck_small():
    out = run_cli("selfcheck", "--samples", "6")
    assert "FAIL" not in out


def test_cli_plumbing_inputs_full_surface():
    # unimodular plumbing files convert on the fly for diagram-level commands
    pg = str(CORPUS / "two_cusp.pg")
    payload = json.loads(run_cli("goal1", pg, "--json"))
    assert payload["holds"] is True
    payload = json.loads(run_cli("allowed", pg, "--json"))
    assert payload["allowed"] is False
    payload = json.loads(run_cli("semigroup", pg, "--json"))
    assert payload["holds"] is False
    payload = json.loads(run_cli("alexander", pg, "--json"))
    assert payload["alexander"]["polynomial"] == ["1", "-2", "3", "-2", "1"]
    # non-unimodular plumbing: alexander falls back to the graph-level Delta1
    payload = json.loads(run_cli("alexander", str(CORPUS / "rodrigues.pg"), "--json"))
    assert "delta1" in payload and "alexander" not in payload
    out = json.loads(
        run_cli("eig", str(CORPUS / "rodrigues.pg"), "--lambda", "1/3", "--json")
    )
    assert out["in_eig"] is False


def test_cli_splice_non_special_edge_exit2():
    run_cli("splice", str(CORPUS / "two_cusp.sd"), "--edge", "v1:bL", expect=2)
