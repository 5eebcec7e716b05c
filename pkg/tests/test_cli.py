"""End-to-end command line coverage, including exit codes."""

import json

from conftest import CONIC, CUSP, NODAL, SEXTIC_GF5


def test_analyze_json_is_deterministic(run_cli):
    argv = ["analyze", CONIC, "--format", "json", "--seed", "7"]
    code1, out1, _ = run_cli(argv)
    code2, out2, _ = run_cli(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["invariants"]["m"] == "2"
    assert payload["invariants"]["rho"] == "0"
    assert payload["timing_ms"] is None


def test_analyze_text_mentions_the_invariants(run_cli):
    code, out, _ = run_cli(["analyze", NODAL])
    assert code == 0
    assert "n=3  d=1  m=4  i=3  rho=0" in out
    assert "transport (1, 2) -> (2, 1)" in out


def test_dual_command(run_cli):
    code, out, _ = run_cli(["dual", CONIC])
    assert code == 0
    assert "U^2 + V^2 - W^2" in out


def test_branches_command(run_cli):
    code, out, _ = run_cli(["branches", CUSP, "--at", "0,0"])
    assert code == 0
    assert "(2, 1)" in out


def test_branches_rejects_points_off_the_curve(run_cli):
    code, _, err = run_cli(["branches", CUSP, "--at", "2,1"])
    assert code == 2
    assert "curve" in err


def test_pencil_command(run_cli):
    code, out, _ = run_cli(
        ["pencil", NODAL, "--phi", "X", "--psi", "Z"])
    assert code == 0
    assert "map degree: 2" in out
    assert "jacobian order: 4" in out


def test_genus_command(run_cli):
    code, out, _ = run_cli(["genus", CONIC])
    assert code == 0
    assert "genus: 0" in out


def test_verify_corpus(run_cli, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# smooth conic\n%s\n" % CONIC)
    code, out, _ = run_cli(["verify", str(corpus)])
    assert code == 0
    assert "summary: 1 curve(s), 1 passed, 0 failed" in out


def test_verify_skips_curves_with_infinitely_many_flexes(run_cli, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(SEXTIC_GF5 + "\n")
    code, out, _ = run_cli(["verify", str(corpus), "--field", "Fp:5"])
    assert code == 0
    assert "skipped: infinitely many flexes" in out


def test_verify_empty_corpus(run_cli, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# nothing here\n")
    code, out, _ = run_cli(["verify", str(corpus)])
    assert code == 0
    assert "summary: 0 curve(s)" in out


def test_reducible_input_exits_2(run_cli):
    code, _, err = run_cli(["analyze", "X*Y"])
    assert code == 2
    assert err


def test_parse_garbage_exits_2(run_cli):
    code, _, err = run_cli(["analyze", "X^^2 + Y"])
    assert code == 2
    assert err


def test_unsupported_field_exits_3(run_cli):
    for spec in ("Fp:4", "Fp:2", "R"):
        code, _, err = run_cli(["analyze", CONIC, "--field", spec])
        assert code == 3, spec
        assert err


def test_bad_retry_budget_exits_2(run_cli):
    code, _, err = run_cli(
        ["analyze", CONIC, "--max-retries", "0"])
    assert code == 2
    assert err
