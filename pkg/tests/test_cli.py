import json
from fractions import Fraction
from pathlib import Path

import pytest

from gridask.cli import run
from gridask.modrep import rep_from_json

ROOT = Path(__file__).resolve().parent.parent
GRIDS = ROOT / "grids"


def grid(name: str) -> str:
    return str(GRIDS / f"{name}.grid")


def run_out(argv, capsys):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


# ---------------------------------------------------------------------------
# check-admissible
# ---------------------------------------------------------------------------

def test_check_admissible_pass(capsys):
    code, out = run_out(["check-admissible", grid("sample_a"),
                         "--family", "rho", "--level", "0", "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["admissible"] is True
    assert len(report["certificates"]) == 7  # non-empty subsets of 3 rows


def test_check_admissible_expected_failure(capsys):
    code, out = run_out(["check-admissible", grid("sample_c"),
                         "--family", "rho", "--expect-inadmissible", "--json"],
                        capsys)
    assert code == 0
    assert json.loads(out)["admissible"] is False


def test_check_admissible_unexpected_failure(capsys):
    code, _ = run_out(["check-admissible", grid("sample_c")], capsys)
    assert code == 1


def test_check_admissible_family_from_file(capsys):
    # rainbow files carry "family: gamma" headers
    code, out = run_out(["check-admissible", grid("rainbow_4_7"),
                         "--level", "1", "--json"], capsys)
    assert code == 0
    assert json.loads(out)["family"] == "gamma"
    code, _ = run_out(["check-admissible", grid("rainbow_6_7"), "--level", "1"],
                      capsys)
    assert code == 1


# ---------------------------------------------------------------------------
# ask / rank-dist / dump-rep
# ---------------------------------------------------------------------------

def test_ask_prints_exact_rational(capsys):
    code, out = run_out(["ask", "--rep", "classic:alt:3", "--prime", "3"], capsys)
    assert code == 0
    assert out.strip() == "35/9"


def test_ask_json_value(capsys):
    code, out = run_out(["ask", "--rep", "classic:mat:2,2", "--prime", "3",
                         "--json"], capsys)
    assert code == 0
    val = json.loads(out)["value"]
    assert Fraction(int(val["num"]), int(val["den"])) == Fraction(17, 9)


def test_ask_over_quotient_ring(capsys):
    code, out = run_out(["ask", "--rep", "classic:mat:1,1", "--prime", "3",
                         "--n", "2", "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["ring"] == "Z/3^2"


def test_rank_dist_counts(capsys):
    code, out = run_out(["rank-dist", "--rep", "classic:alt:3",
                         "--prime", "3", "--json"], capsys)
    assert code == 0
    counts = json.loads(out)["counts"]
    assert counts["0"] == 1
    assert sum(counts.values()) == 27


def test_dump_rep_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "rep.json"
    code, _ = run_out(["dump-rep", "--rep", "family:sigma:1-2:1-2",
                       "-o", str(out_file)], capsys)
    assert code == 0
    rep = rep_from_json(json.loads(out_file.read_text()))
    assert rep.rank == 3
    # the dumped file round-trips through the file: spec
    code, out = run_out(["ask", "--rep", f"file:{out_file}", "--prime", "3"],
                        capsys)
    assert code == 0


# ---------------------------------------------------------------------------
# zeta-verify
# ---------------------------------------------------------------------------

def test_zeta_verify_admissible_board_passes(capsys):
    code, out = run_out(["zeta-verify", "--module", "board",
                         "--grid", grid("sample_a"),
                         "--against", "classical_mat", "--prime", "5", "--json"],
                        capsys)
    assert code == 0
    assert json.loads(out)["checks"][0]["passed"] is True


def test_zeta_verify_inadmissible_board_fails(capsys):
    code, out = run_out(["zeta-verify", "--module", "board",
                         "--grid", grid("sample_c"),
                         "--against", "classical_mat", "--prime", "5", "--json"],
                        capsys)
    assert code == 1
    checks = json.loads(out)["checks"][0]
    assert checks["coefficients"][1]["match"] is False


def test_zeta_verify_multiple_primes(capsys):
    code, out = run_out(["zeta-verify", "--rep", "classic:alt:2",
                         "--against", "classical_alt", "--params", "d=2",
                         "--prime", "3", "--prime", "5", "--json"], capsys)
    assert code == 0
    assert len(json.loads(out)["checks"]) == 2


def test_zeta_verify_soft_fail_small_prime(capsys):
    # the root-count family formula excludes small primes: mismatch at p=2
    # is a caveat (exit 2), not a hard failure
    code, out = run_out(["zeta-verify", "--module", "board",
                         "--grid", grid("sample_c"),
                         "--against", "nfamily", "--params", "N=2",
                         "--prime", "2", "--json"], capsys)
    assert code == 2
    assert "soft_fail" in json.loads(out)["checks"][0]


# ---------------------------------------------------------------------------
# constant-rank / orbital-check / cc
# ---------------------------------------------------------------------------

def test_constant_rank_gamma(capsys):
    code, out = run_out(["constant-rank", "--family", "gamma", "--I", "1-3",
                         "--J", "1-3", "--rank", "1", "--prime", "5", "--json"],
                        capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_constant_rank_wrong_rank_fails(capsys):
    code, out = run_out(["constant-rank", "--family", "rho", "--I", "1-2",
                         "--J", "1-2", "--rank", "1", "--prime", "3", "--json"],
                        capsys)
    assert code == 1


def test_orbital_check_alpha(capsys):
    code, out = run_out(["orbital-check", "--big", "alpha:3",
                         "--sub", "alphahat:3", "--prime", "3", "--json"],
                        capsys)
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_cc_free_nilpotent(capsys):
    code, out = run_out(["cc", "--free-nilpotent", "3,2", "--prime", "5",
                         "--json"], capsys)
    assert code == 0
    assert json.loads(out)["classes"] == 149


def test_cc_baer(capsys):
    code, out = run_out(["cc", "--baer", "classic:alt:3", "--prime", "3",
                         "--json"], capsys)
    assert code == 0
    assert json.loads(out)["classes"] == 105


# ---------------------------------------------------------------------------
# Exit codes, determinism, batch.
# ---------------------------------------------------------------------------

def test_usage_errors_exit_three(capsys):
    assert run(["ask", "--rep", "classic:alt:3"]) == 3  # missing --prime
    assert run(["no-such-verb"]) == 3
    assert run(["cc", "--prime", "5"]) == 3
    assert run(["zeta-verify", "--against", "classical_mat", "--prime", "3"]) == 3
    assert run(["check-admissible", "/nonexistent.grid"]) == 3
    capsys.readouterr()


def test_budget_exit_four(capsys):
    assert run(["ask", "--rep", "classic:mat:3,3", "--prime", "5",
                "--method", "direct", "--budget", "100"]) == 4
    capsys.readouterr()


def test_reports_have_no_floats_and_are_deterministic(capsys):
    argv = ["zeta-verify", "--rep", "classic:sym:2", "--against",
            "classical_sym", "--params", "d=2", "--prime", "3", "--json"]
    _, out1 = run_out(argv, capsys)
    _, out2 = run_out(argv, capsys)
    assert out1 == out2
    report = json.loads(out1)

    def no_floats(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                no_floats(v)
        elif isinstance(x, list):
            for v in x:
                no_floats(v)

    no_floats(report)
    # canonical serialization round-trips byte-identically
    assert json.dumps(report, sort_keys=True, separators=(",", ":")) == out1.strip()


def test_batch_empty_manifest(tmp_path, capsys):
    manifest = tmp_path / "empty.txt"
    manifest.write_text("# nothing to do\n\n")
    code, out = run_out(["batch", str(manifest), "--json"], capsys)
    assert code == 0
    assert json.loads(out)["counts"] == {"pass": 0, "soft": 0, "fail": 0}


def test_batch_shipped_manifest_passes(capsys, monkeypatch):
    monkeypatch.chdir(ROOT)  # manifest paths are relative to the repo root
    code, out = run_out(["batch", "manifests/acceptance.txt", "--json"], capsys)
    assert code == 0
    report = json.loads(out.strip().splitlines()[-1])
    assert report["counts"]["fail"] == 0 and report["counts"]["soft"] == 0
    assert report["counts"]["pass"] > 0


def test_batch_keeps_going_after_failure(tmp_path, capsys):
    manifest = tmp_path / "mixed.txt"
    manifest.write_text(
        f"check-admissible {grid('sample_a')} --family rho\n"
        f"check-admissible {grid('sample_c')} --family rho\n"
        "ask --rep classic:alt:2 --prime 3\n")
    code, out = run_out(["batch", str(manifest), "--json"], capsys)
    assert code == 1
    # child commands print their own reports first; the aggregate is last
    report = json.loads(out.strip().splitlines()[-1])
    assert report["counts"] == {"pass": 2, "soft": 0, "fail": 1}
    assert len(report["results"]) == 3
