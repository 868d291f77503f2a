"""CLI contract tests: exit codes, golden outputs, canonical JSON
round-trips, and the verify suites."""

import json
import subprocess
import sys

import pytest

from branchzeta.cli import _merge_negative_values, canonical_json, main


def run(capsys, *args):
    rc = main(list(args))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestAnalyze:
    def test_json_golden_4_9(self, capsys):
        rc, out, _ = run(capsys, "analyze", "4,9", "--format", "json")
        assert rc == 0
        d = json.loads(out)
        assert d["mu"] == 24
        assert d["lct"] == "13/36"
        assert sum(e["multiplicity"] for e in d["pi"]) == 24
        assert len(d["candidates"]) == 36
        assert d["verdict"] == "proved-distinct"
        assert d["numerics"]["betabar"] == [4, 9]
        assert set(d) == {
            "candidates", "divisors", "eigenvalues", "input", "lct", "mu",
            "numerics", "pi", "pi_levels", "resonances", "strict_transform",
            "toric_steps", "verdict", "yano",
        }

    def test_json_round_trip_bytes(self, capsys):
        rc, out, _ = run(capsys, "analyze", "6,9,22", "--format", "json")
        assert rc == 0
        assert canonical_json(json.loads(out)) + "\n" == out

    def test_semigroup_alias(self, capsys):
        _, a, _ = run(capsys, "analyze", "semigroup:4,6,13", "--format", "json")
        _, b, _ = run(capsys, "analyze", "4,6,7", "--format", "json")
        da, db = json.loads(a), json.loads(b)
        da.pop("input"), db.pop("input")
        assert da == db

    def test_validation_failure_exit_2(self, capsys):
        rc, out, _ = run(capsys, "analyze", "4,8", "--format", "json")
        assert rc == 2
        d = json.loads(out)
        assert d["error"] == "validation"
        assert "divides" in d["conditions"][0]["detail"]

    def test_semigroup_validation_failure_lists_conditions(self, capsys):
        rc, out, _ = run(capsys, "analyze", "semigroup:4,6,8", "--format", "json")
        assert rc == 2
        d = json.loads(out)
        assert any(not c["passed"] for c in d["conditions"])

    def test_syntax_failure_exit_1(self, capsys):
        rc, _, err = run(capsys, "analyze", "not-an-input")
        assert rc == 1
        assert "error" in err

    def test_tsv_candidates(self, capsys):
        rc, out, _ = run(capsys, "analyze", "4,9", "--format", "tsv")
        lines = out.splitlines()
        assert lines[0] == "i\tnu\tsigma\teps1\teps2\teps3\tstatus"
        assert len(lines) == 1 + 36
        first = lines[1].split("\t")
        assert first[:3] == ["1", "0", "-13/36"]
        assert first[6] == "PoleCandidate"

    def test_text_mentions_lct(self, capsys):
        rc, out, _ = run(capsys, "analyze", "4,9")
        assert rc == 0
        assert "lct 13/36" in out
        assert "mu 24" in out

    def test_nu_max_extends_period(self, capsys):
        _, out, _ = run(capsys, "analyze", "4,9", "--nu-max", "40", "--format", "tsv")
        assert len(out.splitlines()) == 1 + 41


class TestResidue:
    def test_reference_value(self, capsys):
        rc, out, _ = run(capsys, "residue", "--alpha", "-3/5", "--n", "0",
                         "--beta", "-3/5", "--m", "0", "--lambda", "1",
                         "--format", "json")
        assert rc == 0
        d = json.loads(out)
        assert d["order"] == 0
        assert abs(d["value"]["im"] + 54.96898569) <= 1e-6
        assert abs(d["value"]["re"]) <= 1e-9

    def test_simple_zero(self, capsys):
        rc, out, _ = run(capsys, "residue", "--alpha", "0", "--n", "0",
                         "--beta", "-1/2", "--m", "0", "--format", "json")
        d = json.loads(out)
        assert rc == 0 and d["order"] == -1
        assert d["value"] == {"im": 0.0, "re": 0.0}

    def test_integer_arguments_pole(self, capsys):
        rc, out, _ = run(capsys, "residue", "--alpha", "-1", "--n", "0",
                         "--beta", "-1", "--m", "0", "--format", "json")
        d = json.loads(out)
        assert rc == 0 and d["order"] == 1 and d["value"] is None
        orders = {r["factor"]: r["order"] for r in d["reason"]}
        assert orders == {"alpha-pair": 1, "beta-pair": 1, "gamma-pair": -1}

    def test_text_and_tsv_shapes(self, capsys):
        rc, out, _ = run(capsys, "residue", "--alpha", "-3/5", "--n", "0",
                         "--beta", "-3/5", "--m", "0")
        assert rc == 0
        assert out.splitlines()[0] == "order 0"
        rc, out, _ = run(capsys, "residue", "--alpha", "-3/5", "--n", "0",
                         "--beta", "-3/5", "--m", "0", "--format", "tsv")
        lines = out.splitlines()
        assert lines[0] == "order\tvalue\treason"
        assert lines[1].startswith("0\t")

    def test_zero_lambda_exit_2(self, capsys):
        rc, out, err = run(capsys, "residue", "--alpha", "-1", "--n", "0",
                           "--beta", "-1", "--m", "0", "--lambda", "0")
        assert rc == 2
        assert json.loads(out)["error"] == "domain"

    def test_bad_rational_exit_1(self, capsys):
        rc, _, err = run(capsys, "residue", "--alpha", "x", "--n", "0",
                         "--beta", "-1", "--m", "0")
        assert rc == 1


class TestVerify:
    def test_rnm_suite_passes(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "rnm", "--tol", "1e-4")
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "case\texpected\tgot\trelerr"
        assert len(lines) == 1 + 6 + 3  # grid cases plus symmetry rows

    def test_combinatorics_suite_exact(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "combinatorics")
        assert rc == 0
        rows = [l.split("\t") for l in out.splitlines()[1:]]
        assert all(r[3] == "0.000000e+00" for r in rows)
        assert len(rows) == 8 * 4

    def test_vanishing_suite(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "vanishing")
        assert rc == 0
        assert len(out.splitlines()) == 1 + 4

    def test_all_suites_json(self, capsys):
        rc, out, _ = run(capsys, "verify", "--format", "json")
        assert rc == 0
        d = json.loads(out)
        assert d["passed"] is True
        assert len(d["rows"]) == 9 + 32 + 4
        assert canonical_json(json.loads(out)) + "\n" == out

    def test_unattainable_tolerance_exit_3(self, capsys):
        rc, out, err = run(capsys, "verify", "--suite", "rnm", "--tol", "1e-9")
        assert rc == 3
        assert "FAILED" in err

    def test_text_format(self, capsys):
        rc, out, _ = run(capsys, "verify", "--suite", "vanishing", "--format", "text")
        assert rc == 0
        assert all(l.startswith("ok") for l in out.splitlines())


class TestGenerate:
    def test_plane_goldens(self, capsys):
        for inp, head in (("4,9", "y^4 - x^9"), ("2,3", "y^2 - x^3"),
                          ("4,6,7", "y^4 - 2*x^3*y^2 + x^6 - x^5*y")):
            rc, out, _ = run(capsys, "generate", inp)
            assert rc == 0
            assert out.splitlines()[0] == head

    def test_monomial_curve_lines(self, capsys):
        _, out, _ = run(capsys, "generate", "4,6,7")
        lines = out.splitlines()
        assert lines[1] == "h1 = u1^2 - u0^3"
        assert lines[2] == "h2 = u2^2 - u0^5*u1"

    def test_deform_symbolic(self, capsys):
        rc, out, _ = run(capsys, "generate", "4,9", "--deform", "--cutoff", "38")
        assert rc == 0
        assert "t^(1)_(7,1)" in out and "t^(1)_(5,2)" in out
        assert "coeff=symbolic" in out
        assert "fiber" not in out

    def test_deform_seeded_deterministic(self, capsys):
        args = ("generate", "4,6,7", "--deform", "--cutoff", "30", "--seed", "7")
        rc1, out1, _ = run(capsys, *args)
        rc2, out2, _ = run(capsys, *args)
        assert rc1 == rc2 == 0
        assert out1 == out2
        assert "fiber = " in out1

    def test_deform_json_round_trip(self, capsys):
        rc, out, _ = run(capsys, "generate", "4,6,7", "--deform", "--seed", "3",
                         "--format", "json")
        assert rc == 0
        d = json.loads(out)
        assert canonical_json(d) + "\n" == out
        assert d["plane"]["text"] == "y^4 - 2*x^3*y^2 + x^6 - x^5*y"
        assert all(t["coefficient"] is not None for t in d["deformation"]["terms"])

    def test_deform_tsv(self, capsys):
        rc, out, _ = run(capsys, "generate", "4,9", "--deform", "--cutoff", "38",
                         "--format", "tsv")
        lines = out.splitlines()
        assert lines[0] == "object\texponents\tcoefficient"
        assert "plane\t0,4\t1" in lines
        assert "plane\t9,0\t-1" in lines
        assert "t^(1)_(5,2)\t5,2\tt^(1)_(5,2)" in lines

    def test_invalid_cutoff_exit_2(self, capsys):
        rc, out, err = run(capsys, "generate", "4,9", "--deform", "--cutoff", "10")
        assert rc == 2
        assert json.loads(out)["error"] == "domain"

    def test_validation_failure(self, capsys):
        rc, _, _ = run(capsys, "generate", "4,8")
        assert rc == 2


class TestPlumbing:
    def test_merge_negative_values(self):
        assert _merge_negative_values(["--alpha", "-3/5", "--n", "0"]) == [
            "--alpha=-3/5", "--n", "0",
        ]
        assert _merge_negative_values(["--alpha", "--n"]) == ["--alpha", "--n"]
        assert _merge_negative_values(["analyze", "4,9"]) == ["analyze", "4,9"]

    def test_missing_subcommand_exit_1(self, capsys):
        rc, _, err = run(capsys)
        assert rc == 1

    def test_module_invocation(self):
        r = subprocess.run(
            [sys.executable, "-m", "branchzeta.cli", "analyze", "4,9", "--format", "json"],
            capture_output=True, text=True,
        )
        assert r.returncode == 0
        assert json.loads(r.stdout)["mu"] == 24
