import csv
import io
import json
import math
import subprocess
import sys

import pytest

from bicoeff.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, reparse_json, run


def rows_of(args):
    out, code = run([*args, "--format", "json"])
    assert code in (EXIT_OK, EXIT_FAIL), out
    return json.loads(out)


class TestBounds:
    def test_r_sigma(self):
        doc = rows_of(["bounds", "--class", "r-sigma", "--lambda", "1", "--phi", "beta:0"])
        a2 = [r for r in doc["rows"] if r["quantity"] == "a2" and r["branch"] == "min"][0]
        assert a2["value"] == pytest.approx(0.816497, abs=5e-7)
        a3 = [r for r in doc["rows"] if r["quantity"] == "a3"][0]
        assert a3["value"] == "not claimed in source"

    def test_sstar_alpha_one(self):
        doc = rows_of(["bounds", "--class", "sstar-sigma", "--phi", "alpha:1"])
        a2 = [r for r in doc["rows"] if r["quantity"] == "a2" and r["branch"] == "min"][0]
        assert a2["value"] == pytest.approx(math.sqrt(2), abs=1e-11)

    def test_mixed_sstar_k(self):
        doc = rows_of(["bounds", "--class", "mixed-sstar-k", "--phi", "beta:0"])
        mins = {r["quantity"]: r["value"] for r in doc["rows"] if r["branch"] == "min"}
        assert mins == {"a2": 1.0, "a3": 1.0}

    def test_text_lists_branches(self):
        out, code = run(["bounds", "--class", "k-sigma", "--phi", "beta:0.5"])
        assert code == EXIT_OK
        assert "B1/2" in out and "min" in out

    def test_csv(self):
        out, _ = run(["bounds", "--class", "k-sigma", "--format", "csv"])
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {r["quantity"] for r in rows} == {"a2", "a3"}


class TestErrors:
    def test_bad_phi_token(self):
        out, code = run(["bounds", "--class", "r-sigma", "--phi", "beta:zz"])
        assert code == EXIT_USAGE and "'zz'" in out

    def test_missing_class(self):
        assert run(["bounds"])[1] == EXIT_USAGE

    def test_unknown_class(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["bounds", "--class", "nope"])
        assert exc.value.code == EXIT_USAGE

    def test_validation(self):
        assert run(["bounds", "--class", "r-sigma", "--phi", "custom:-1,2"])[1] == EXIT_VALIDATION
        assert run(["bounds", "--class", "r-sigma", "--lambda", "-1"])[1] == EXIT_VALIDATION
        assert run(["verify", "--class", "k-sigma", "--samples", "0"])[1] == EXIT_VALIDATION

    def test_revert_needs_coeffs(self):
        assert run(["revert"])[1] == EXIT_USAGE
        assert run(["revert", "--coeffs", "0.1,abc"])[1] == EXIT_USAGE
        assert run(["revert", "--coeffs", "1,2,3", "--order", "2"])[1] == EXIT_USAGE


class TestVerify:
    def test_mixed_k_r(self):
        out, code = run(["verify", "--class", "mixed-k-r", "--phi", "beta:0",
                         "--samples", "100000", "--seed", "7", "--format", "json"])
        doc = json.loads(out)
        assert code == EXIT_OK
        assert all(r["status"] == "PASS" for r in doc["rows"])
        eq7 = [r for r in doc["rows"] if r["functional"] == "eq7"][0]
        assert eq7["box_max"] == pytest.approx(0.75, abs=1e-11)

    def test_r_sigma_custom(self):
        doc = rows_of(["verify", "--class", "r-sigma", "--lambda", "0", "--phi", "custom:1,3"])
        joint = [r for r in doc["rows"] if r["functional"] == "joint:a2"][0]
        assert joint["bound"] == pytest.approx(math.sqrt(3), abs=1e-11)
        assert all(r["status"] in ("PASS", "n/a") for r in doc["rows"])

    def test_single_sample(self):
        out, code = run(["verify", "--class", "k-sigma", "--samples", "1"])
        assert code == EXIT_OK and "PASS" in out

    def test_failure_exit_code(self):
        # with B2 > B1 joint samples beat the third bi-starlike a2 branch
        out, code = run(["verify", "--class", "sstar-sigma", "--phi", "custom:1.2,2",
                         "--samples", "50000", "--format", "json"])
        doc = json.loads(out)
        joint = [r for r in doc["rows"] if r["functional"] == "joint:a2"][0]
        assert joint["status"] == "FAIL" and code == EXIT_FAIL

    def test_sstar_has_keogh_merkes_row(self):
        doc = rows_of(["verify", "--class", "sstar-sigma", "--phi", "beta:0.25",
                       "--samples", "2000"])
        km = [r for r in doc["rows"] if r["functional"].startswith("keogh_merkes")][0]
        assert km["judged_on"] == "tight" and km["status"] == "PASS"
        assert len(doc["discrepancies"]) == 2


class TestTableAndRevert:
    def test_table_rows(self):
        doc = rows_of(["table"])
        by = {r["label"]: r for r in doc["rows"]}
        assert by["Th2.13 β=0 a3"]["exact"] == pytest.approx(1.555556, abs=5e-7)
        assert by["Th2.13 β=0 a3"]["printed"] == "1.56"
        assert by["Th2.11 β=0 a2"]["exact"] == pytest.approx(0.866025, abs=5e-7)
        assert by["Th2.11 β=0 a2"]["printed"] == "0.867"
        assert by["Th2.2 λ=1 β=0"]["exact"] == pytest.approx(0.816497, abs=5e-7)

    def test_revert_low_order(self):
        doc = rows_of(["revert", "--coeffs", "0.5,0.1", "--order", "3"])
        re = [r["re"] for r in doc["rows"]]
        assert re == pytest.approx([0, 1, -0.5, 0.4], abs=1e-12)

    def test_revert_identity(self):
        doc = rows_of(["revert", "--coeffs", "0", "--order", "2"])
        assert [(r["re"], r["im"]) for r in doc["rows"]] == [(0, 0), (1, 0), (0, 0)]

    def test_revert_degree_four(self):
        doc = rows_of(["revert", "--coeffs", "0.3,0.2,0.1", "--order", "4"])
        assert doc["rows"][4]["re"] == pytest.approx(-(5 * 0.027 - 5 * 0.06 + 0.1), abs=1e-12)

    def test_revert_complex(self):
        doc = rows_of(["revert", "--coeffs", "0.5+0.5j", "--order", "2"])
        assert (doc["rows"][2]["re"], doc["rows"][2]["im"]) == (-0.5, -0.5)


class TestOutputContract:
    @pytest.mark.parametrize("args", [
        ["table"],
        ["bounds", "--class", "sstar-sigma", "--phi", "custom:1,-0.5"],
        ["verify", "--class", "sstar-sigma", "--phi", "alpha:0.5", "--samples", "500"],
        ["revert", "--coeffs", "0.3,0.2,0.1,0.05"],
    ])
    def test_json_round_trip(self, args):
        out, _ = run([*args, "--format", "json"])
        assert reparse_json(out) == out

    def test_repeatable(self):
        args = ["verify", "--class", "mixed-sstar-r", "--samples", "3000", "--seed", "5",
                "--format", "csv"]
        assert run(args) == run(args)

    def test_seed_from_environment(self, monkeypatch):
        monkeypatch.setenv("BICOEFF_SEED", "5")
        env_out = run(["verify", "--class", "k-sigma", "--samples", "300"])
        monkeypatch.delenv("BICOEFF_SEED")
        flag_out = run(["verify", "--class", "k-sigma", "--samples", "300", "--seed", "5"])
        assert env_out == flag_out

    def test_twelve_digits(self):
        doc = rows_of(["bounds", "--class", "r-sigma", "--phi", "beta:0"])
        assert doc["rows"][0]["value"] == 0.816496580928

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "bicoeff", "bounds", "--class", "k-sigma"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and "a3" in proc.stdout
        proc = subprocess.run([sys.executable, "-m", "bicoeff", "bounds"],
                              capture_output=True, text=True)
        assert proc.returncode == EXIT_USAGE
