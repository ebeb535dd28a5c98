"""
Tests for the command line: subcommand output, exit codes and suite reports.
"""

import json

import pytest

from drinfeld.algebra.field import get_field
from drinfeld.cli import SUITE_LABELS, SUITES, main, parse_form, run_suite, suite_names
from drinfeld.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE
from drinfeld.core.exceptions import SuiteError
from drinfeld.core.models import RunConfig


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestSuitesListing:

    def test_all_suites_registered(self):
        assert len(SUITES) == 17
        assert set(SUITE_LABELS) == set(SUITES)
        assert all(SUITE_LABELS.values())
        assert "counterexample" in SUITES
        assert suite_names() == sorted(SUITES)

    def test_listing(self, capsys):
        code, data = run_json(capsys, ["suites"])
        assert code == EXIT_OK
        assert [row["name"] for row in data] == suite_names()

    def test_text_listing(self, capsys):
        assert main(["suites", "--format", "text"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].split("\t")[0] == suite_names()[0]


class TestUsageErrors:

    def test_unknown_suite(self, capsys):
        assert main(["verify", "no-such-suite"]) == EXIT_USAGE

    def test_not_a_prime_power(self):
        assert main(["carlitz", "--a", "T", "--q", "6"]) == EXIT_USAGE

    def test_even_characteristic(self):
        assert main(["carlitz", "--a", "T", "--q", "4"]) == EXIT_USAGE

    def test_missing_argument(self):
        assert main(["carlitz"]) == EXIT_USAGE

    def test_reducible_prime(self):
        assert main(["matrix", "--P", "T^2", "--k", "4", "--l", "1", "--q", "3"]) == EXIT_USAGE

    def test_T_at_level(self):
        assert main(["hecke", "--op", "T", "--P", "T", "--form", "E_P:T", "--q", "3", "--prec", "5"]) == EXIT_USAGE

    def test_help(self, capsys):
        assert main(["--help"]) == EXIT_OK

    def test_run_suite_unknown(self):
        with pytest.raises(SuiteError):
            run_suite("nope", RunConfig(), get_field(3))


class TestSubcommands:

    def test_expand_h(self, capsys):
        code, data = run_json(capsys, ["expand", "--form", "h", "--q", "3", "--prec", "10"])
        assert code == EXIT_OK
        assert data["form"] == "h"
        assert (data["q"], data["k"], data["l"]) == (3, 4, 1)
        assert data["coefficients"] == [[1, "2"], [5, "2"], [7, "T^3+2*T"], [9, "2"]]

    def test_expand_text_cache(self, capsys):
        assert main(["expand", "--form", "Delta", "--q", "3", "--prec", "8", "--format", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        header, body = out.split("---\n", 1)
        assert "format-version: 1" in header
        assert body.splitlines() == ["2\t2", "6\t1"]

    def test_expand_from_config(self, tmp_path, capsys):
        path = tmp_path / "drinfeld.yaml"
        path.write_text("field:\n  p: 5\n")
        code, data = run_json(capsys, ["expand", "--form", "g1", "--prec", "6", "--config", str(path)])
        assert code == EXIT_OK
        assert data["q"] == 5

    def test_carlitz(self, capsys):
        assert main(["carlitz", "--a", "T^2", "--q", "3", "--format", "text"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "T^2*X + (T^3+T)*X^3 + X^9"

    def test_goss_torsion(self, capsys):
        assert main(["goss", "--lattice", "torsion:T", "--kmax", "4", "--q", "3", "--format", "text"]) == EXIT_OK
        rows = capsys.readouterr().out.splitlines()
        assert rows == ["1\tX", "2\tX^2", "3\tX^3", "4\tX^4 + (1/T)X^2"]

    def test_goss_unknown_lattice(self):
        assert main(["goss", "--lattice", "hexagonal", "--kmax", "4", "--q", "3"]) == EXIT_USAGE

    def test_hecke_T_on_h(self, capsys):
        code, data = run_json(capsys, ["hecke", "--op", "T", "--P", "T", "--form", "h", "--q", "3", "--prec", "6"])
        assert code == EXIT_OK
        assert data["coefficients"][0] == [1, "2*T"]
        assert data["certified_prec"] == 6

    def test_matrix(self, capsys):
        code, data = run_json(capsys, ["matrix", "--P", "T", "--k", "4", "--l", "1", "--cusp", "--q", "3"])
        assert code == EXIT_OK
        assert data["matrix"] == [["T"]]
        assert data["basis"] == ["h"]
        assert all(data["verdicts"].values())

    def test_out_file(self, tmp_path):
        out = tmp_path / "rho.txt"
        assert main(["carlitz", "--a", "T", "--q", "3", "--format", "text", "--out", str(out)]) == EXIT_OK
        assert out.read_text().strip() == "T*X + X^3"

    def test_parse_form(self, factory3, h3, g1_3):
        f = parse_form(factory3, "g1^2*h", 20)
        assert f.compare(g1_3 * g1_3 * h3).equal
        assert (f.weight, f.type) == (8, 1)


class TestVerify:

    def test_goss_toy(self, capsys):
        code, data = run_json(capsys, ["verify", "goss-toy", "--q", "3"])
        assert code == EXIT_OK
        assert data["suite"] == "goss-toy"
        names = [c["name"] for c in data["checks"]]
        assert names == sorted(names)
        assert all(c["verdict"] == "pass" for c in data["checks"])
        assert data["elapsed_ms"] is None

    def test_report_config(self, capsys):
        code, data = run_json(capsys, ["verify", "goss-toy", "--q", "3", "--kmax", "6", "--seed", "5"])
        assert code == EXIT_OK
        assert data["config"]["q"] == 3
        assert data["config"]["seed"] == 5
        assert data["config"]["params"] == {"kmax": 6}
        assert all(c["paper_label"] for c in data["checks"])

    def test_timing(self, capsys):
        code, data = run_json(capsys, ["verify", "goss-toy", "--q", "3", "--kmax", "4", "--timing"])
        assert code == EXIT_OK
        assert data["elapsed_ms"] is not None

    def test_eigen_h(self, capsys):
        code, data = run_json(capsys, ["verify", "eigen-h", "--q", "3", "--P", "T,T+1", "--prec", "10"])
        assert code == EXIT_OK
        assert len(data["checks"]) == 4

    def test_failing_check_exits_one(self, capsys):
        # T^2 is not prime, so the check records a failure
        code, data = run_json(capsys, ["verify", "eigen-h", "--q", "3", "--P", "T^2", "--prec", "5"])
        assert code == EXIT_FAILED
        assert data["checks"][0]["verdict"] == "fail"
        assert data["checks"][0]["witness"].startswith("NotIrreducibleError")

    def test_exple2(self, capsys):
        code, data = run_json(capsys, ["verify", "exple2", "--q", "3", "--P", "T+1", "--prec", "10"])
        assert code == EXIT_OK
        assert all(c["verdict"] == "pass" for c in data["checks"])
        assert {c["paper_label"] for c in data["checks"]} == {SUITE_LABELS["exple2"]}

    def test_gen_expansions_q5(self, capsys):
        code, data = run_json(capsys, ["verify", "gen-expansions", "--q", "5"])
        assert code == EXIT_OK
        assert data["config"]["q"] == 5
        failed = [c["name"] for c in data["checks"] if c["verdict"] != "pass"]
        assert failed == []
        names = {c["name"] for c in data["checks"]}
        assert {"g1.printed", "h.printed", "Delta.printed", "Delta_W-T^q*Delta_T", "h^(q-1)=-Delta"} <= names

    def test_check_labels(self, capsys):
        code, data = run_json(capsys, ["verify", "eigen-EP", "--q", "3", "--P1", "T+1", "--P2", "T", "--prec", "8"])
        assert code == EXIT_OK
        labels = {c["name"]: c["paper_label"] for c in data["checks"]}
        assert labels["T_P1(E_P2).T+1.T"] == SUITE_LABELS["eigen-EP"]
        assert labels["U_P(E_P).T"] == "Prop.: U_p E_P = P E_P"

    def test_run_suite_direct(self):
        report = run_suite("goss-toy", RunConfig(params={"kmax": 8}), get_field(3))
        assert report.passed
        assert report.suite == "goss-toy"
