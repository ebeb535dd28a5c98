"""
Tests for configuration, logging, models and the small shared utilities.
"""

import json
import logging
from math import comb

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from drinfeld.core.config import Config
from drinfeld.core.exceptions import DrinfeldError, InsufficientPrecisionError, LevelError, UnknownActionError
from drinfeld.core.logger import Logger
from drinfeld.core.models import CheckResult, FieldConfig, RunConfig, SuiteReport, Verdict
from drinfeld.core.utils import base_digits, binomial_mod_p, make_rng, stopwatch


class TestConfig:

    def test_defaults(self, tmp_path):
        config = Config(str(tmp_path / "missing.json"))
        assert config.get("field.p") == 3
        assert config.get("precision.default") == 60
        assert config.get("verify.eigen_prec") == 120
        assert config.get("no.such.key", "fallback") == "fallback"

    def test_yaml_file_merges_over_defaults(self, tmp_path):
        path = tmp_path / "drinfeld.yaml"
        path.write_text("field:\n  p: 5\nverify:\n  kmax: 30\n")
        config = Config(str(path))
        assert config.get("field.p") == 5
        assert config.get("field.r") == 1
        assert config.get("verify.kmax") == 30
        assert config.get("verify.seed") == 20240917

    def test_json_file(self, tmp_path):
        path = tmp_path / "drinfeld.json"
        path.write_text(json.dumps({"precision": {"default": 24}}))
        assert Config(str(path)).get("precision.default") == 24

    def test_environment_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("DRINFELD_DEFAULT_PREC", "12")
        monkeypatch.setenv("DRINFELD_DEGREE_CEILING", "500")
        config = Config(str(tmp_path / "missing.json"))
        assert config.get("precision.default") == 12
        assert config.get("algebra.degree_ceiling") == 500

    def test_set(self, tmp_path):
        config = Config(str(tmp_path / "missing.json"))
        config.set("verify.extra.depth", 3)
        assert config.get("verify.extra.depth") == 3


class TestLogger:

    def test_writes_to_stderr(self, capsys, monkeypatch):
        monkeypatch.setenv("DRINFELD_LOG_LEVEL", "INFO")
        log = Logger("test_core")
        log.info("hello", q=3)
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "hello" in captured.err
        assert '"q": 3' in captured.err

    def test_default_level(self, monkeypatch):
        monkeypatch.delenv("DRINFELD_LOG_LEVEL", raising=False)
        log = Logger("test_core_default", config=Config("missing.json"))
        assert log.level == logging.WARNING


class TestModels:

    def test_field_config_rejects_even_prime(self):
        with pytest.raises(ValidationError):
            FieldConfig(p=2)
        with pytest.raises(ValidationError):
            FieldConfig(p=9)
        assert FieldConfig(p=3, r=2).q == 9

    def test_run_config_rejects_zero_precision(self):
        with pytest.raises(ValidationError):
            RunConfig(prec=0)

    def test_suite_report_orders_checks(self):
        checks = [
            CheckResult(name="b", paper_label="Prop.", statement="s", verdict=Verdict.PASS),
            CheckResult(name="a", paper_label="Prop.", statement="s", verdict=Verdict.FAIL, witness="u^3"),
        ]
        report = SuiteReport(config={}, suite="x", checks=checks)
        assert [c.name for c in report.checks] == ["a", "b"]
        assert not report.passed
        data = json.loads(report.model_dump_json())
        assert data["checks"][0]["verdict"] == "fail"
        assert data["checks"][0]["paper_label"] == "Prop."
        assert data["elapsed_ms"] is None


class TestExceptions:

    def test_hierarchy(self):
        assert issubclass(LevelError, DrinfeldError)
        assert issubclass(UnknownActionError, KeyError)

    def test_precision_error_carries_sizes(self):
        err = InsufficientPrecisionError("short", required=30, available=10)
        assert (err.required, err.available) == (30, 10)


class TestUtils:

    def test_base_digits(self):
        assert base_digits(0, 3) == [0]
        assert base_digits(10, 3) == [1, 0, 1]

    @given(st.integers(min_value=0, max_value=200), st.integers(min_value=-2, max_value=200),
           st.sampled_from([3, 5, 7]))
    def test_lucas_matches_direct_binomial(self, n, k, p):
        expected = comb(n, k) % p if 0 <= k <= n else 0
        assert binomial_mod_p(n, k, p) == expected

    def test_seeded_rng(self):
        assert make_rng(7).integers(0, 1000, 5).tolist() == make_rng(7).integers(0, 1000, 5).tolist()

    def test_stopwatch(self):
        with stopwatch() as timer:
            pass
        assert timer["elapsed_ms"] >= 0
