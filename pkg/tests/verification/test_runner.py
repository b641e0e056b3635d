"""
Tests for suite execution and the verification report.
"""

import json
import math
from pathlib import Path

import pytest

from rmtsums.verification import (
    CheckRegistry,
    Measurement,
    SuiteResult,
    checks,
    generate_verification_report,
    run_suite,
    save_report,
)


def _boom() -> Measurement:
    raise RuntimeError("kaboom")


def _loose() -> Measurement:
    return Measurement(value=1.5, expected=1.0, error=0.5, detail="x=1")


@pytest.fixture
def synthetic_registry(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> CheckRegistry:
    """Registry with one passing, one failing and one raising check."""
    monkeypatch.setattr(checks, "_test_boom", _boom, raising=False)
    monkeypatch.setattr(checks, "_test_loose", _loose, raising=False)
    catalog = [
        {
            "name": "passes",
            "suite": "golden",
            "description": "R(1,1)",
            "function_name": "golden_r_1_1",
            "tolerance": 1e-10,
        },
        {
            "name": "too_loose",
            "suite": "golden",
            "description": "gap 0.5",
            "function_name": "_test_loose",
            "tolerance": 0.1,
        },
        {
            "name": "raises",
            "suite": "quarter",
            "description": "raises",
            "function_name": "_test_boom",
            "tolerance": 1.0,
        },
    ]
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(catalog), encoding="utf-8")
    return CheckRegistry(path)


@pytest.fixture
def synthetic_result(synthetic_registry: CheckRegistry) -> SuiteResult:
    """Outcome of running the synthetic registry."""
    return run_suite(["golden", "quarter"], registry=synthetic_registry)


class TestRunSuite:
    """Pass/fail accounting of the runner."""

    def test_catalog_order(self, synthetic_result: SuiteResult) -> None:
        """Results follow suite then catalog order."""
        assert [r.name for r in synthetic_result.results] == ["passes", "too_loose", "raises"]

    def test_outcomes(self, synthetic_result: SuiteResult) -> None:
        """Failures count toward n_failed and flip the verdict."""
        passed = {r.name: r.passed for r in synthetic_result.results}
        assert passed == {"passes": True, "too_loose": False, "raises": False}
        assert synthetic_result.n_failed == 2
        assert synthetic_result.passed is False

    def test_margin(self, synthetic_result: SuiteResult) -> None:
        """Margin is tolerance minus error."""
        loose = synthetic_result.results[1]
        assert loose.margin == pytest.approx(-0.4)
        assert loose.detail == "x=1"

    def test_exception_becomes_failure(self, synthetic_result: SuiteResult) -> None:
        """Exceptions are caught and reported in detail."""
        raised = synthetic_result.results[2]
        assert math.isnan(raised.value)
        assert raised.margin == -math.inf
        assert "RuntimeError: kaboom" in raised.detail

    def test_unknown_suite(self, synthetic_registry: CheckRegistry) -> None:
        """Unknown suite names raise before any check runs."""
        with pytest.raises(ValueError, match="Unknown suite"):
            run_suite(["golden", "platinum"], registry=synthetic_registry)

    def test_to_dict_shape(self, synthetic_result: SuiteResult) -> None:
        """The result dict carries suites and one entry per check."""
        payload = synthetic_result.to_dict()
        assert payload["suites"] == ["golden", "quarter"]
        assert len(payload["results"]) == 3

    @pytest.mark.parametrize("suite", ["golden", "quarter", "vanishing", "coefficients"])
    def test_fast_packaged_suites_pass(self, suite: str) -> None:
        """Closed-form suites pass against the packaged catalog."""
        result = run_suite([suite])
        failures = [(r.name, r.detail) for r in result.results if not r.passed]
        assert result.passed, failures
        assert all(r.margin >= 0.0 for r in result.results)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "suite", ["halfint", "s0", "painleve", "boundary", "identities", "density"]
    )
    def test_deterministic_packaged_suites_pass(self, suite: str) -> None:
        """Quadrature and residual suites pass against the packaged catalog."""
        result = run_suite([suite])
        failures = [(r.name, r.detail) for r in result.results if not r.passed]
        assert result.passed, failures

    @pytest.mark.slow
    def test_montecarlo_suite_passes(self) -> None:
        """Sampling suite passes at its fixed seed."""
        result = run_suite(["montecarlo"])
        failures = [(r.name, r.detail) for r in result.results if not r.passed]
        assert result.passed, failures


class TestVerificationReport:
    """Markdown report generation and persistence."""

    def test_sections(self, synthetic_result: SuiteResult) -> None:
        """Header, per-suite tables and failures are present."""
        report = generate_verification_report(synthetic_result)
        assert report.startswith("# Verification Report")
        assert "## Verdict: ❌ FAILED (2 checks)" in report
        assert "## Suite `golden`" in report
        assert "## Suite `quarter`" in report
        assert "## Failures" in report
        assert "`raises`: RuntimeError: kaboom" in report

    def test_missing_values_rendered_as_dash(self, synthetic_result: SuiteResult) -> None:
        """NaN values appear as '-' in the table."""
        report = generate_verification_report(synthetic_result)
        row = next(line for line in report.splitlines() if line.startswith("| `raises`"))
        assert "| - | - |" in row

    def test_passing_report_has_no_failures(self) -> None:
        """A clean run has no failure section."""
        report = generate_verification_report(run_suite(["golden"]))
        assert "## Verdict: ✅ PASSED" in report
        assert "## Failures" not in report

    def test_save_report(self, synthetic_result: SuiteResult, tmp_path: Path) -> None:
        """The report is written without a timestamp in its name."""
        report = generate_verification_report(synthetic_result)
        path = save_report(report, tmp_path / "reports")
        assert path.name == "verification.md"
        assert path.read_text(encoding="utf-8") == report
