"""
Markdown report generation for verification runs.
"""

import logging
import math
from pathlib import Path

from .config import SuiteResult

logger = logging.getLogger(__name__)


def _fmt(value: float) -> str:
    return "-" if math.isnan(value) else f"{value:.10g}"


def generate_verification_report(result: SuiteResult) -> str:
    """
    Generate Markdown report from a verification run.

    Parameters
    ----------
    result : SuiteResult
        Outcome of :func:`~rmtsums.verification.runner.run_suite`.

    Returns
    -------
    str
        Header with the overall verdict, one table per suite with value,
        expected, margin, tolerance and runtime, then the failed checks.
    """
    verdict = "✅ PASSED" if result.passed else f"❌ FAILED ({result.n_failed} checks)"
    report = f"""# Verification Report

**Suites:** {", ".join(result.suites)}
**Package Version:** {result.metadata.get("version", "unknown")}
**Checks:** {len(result.results)}
**Total Runtime:** {result.runtime_s:.1f} s

## Verdict: {verdict}
"""

    for suite in result.suites:
        rows = [r for r in result.results if r.suite == suite]
        if not rows:
            continue
        report += f"""
## Suite `{suite}`

| Check | Status | Value | Expected | Margin | Tolerance | Runtime (s) |
|-------|--------|-------|----------|--------|-----------|-------------|
"""
        for r in rows:
            status = "✅" if r.passed else "❌"
            report += (
                f"| `{r.name}` | {status} | {_fmt(r.value)} | {_fmt(r.expected)} "
                f"| {r.margin:.3e} | {r.tolerance:.1e} | {r.runtime_s:.2f} |\n"
            )

    failed = [r for r in result.results if not r.passed]
    if failed:
        report += "\n## Failures\n\n"
        for r in failed:
            report += f"- `{r.name}`: {r.detail or 'error above tolerance'}\n"

    logger.debug("Generated verification report: %d characters", len(report))
    return report


def save_report(report: str, output_dir: Path, name: str = "verification") -> Path:
    """
    Save report to ``<output_dir>/<name>.md``.

    The filename carries no timestamp so that repeated runs overwrite and
    can be diffed.
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    output_path = output_dir / f"{name}.md"
    output_path.write_text(report, encoding="utf-8")

    logger.info("Saved verification report to %s", output_path)
    return output_path
