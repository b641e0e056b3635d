"""
Execution of acceptance suites through the check registry.
"""

import logging
import math
import time
from typing import Sequence

from rmtsums import __version__
from rmtsums.config import CHECK_CATALOG_PATH

from .config import SUITES, CheckMetadata, CheckResult, SuiteResult
from .registry import CheckRegistry

logger = logging.getLogger(__name__)


def run_check(registry: CheckRegistry, metadata: CheckMetadata) -> CheckResult:
    """
    Run one check and compare its error with the catalog tolerance.

    Exceptions raised by the measuring function fail the check; the message
    goes into ``detail``.

    Parameters
    ----------
    registry : CheckRegistry
        Registry resolving the function.
    metadata : CheckMetadata
        Catalog entry.

    Returns
    -------
    CheckResult
        Pass/fail with margin and wall time.
    """
    func = registry.get_function(metadata.name)
    start = time.perf_counter()
    try:
        measurement = func()
    except Exception as e:
        runtime = time.perf_counter() - start
        logger.error("Check '%s' raised %s: %s", metadata.name, type(e).__name__, e)
        return CheckResult(
            name=metadata.name,
            suite=metadata.suite,
            passed=False,
            value=math.nan,
            expected=math.nan,
            margin=-math.inf,
            tolerance=metadata.tolerance,
            runtime_s=runtime,
            detail=f"{type(e).__name__}: {e}",
        )
    runtime = time.perf_counter() - start

    passed = bool(measurement.error <= metadata.tolerance)
    logger.info(
        "Check '%s': error=%.3e tolerance=%.1e %s (%.2fs)",
        metadata.name,
        measurement.error,
        metadata.tolerance,
        "PASS" if passed else "FAIL",
        runtime,
    )
    return CheckResult(
        name=metadata.name,
        suite=metadata.suite,
        passed=passed,
        value=measurement.value,
        expected=measurement.expected,
        margin=metadata.tolerance - measurement.error,
        tolerance=metadata.tolerance,
        runtime_s=runtime,
        detail=measurement.detail,
    )


def run_suite(
    suites: Sequence[str] | None = None,
    registry: CheckRegistry | None = None,
) -> SuiteResult:
    """
    Run every enabled check of the selected suites in catalog order.

    Parameters
    ----------
    suites : sequence of str, optional
        Suite names; all suites when omitted.
    registry : CheckRegistry, optional
        Defaults to the packaged catalog.

    Returns
    -------
    SuiteResult
        Per-check results; ``passed`` is True iff every check passed.

    Raises
    ------
    ValueError
        If a suite name is unknown.

    Examples
    --------
    >>> result = run_suite(["golden"])
    >>> result.passed
    True
    """
    registry = registry or CheckRegistry(CHECK_CATALOG_PATH)
    selected = tuple(suites) if suites else SUITES

    results: list[CheckResult] = []
    for suite in selected:
        for metadata in registry.get_suite(suite).values():
            results.append(run_check(registry, metadata))

    outcome = SuiteResult(
        suites=selected,
        results=tuple(results),
        metadata={"version": __version__, "suites": list(selected)},
    )
    logger.info(
        "Verification %s: %d checks, %d failed, %.1fs",
        "passed" if outcome.passed else "FAILED",
        len(results),
        outcome.n_failed,
        outcome.runtime_s,
    )
    return outcome
