"""
Acceptance checks driven by a JSON catalog.

The registry loads ``check_catalog.json``, validates that every referenced
measuring function exists, and the runner executes suites in catalog order.
"""

from .config import SUITES, CheckMetadata, CheckResult, Measurement, SuiteResult
from .registry import CheckRegistry
from .report import generate_verification_report, save_report
from .runner import run_check, run_suite

__all__ = [
    "SUITES",
    "CheckMetadata",
    "CheckResult",
    "Measurement",
    "SuiteResult",
    "CheckRegistry",
    "generate_verification_report",
    "save_report",
    "run_check",
    "run_suite",
]
