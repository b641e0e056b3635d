"""
Catalog metadata and result containers for acceptance checks.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

Suite = Literal[
    "golden",
    "halfint",
    "quarter",
    "s0",
    "painleve",
    "boundary",
    "identities",
    "density",
    "vanishing",
    "montecarlo",
    "coefficients",
]

SUITES: tuple[str, ...] = (
    "golden",
    "halfint",
    "quarter",
    "s0",
    "painleve",
    "boundary",
    "identities",
    "density",
    "vanishing",
    "montecarlo",
    "coefficients",
)


@dataclass(frozen=True)
class CheckMetadata:
    """
    Catalog entry for one acceptance check.

    Attributes
    ----------
    name : str
        Unique check identifier (e.g., "golden_r_1_1").
    suite : Suite
        Suite the check belongs to.
    description : str
        What is compared against what.
    function_name : str
        Name of the measuring function in :mod:`rmtsums.verification.checks`.
    tolerance : float
        Largest accepted error as returned by the function.
    enabled : bool
        Whether the check runs by default.
    """

    name: str
    suite: str
    description: str
    function_name: str
    tolerance: float
    enabled: bool = True

    def __post_init__(self) -> None:
        """Validate check metadata."""
        if not self.name:
            raise ValueError("Check name cannot be empty")
        if self.suite not in SUITES:
            raise ValueError(f"Check '{self.name}': unknown suite {self.suite!r}")
        if not self.function_name:
            raise ValueError(f"Check '{self.name}': function_name cannot be empty")
        if not self.tolerance > 0.0:
            raise ValueError(
                f"Check '{self.name}': tolerance must be positive, got {self.tolerance}"
            )


@dataclass(frozen=True)
class Measurement:
    """
    Raw outcome of a check function.

    Attributes
    ----------
    value : float
        Computed quantity (worst case over the check's parameter set).
    expected : float
        Reference value; NaN where the check is a test statistic.
    error : float
        Quantity compared against the catalog tolerance (relative gap,
        absolute gap, sigmas or -log10 p).
    detail : str
        Where the worst case occurred.
    """

    value: float
    expected: float
    error: float
    detail: str = ""


@dataclass(frozen=True)
class CheckResult:
    """
    One executed check.

    Attributes
    ----------
    name : str
        Check identifier.
    suite : str
        Suite name.
    passed : bool
        ``error <= tolerance`` and no exception.
    value : float
        Computed quantity.
    expected : float
        Reference value.
    margin : float
        tolerance - error; negative on failure.
    tolerance : float
        Catalog tolerance.
    runtime_s : float
        Wall time of the check.
    detail : str
        Worst-case location or the exception message.
    """

    name: str
    suite: str
    passed: bool
    value: float
    expected: float
    margin: float
    tolerance: float
    runtime_s: float
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass(frozen=True)
class SuiteResult:
    """
    Outcome of a verification run.

    Attributes
    ----------
    suites : tuple of str
        Suites selected.
    results : tuple of CheckResult
        Per-check results in catalog order.
    metadata : dict
        Package version and selection; no timestamps.
    """

    suites: tuple[str, ...]
    results: tuple[CheckResult, ...]
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True iff every selected check passed."""
        return all(r.passed for r in self.results)

    @property
    def n_failed(self) -> int:
        """Number of failed checks."""
        return sum(not r.passed for r in self.results)

    @property
    def runtime_s(self) -> float:
        """Total wall time."""
        return math.fsum(r.runtime_s for r in self.results)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "suites": list(self.suites),
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
            "metadata": self.metadata,
        }
