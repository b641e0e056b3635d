"""
Exception hierarchy shared by all numerical layers.

Each class subclasses the matching builtin so callers that only know about
``ValueError`` or ``RuntimeError`` keep working.
"""

from typing import Any


class RmtSumsError(Exception):
    """Base class for all package errors."""


class DomainError(RmtSumsError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class IndeterminateFormError(DomainError):
    """Evaluation at a removable singularity that must be rerouted to a limit formula."""


class RangeError(RmtSumsError, ValueError):
    """Argument inside the domain but outside the range an evaluator supports."""


class AccuracyError(RmtSumsError, ArithmeticError):
    """
    Requested accuracy not reached.

    Parameters
    ----------
    message : str
        Description of the failure.
    best_estimate : float or complex
        Best value available when the iteration stopped.
    err_est : float
        Error estimate attached to ``best_estimate``.
    """

    def __init__(self, message: str, best_estimate: Any = None, err_est: float = float("inf")):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.err_est = err_est


class ConsistencyError(RmtSumsError, RuntimeError):
    """A quantity proven positive (or otherwise constrained) came out violating it."""


class DiagnosticsError(RmtSumsError, RuntimeError):
    """Sampler diagnostics outside the accepted window."""


# CLI exit codes, one per class; 1 is reserved for failed verification checks
EXIT_CODES: dict[type[RmtSumsError], int] = {
    DomainError: 2,
    IndeterminateFormError: 3,
    RangeError: 4,
    AccuracyError: 5,
    ConsistencyError: 6,
    DiagnosticsError: 7,
}


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the CLI exit code of its most specific registered class.

    Parameters
    ----------
    exc : BaseException
        Raised exception.

    Returns
    -------
    int
        Exit code; 10 for exceptions outside the hierarchy.
    """
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return 10
