"""Log-space determinants for moment and Bessel matrices."""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike

from rmtsums.errors import DomainError, RangeError

logger = logging.getLogger(__name__)

MAX_DETERMINANT_SIZE = 64


def det_logspace(matrix: ArrayLike) -> tuple[int, float]:
    """
    Determinant in (sign, log|det|) form.

    LU factorization with partial pivoting (LAPACK ``getrf`` through
    :func:`numpy.linalg.slogdet`), so N x N Hankel matrices whose
    determinants over- or underflow a double are still representable.

    Parameters
    ----------
    matrix : array_like
        Square real matrix of size 1..64.

    Returns
    -------
    tuple of (int, float)
        ``(sign, log_abs)`` with sign in {-1, 0, +1}. An exactly singular
        matrix returns ``(0, -inf)``.

    Raises
    ------
    DomainError
        If the matrix is empty, not square or contains non-finite entries.
    RangeError
        If the matrix is larger than 64 x 64.

    Examples
    --------
    >>> det_logspace(np.eye(3))
    (1, 0.0)
    >>> det_logspace([[2.0, 0.0], [0.0, 0.5]])
    (1, 0.0)
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DomainError(f"det_logspace requires a nonempty square matrix, got shape {m.shape}")
    if m.shape[0] > MAX_DETERMINANT_SIZE:
        raise RangeError(
            f"det_logspace supports n <= {MAX_DETERMINANT_SIZE}, got n={m.shape[0]}"
        )
    if not np.all(np.isfinite(m)):
        raise DomainError("det_logspace requires finite matrix entries")

    sign, log_abs = np.linalg.slogdet(m)
    if sign == 0.0:
        logger.debug("Singular %dx%d matrix", m.shape[0], m.shape[0])
        return 0, -math.inf
    return int(sign), float(log_abs)
