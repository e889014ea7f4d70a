"""Minimum-norm least-squares solves through the SVD.

Every fit in the package goes through :func:`pinv_solve`, which behaves like
``pinv(A) @ b``: least squares for overdetermined systems, the minimal
2-norm solution for underdetermined or rank-deficient ones.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InputError, NumericalFailure


@dataclass(frozen=True)
class SolveReport:
    solution: np.ndarray
    rank: int
    condition: float
    residual_norm: float
    singular_values: np.ndarray


def default_rcond(shape):
    return max(shape) * np.finfo(float).eps


def _svd(A):
    try:
        return np.linalg.svd(A, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc


def pinv_solve(A, b, rcond=None):
    """Solve ``A x ~ b`` with singular values below ``rcond * s_max`` dropped."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    b = np.asarray(b, dtype=complex).ravel()
    l, k = A.shape
    if l < 1 or k < 1:
        raise InputError("empty system")
    if b.size != l:
        raise InputError("right-hand side has length %d, expected %d" % (b.size, l))
    rcond = default_rcond(A.shape) if rcond is None else rcond
    if not 0 < rcond < 1:
        raise InputError("rcond must lie in (0, 1)")
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
        raise NumericalFailure("non-finite entries in the linear system")

    U, s, Vh = _svd(A)
    smax = s[0] if s.size else 0.0
    keep = s > rcond * smax if smax > 0 else np.zeros_like(s, dtype=bool)
    rank = int(np.count_nonzero(keep))
    coef = (U[:, keep].conj().T @ b) / s[keep]
    x = Vh[keep].conj().T @ coef
    if rank == 0:
        x = np.zeros(k, dtype=complex)
    condition = float(s[keep][0] / s[keep][-1]) if rank else np.inf
    residual = float(np.linalg.norm(A @ x - b))
    return SolveReport(x, rank, condition, residual, s)


def condition_number(A):
    """``s_max / s_min``, or ``inf`` when ``s_min`` is zero to working precision."""
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    if A.size == 0:
        raise InputError("empty matrix")
    s = _svd(A)[1]
    if s[0] == 0 or s[-1] <= s[0] * default_rcond(A.shape):
        return np.inf
    return float(s[0] / s[-1])


def solved_system_condition(A):
    """Condition of the system as it is actually solved.

    Square systems report ``cond(A)``; rectangular ones report the condition
    of the normal equations ``A^H A`` (that is ``cond(A)**2``), which is the
    figure a normal-equations or pinv-based least-squares solve sees.
    """
    A = np.atleast_2d(np.asarray(A, dtype=complex))
    c = condition_number(A)
    if A.shape[0] == A.shape[1]:
        return c
    return c * c
