"""Padé-type interpolants for Chebyshev series.

Series and models use the halved-constant convention
``f = c_0/2 + sum_{i>=1} c_i T_i``.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import series as ps
from .errors import InputError
from .linsolve import SolveReport, pinv_solve
from .nodes import check_nodes


@dataclass(frozen=True)
class ChebyshevModel:
    h: np.ndarray
    e: np.ndarray
    series: np.ndarray
    report: Optional[SolveReport] = None

    @property
    def k(self):
        return len(self.e) - 1

    def __call__(self, t):
        return cheb_eval(self.h, t) / cheb_eval(self.e, t)


def cheb_eval(coeffs, t):
    """``c_0/2 + sum c_i T_i(t)`` by Clenshaw's recurrence (any real or complex t)."""
    c = np.asarray(coeffs, dtype=complex)
    t = np.asarray(t, dtype=complex)
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    for ci in c[:0:-1]:
        b1, b2 = 2 * t * b1 - b2 + ci, b1
    out = t * b1 - b2 + c[0] / 2
    return out if out.ndim else complex(out)


def cheb_T(n, t):
    """Rows ``T_0(t) .. T_n(t)`` by the three-term recurrence."""
    t = np.asarray(t, dtype=complex)
    T = np.empty((n + 1,) + t.shape, dtype=complex)
    T[0] = 1
    if n >= 1:
        T[1] = t
    for i in range(1, n):
        T[i + 1] = 2 * t * T[i] - T[i - 1]
    return T


def numerator_from_denominator(c, e):
    """Numerator ``h`` making ``f D - N`` free of ``T_0..T_k`` for this ``e``."""
    c = np.asarray(c, dtype=complex)
    e = np.asarray(e, dtype=complex)
    k = len(e) - 1
    cc = lambda i: ps.coeff(c, i)
    h = np.empty(k + 1, dtype=complex)
    h[0] = cc(0) * e[0] / 2 + sum(cc(i) * e[i] for i in range(1, k + 1))
    for n in range(1, k + 1):
        acc = cc(n) * e[0]
        for j in range(1, k + 1):
            acc += (cc(abs(n - j)) + cc(n + j)) * e[j]
        h[n] = acc / 2
    return h


def build_system(c, nodes, values, k):
    """``k x k`` system for ``e_1..e_k`` once ``e_0 = 1`` is on the right."""
    tau, f = check_nodes(nodes, values, allow_origin=True)
    c = ps.as_series(c)
    cc = lambda i: ps.coeff(c, i)
    T = cheb_T(k, tau)
    A = np.empty((tau.size, k), dtype=complex)
    for j in range(1, k + 1):
        col = cc(j) - 2 * f * T[j]
        for n in range(1, k + 1):
            col = col + (cc(abs(n - j)) + cc(n + j)) * T[n]
        A[:, j - 1] = col
    trunc = cc(0) / 2 + sum(cc(n) * T[n] for n in range(1, k + 1))
    rhs = -(trunc - f)
    return A, rhs


def fit_cheb(c, nodes, values, k=None, rcond=None):
    """Chebyshev Padé-type interpolant through ``k`` nodes (``e_0 = 1``)."""
    tau = check_nodes(nodes, allow_origin=True)
    k = tau.size if k is None else k
    if k < 0:
        raise InputError("degree must be nonnegative")
    c = ps.as_series(c)
    if k == 0:
        e = np.ones(1, dtype=complex)
        return ChebyshevModel(numerator_from_denominator(c, e), e, c)
    A, rhs = build_system(c, tau, values, k)
    report = pinv_solve(A, rhs, rcond)
    e = np.concatenate([[1.0], report.solution])
    return ChebyshevModel(numerator_from_denominator(c, e), e, c, report)


def cheb_coefficients(func, n, quad_points=256):
    """First ``n`` Chebyshev coefficients (halved-constant convention) by Gauss-Chebyshev quadrature."""
    m = quad_points
    theta = (np.arange(m) + 0.5) * np.pi / m
    fx = np.asarray(func(np.cos(theta)), dtype=complex)
    j = np.arange(n)
    return (2.0 / m) * (np.cos(np.outer(j, theta)) @ fx)
