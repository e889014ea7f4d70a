"""Padé-type rational interpolants in coefficient form.

The denominator ``b`` (with ``b[0] = 1``) is fixed by interpolation
conditions at nonzero nodes; the numerator then follows from the
approximation-through-order relations

    a_i = c_i b_0 + c_{i-1} b_1 + ... + c_{i-q} b_q,   i = 0..p,

so that ``f - N/D = O(t**(p+1))`` whatever the denominator is.
"""
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from . import series as ps
from .errors import DegenerateDenominator, InputError
from .linsolve import SolveReport, pinv_solve, solved_system_condition
from .nodes import check_factors, check_nodes

POLE_EPS = 1e-300
TRIM_RTOL = 1e-14


@dataclass(frozen=True)
class PoleInfo:
    location: complex
    real: bool
    prescribed: bool = False


@dataclass(frozen=True)
class RationalModel:
    """``N(t) Z(t) / (D(t) P(t))`` with coefficient vectors in increasing degree."""

    num: np.ndarray
    den: np.ndarray
    prescribed_zeros: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    prescribed_poles: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    report: Optional[SolveReport] = None
    nodes: Optional[np.ndarray] = None

    @property
    def p(self):
        return len(self.num) - 1

    @property
    def q(self):
        return len(self.den) - 1

    def __call__(self, t):
        return evaluate(self, t)

    def poles(self, real_tol=1e-10):
        return poles_of(self, real_tol)

    def taylor(self, length):
        """Taylor coefficients of the full interpolant (prescribed factors included)."""
        num, den = self.num, self.den
        for z in self.prescribed_zeros:
            num = ps.multiply_linear(num, z)
        for pole in self.prescribed_poles:
            den = ps.multiply_linear(den, pole)
        return ps.taylor_of_rational(num, den, length)


def build_system(c, nodes, values, p, q, scaled=True):
    """Linear system for ``b_1..b_q`` once ``b_0 = 1`` is moved to the right.

    Row ``i`` reads ``sum_j b_j tau_i**j (S_{p-j}(tau_i) - f_i) = -(S_p(tau_i) - f_i)``;
    with ``scaled`` every row is multiplied by ``tau_i**(-q)``.
    """
    c = ps.as_series(c)
    tau, f = check_nodes(nodes, values)
    if p < 0 or q < 0:
        raise InputError("degrees must be nonnegative")
    if len(c) < p + 1:
        raise InputError("need %d series coefficients, got %d" % (p + 1, len(c)))
    S = ps.partial_sums(c, p, tau)
    A = np.empty((tau.size, q), dtype=complex)
    for j in range(1, q + 1):
        Spj = S[p - j] if p - j >= 0 else 0.0
        A[:, j - 1] = tau**j * (Spj - f)
    rhs = -(S[p] - f)
    if scaled:
        # overflow here surfaces as a NumericalFailure in the solver
        with np.errstate(over="ignore", invalid="ignore"):
            s = tau ** (-q)
            A = A * s[:, None]
            rhs = rhs * s
    return A, rhs


def numerator_from_denominator(c, den, p):
    """``a_i = sum_j c_{i-j} b_j`` for ``i = 0..p`` (``c`` with negative index is 0)."""
    c = np.asarray(c, dtype=complex)
    den = np.asarray(den, dtype=complex)
    a = np.zeros(p + 1, dtype=complex)
    for i in range(p + 1):
        for j in range(min(i, len(den) - 1) + 1):
            a[i] += ps.coeff(c, i - j) * den[j]
    return a


def fit(c, nodes, values, p, q=None, scaled=True, rcond=None):
    """Padé-type rational interpolant of type ``(p/q)``.

    With ``l`` nodes the denominator solves the ``l x q`` interpolation
    system in the least-squares sense when ``l > q`` and with minimal norm
    when ``l <= q``.
    """
    q = p if q is None else q
    A, rhs = build_system(c, nodes, values, p, q, scaled)
    if q == 0:
        den = np.ones(1, dtype=complex)
        report = None
    else:
        report = pinv_solve(A, rhs, rcond)
        den = np.concatenate([[1.0], report.solution])
    if not np.any(den):
        raise DegenerateDenominator("all denominator coefficients vanish")
    num = numerator_from_denominator(c, den, p)
    return RationalModel(num, den, report=report, nodes=check_nodes(nodes))


def fit_partial(c, nodes, values, k, zeros=(), poles=(), scaled=True, rcond=None):
    """Partial Padé-type interpolant ``R_k Z / P`` with known zeros and poles.

    The core ``R_k`` is fitted to ``f_i P(tau_i)/Z(tau_i)`` and to the series
    of ``f P / Z``.
    """
    tau, f = check_nodes(nodes, values)
    z, pl = check_factors(tau, zeros, poles)
    ct = ps.transform_for_factors(c, z, pl)
    ft = f * ps.factor_product(pl, tau) / ps.factor_product(z, tau)
    core = fit(ct, tau, ft, k, k, scaled, rcond)
    return replace(core, prescribed_zeros=z, prescribed_poles=pl)


def _horner(coeffs, t):
    acc = np.zeros_like(t)
    for a in coeffs[::-1]:
        acc = acc * t + a
    return acc


def _signed_inf(numer):
    re = np.where(np.real(numer) < 0, -np.inf, np.inf)
    return re + 0j


def evaluate(model, t):
    """Evaluate at scalar or array ``t``; poles map to a signed infinity."""
    t = np.asarray(t, dtype=complex)
    numer = _horner(model.num, t) * ps.factor_product(model.prescribed_zeros, t)
    denom = _horner(model.den, t) * ps.factor_product(model.prescribed_poles, t)
    small = np.abs(denom) < POLE_EPS
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(small, _signed_inf(numer), numer / np.where(small, 1.0, denom))
    return out if out.ndim else complex(out)


def trim(coeffs, rtol=TRIM_RTOL):
    """Drop trailing coefficients below ``rtol * max|coeffs|``."""
    coeffs = np.asarray(coeffs, dtype=complex)
    big = np.max(np.abs(coeffs)) if coeffs.size else 0.0
    if big == 0:
        return coeffs[:0]
    n = len(coeffs)
    while n > 0 and abs(coeffs[n - 1]) <= rtol * big:
        n -= 1
    return coeffs[:n]


def poly_roots(coeffs):
    """Roots of a polynomial given in increasing degree (trimmed, companion eigenvalues)."""
    c = trim(coeffs)
    if c.size == 0:
        raise DegenerateDenominator("zero polynomial has no well-defined roots")
    if c.size == 1:
        return np.zeros(0, dtype=complex)
    # numpy balances the companion matrix before the eigenvalue solve
    return np.roots(c[::-1]).astype(complex)


def poles_of(model, real_tol=1e-10):
    """Denominator roots plus the prescribed poles, each flagged real or not."""
    out = []
    for r in poly_roots(model.den):
        out.append(PoleInfo(complex(r), abs(r.imag) <= real_tol))
    for r in model.prescribed_poles:
        out.append(PoleInfo(complex(r), abs(r.imag) <= real_tol, prescribed=True))
    return out


def real_poles(model, real_tol=1e-10, include_prescribed=False):
    return np.array(
        sorted(
            p.location.real
            for p in poles_of(model, real_tol)
            if p.real and (include_prescribed or not p.prescribed)
        )
    )


def order_of_contact(model, c, p=None, guard=2):
    """Max relative mismatch between the model's Taylor coefficients and ``c[:p+1]``."""
    p = model.p if p is None else p
    c = np.asarray(c, dtype=complex)
    taylor = model.taylor(p + 1 + guard)[: p + 1]
    ref = np.array([ps.coeff(c, i) for i in range(p + 1)])
    scale = max(np.max(np.abs(ref)), 1.0)
    return float(np.max(np.abs(taylor - ref)) / scale)


def system_condition(c, nodes, values, p, q=None, scaled=True):
    """Condition number of the denominator system as solved (see ``solved_system_condition``)."""
    q = p if q is None else q
    A, _ = build_system(c, nodes, values, p, q, scaled)
    return solved_system_condition(A)
