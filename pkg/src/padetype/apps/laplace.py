"""Inverse Laplace transforms of strictly proper rational functions.

For ``F(p) = A (p^m + alpha_1 p^{m-1} + ... + alpha_m) / (p^n + beta_1 p^{n-1} + ... + beta_n)``
with ``m < n`` the inverse has the Taylor expansion ``f(s) = A sum v_i s^i / i!``
where ``u`` obeys the denominator recurrence started from ``u_{n-1} = 1`` and
``v`` applies the numerator to ``u``. No partial fractions are needed.
"""
from dataclasses import dataclass
from math import factorial

import numpy as np

from .. import series as ps
from ..errors import DegreeViolation, InputError, NonDecaying
from ..rational import trim


@dataclass(frozen=True)
class LaplaceRational:
    A: complex
    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        if len(self.alpha) >= len(self.beta):
            raise DegreeViolation(
                "numerator degree %d must be below denominator degree %d"
                % (len(self.alpha), len(self.beta))
            )

    @property
    def m(self):
        return len(self.alpha)

    @property
    def n(self):
        return len(self.beta)

    def __call__(self, p):
        p = np.asarray(p, dtype=complex)
        num = np.polyval(np.concatenate([[1.0], self.alpha]), p)
        den = np.polyval(np.concatenate([[1.0], self.beta]), p)
        return self.A * num / den


def longman_sharir_invert(F, n_terms=30):
    """Taylor coefficients ``A v_i / i!`` (``i < n_terms``) of the inverse transform."""
    if n_terms < 1:
        raise InputError("n_terms must be positive")
    m, n = F.m, F.n
    alpha = np.asarray(F.alpha, dtype=complex)
    beta = np.asarray(F.beta, dtype=complex)
    u = np.zeros(n_terms + m, dtype=complex)
    u[n - 1] = 1.0
    for i in range(n, u.size):
        u[i] = -sum(beta[j - 1] * u[i - j] for j in range(1, n + 1))
    v = np.empty(n_terms, dtype=complex)
    for i in range(n_terms):
        acc = u[i + m]
        for j in range(1, m + 1):
            acc += alpha[j - 1] * u[i + m - j]
        v[i] = acc
    fact = np.array([float(factorial(i)) for i in range(n_terms)])
    return F.A * v / fact


def evaluate_inverse(coeffs, s, stop_rtol=1e-16):
    """Sum ``sum coeffs[i] s^i`` term by term.

    Summation stops once a run of terms stays below ``stop_rtol`` times the
    partial sum; the run length is the number of trailing zero coefficients
    allowed by the recurrence period, so sparse series do not stop early.
    """
    c = np.asarray(coeffs, dtype=complex)
    s = np.asarray(s, dtype=complex)
    flat = s.ravel()
    total = np.zeros_like(flat)
    active = np.ones(flat.shape, dtype=bool)
    quiet = np.zeros(flat.shape, dtype=int)
    run = _zero_run(c) + 1
    sp = np.ones_like(flat)
    for ci in c:
        term = ci * sp
        total = np.where(active, total + term, total)
        small = np.abs(term) < stop_rtol * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        active &= quiet < run
        sp = sp * flat
        if not active.any():
            break
    out = total.reshape(s.shape)
    return out if out.ndim else complex(out)


def _zero_run(c):
    longest = cur = 0
    for ci in c:
        cur = cur + 1 if ci == 0 else 0
        longest = max(longest, cur)
    return longest


def mapped_transform(model, a=1.0, power=2):
    """Rewrite ``R(t)`` with ``t = (a/p)**power`` as a :class:`LaplaceRational`.

    Needs ``R(t) -> 0`` as ``p -> oo``, i.e. a vanishing constant numerator
    coefficient.
    """
    if power not in (1, 2):
        raise InputError("supported maps are t = a/p and t = a^2/p^2")
    num = np.asarray(model.num, dtype=complex)
    den = np.asarray(model.den, dtype=complex)
    for z in getattr(model, "prescribed_zeros", ()):
        num = ps.multiply_linear(num, z)
    for pole in getattr(model, "prescribed_poles", ()):
        den = ps.multiply_linear(den, pole)
    scale = max(np.max(np.abs(num)), 1e-300)
    if abs(num[0]) > 1e-12 * scale:
        raise NonDecaying("numerator constant term %r does not vanish" % num[0])
    num = trim(num)
    if den[0] == 0:
        raise InputError("denominator constant term must be nonzero")
    nz = [i for i in range(1, len(num)) if abs(num[i]) > 1e-14 * scale]
    if not nz:
        raise NonDecaying("numerator vanishes identically")
    s0 = nz[0]
    Q = len(den) - 1
    if len(num) - 1 > Q:
        raise DegreeViolation("numerator degree exceeds denominator degree")
    r = power
    A = a ** (r * s0) * num[s0] / den[0]
    alpha = np.zeros(r * (Q - s0), dtype=complex)
    for i in range(s0 + 1, len(num)):
        alpha[r * (i - s0) - 1] = a ** (r * (i - s0)) * num[i] / num[s0]
    beta = np.zeros(r * Q, dtype=complex)
    for i in range(1, Q + 1):
        beta[r * i - 1] = a ** (r * i) * den[i] / den[0]
    return LaplaceRational(A, alpha, beta)


def invert_from_interpolant(model, a=1.0, power=2, n_terms=30):
    """Taylor coefficients of the inverse transform of ``R((a/p)**power)``."""
    return longman_sharir_invert(mapped_transform(model, a, power), n_terms)
