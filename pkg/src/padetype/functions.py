"""Test functions with known Taylor coefficients at the origin.

Coefficients are generated in exact rational arithmetic and converted to
floats at the end.
"""
from fractions import Fraction
from math import factorial

import numpy as np


def _exact_div(num, den, n):
    out = []
    for j in range(n):
        acc = num[j] if j < len(num) else Fraction(0)
        for m in range(1, min(j, len(den) - 1) + 1):
            acc -= den[m] * out[j - m]
        out.append(acc / den[0])
    return out


def cos_series(n):
    return np.array([(-1) ** (i // 2) / factorial(i) if i % 2 == 0 else 0.0 for i in range(n)])


def exp_series(n):
    return np.array([1.0 / factorial(i) for i in range(n)])


def log1p_series(n):
    """``log(1 + t) = t - t^2/2 + ...``"""
    return np.array([0.0] + [(-1) ** (i + 1) / i for i in range(1, n)])[:n]


def log1p_over_t_series(n):
    """``log(1 + t) / t = 1 - t/2 + t^2/3 - ...``"""
    return np.array([(-1) ** i / (i + 1) for i in range(n)])


def tan_over_series(n, omega=4.0):
    """``tan(omega t) / (omega t)``; only even powers are nonzero."""
    m = n + 2
    sinc = [Fraction((-1) ** (i // 2), factorial(i + 1)) if i % 2 == 0 else Fraction(0) for i in range(m)]
    cos = [Fraction((-1) ** (i // 2), factorial(i)) if i % 2 == 0 else Fraction(0) for i in range(m)]
    q = _exact_div(sinc, cos, n)
    return np.array([float(q[i]) * omega**i for i in range(n)])


def tan_over(t, omega=4.0):
    t = np.asarray(t, dtype=complex)
    safe = np.where(t == 0, 1.0, t)
    out = np.where(t == 0, 1.0, np.tan(omega * safe) / (omega * safe))
    return out if out.ndim else complex(out)


def log1p_over_t(t):
    t = np.asarray(t, dtype=complex)
    safe = np.where(t == 0, 1.0, t)
    out = np.where(t == 0, 1.0, np.log1p(safe) / safe)
    return out if out.ndim else complex(out)


KNOWN = {
    "cos": (cos_series, np.cos),
    "exp": (exp_series, np.exp),
    "log1p": (log1p_series, np.log1p),
    "log1p_over_t": (log1p_over_t_series, log1p_over_t),
    "tan_over": (tan_over_series, tan_over),
}


def known(name, n, **params):
    """``(coefficients, callable)`` for one of the functions in ``KNOWN``."""
    series_fn, func = KNOWN[name]
    coeffs = series_fn(n, **params)
    if params:
        return coeffs, lambda t: func(t, **params)
    return coeffs, func
