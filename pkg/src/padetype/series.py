"""Truncated power series arithmetic.

A series is a 1-D complex array ``c`` holding ``c[0] + c[1] t + c[2] t**2 + ...``
up to its stored length. Nothing here extends a series implicitly: every
operation states the length of its result.
"""
import numpy as np

from .errors import InputError, SingularAtOrigin, ZeroShift


def as_series(coeffs):
    """Validate and convert to a 1-D complex array (copy)."""
    c = np.array(coeffs, dtype=complex).ravel()
    if c.size == 0:
        raise InputError("a series needs at least one coefficient")
    if not np.all(np.isfinite(c)):
        raise InputError("series coefficients must be finite")
    return c


def coeff(c, i):
    """``c[i]`` with the convention that out-of-range indices give 0."""
    if 0 <= i < len(c):
        return c[i]
    return 0.0


def partial_sum(c, n, t):
    """Evaluate ``S_n(t) = c_0 + ... + c_n t**n`` by Horner's rule.

    Coefficients beyond the stored length count as zero and ``n < 0`` gives
    the empty sum. ``t`` may be an array.
    """
    t = np.asarray(t, dtype=complex)
    acc = np.zeros_like(t)
    if n < 0:
        return acc if acc.ndim else complex(acc)
    for ci in np.asarray(c, dtype=complex)[: n + 1][::-1]:
        acc = acc * t + ci
    return acc if acc.ndim else complex(acc)


def partial_sums(c, n, t):
    """Return ``[S_0(t), ..., S_n(t)]`` stacked along the first axis."""
    t = np.asarray(t, dtype=complex)
    out = np.zeros((n + 1,) + t.shape, dtype=complex)
    acc = np.zeros_like(t)
    tp = np.ones_like(t)
    for j in range(n + 1):
        acc = acc + coeff(c, j) * tp
        tp = tp * t
        out[j] = acc
    return out


def divide_linear(c, z):
    """Coefficients of ``h`` with ``f = h * (t - z)``, same length as ``c``."""
    c = as_series(c)
    if z == 0:
        raise ZeroShift("cannot divide a series by t")
    h = np.empty_like(c)
    h[0] = -c[0] / z
    for i in range(1, len(c)):
        h[i] = (h[i - 1] - c[i]) / z
    return h


def multiply_linear(c, p):
    """Coefficients of ``f * (t - p)``; the result is one term longer."""
    c = as_series(c)
    out = np.zeros(len(c) + 1, dtype=complex)
    out[:-1] -= p * c
    out[1:] += c
    return out


def convolve(a, b, n=None):
    """Cauchy product truncated to ``n`` terms (default: ``len(a)``)."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    n = len(a) if n is None else n
    full = np.convolve(a, b)
    out = np.zeros(n, dtype=complex)
    m = min(n, len(full))
    out[:m] = full[:m]
    return out


def reciprocal(c):
    """Series ``g`` of the same length with ``f g = 1`` to that length."""
    c = as_series(c)
    if c[0] == 0:
        raise SingularAtOrigin("reciprocal needs a nonzero constant term")
    n = len(c)
    g = np.zeros(n, dtype=complex)
    g[0] = 1 / c[0]
    for j in range(1, n):
        g[j] = -np.dot(c[1 : j + 1], g[j - 1 :: -1][:j]) / c[0]
    return g


def taylor_of_rational(num, den, length):
    """First ``length`` Taylor coefficients of ``num/den`` at the origin.

    Long division in ascending powers; ``num`` and ``den`` are coefficient
    vectors in increasing degree.
    """
    num = np.asarray(num, dtype=complex)
    den = np.asarray(den, dtype=complex)
    if den.size == 0 or den[0] == 0:
        raise SingularAtOrigin("denominator vanishes at the origin")
    r = np.zeros(length, dtype=complex)
    for j in range(length):
        acc = coeff(num, j)
        for m in range(1, min(j, len(den) - 1) + 1):
            acc -= den[m] * r[j - m]
        r[j] = acc / den[0]
    return r


def transform_for_factors(c, zeros=(), poles=()):
    """Series of ``f * P(t) / Z(t)`` with ``Z = prod(t - z)``, ``P = prod(t - p)``.

    Divisions come first, one linear factor at a time, then the
    multiplications. The result keeps the input length since the extra term
    a product would add depends on coefficients that are not known.
    """
    h = as_series(c)
    n = len(h)
    for z in zeros:
        h = divide_linear(h, z)
    for p in poles:
        h = multiply_linear(h, p)[:n]
    return h


def factor_product(roots, t):
    """Evaluate ``prod(t - r)`` over ``roots`` (1 for an empty list)."""
    t = np.asarray(t, dtype=complex)
    out = np.ones_like(t)
    for r in roots:
        out = out * (t - r)
    return out if out.ndim else complex(out)


def real_if_small(x, scale=None, tol=1e-10):
    """Drop imaginary parts below ``tol * scale``; raise if they are larger."""
    x = np.asarray(x)
    if not np.iscomplexobj(x):
        return x
    scale = np.max(np.abs(x)) if scale is None else scale
    bound = tol * max(scale, 1.0)
    if np.any(np.abs(x.imag) > bound):
        raise InputError("values have imaginary parts above %.3g" % bound)
    return x.real
