"""Error-kernel diagnostic for Padé-type interpolants on a real interval.

The interpolation error is written as

    f(t) - R(t) = g(t) * t**n * prod_i (t - tau_i) / ((n + m)! D(t) Q(t)),

with ``n`` the order of contact at 0 (``k + 1`` for the coefficient form,
``k`` for the barycentric form), ``m`` the number of nodes and ``Q`` a
polynomial of degree ``n - 1`` absorbing the poles of ``f``. For smooth
``f``, ``g`` is a scaled high derivative of ``f D Q`` and so stays bounded;
this module computes ``g`` on a grid so that can be checked.
"""
from dataclasses import dataclass
from math import factorial

import numpy as np

from .. import barycentric as bary
from .. import rational
from .. import series as ps
from ..errors import DegreeMismatch, InputError

P = np.polynomial.polynomial


@dataclass(frozen=True)
class ErrorKernelReport:
    grid: np.ndarray
    kernel: np.ndarray
    g_values: np.ndarray
    q_spec: np.ndarray
    valid: np.ndarray

    @property
    def max_abs_g(self):
        return float(np.max(np.abs(self.g_values[self.valid])))


def _full_polys(model):
    if isinstance(model, bary.BarycentricModel):
        rm, n = bary.to_rational(model), model.k
    else:
        rm, n = model, model.q + 1
    num, den = np.asarray(rm.num, complex), np.asarray(rm.den, complex)
    for z in rm.prescribed_zeros:
        num = ps.multiply_linear(num, z)
    for pole in rm.prescribed_poles:
        den = ps.multiply_linear(den, pole)
    return num, den, n


def chebyshev_padding(degree, interval):
    """Power coefficients of ``T_degree((2t - a - b)/(b - a))``."""
    a, b = interval
    unit = np.zeros(degree + 1)
    unit[-1] = 1.0
    power = np.polynomial.chebyshev.cheb2poly(unit)
    lin = np.array([-(a + b) / (b - a), 2.0 / (b - a)])
    out = np.zeros(1)
    for coef in power[::-1]:
        out = P.polyadd(P.polymul(out, lin), [coef])
    return out


def default_q(model, den, n, interval, poles=()):
    """``Q = D`` for pole-free coefficient-form fits, otherwise ``phi * psi``."""
    den = rational.trim(den)
    if not poles and isinstance(model, rational.RationalModel) and len(den) == n:
        return den
    phi = np.ones(1, dtype=complex)
    for loc, mult in poles:
        for _ in range(int(mult)):
            phi = P.polymul(phi, [-loc, 1.0])
    pad = n - len(phi)
    if pad < 0:
        raise DegreeMismatch("pole multiplicities exceed n - 1 = %d" % (n - 1))
    return P.polymul(phi, chebyshev_padding(pad, interval))


def error_kernel(model, grid, f_values, interval=None, poles=(), q_coeffs=None,
                 exclusion=1e-2):
    """Kernel and ``g = (f - R) / kernel`` on a real ``grid``.

    ``poles`` lists ``(location, multiplicity)`` pairs of ``f`` inside the
    interval. Grid points closer than ``exclusion * (b - a)`` to a node, the
    origin or a root of ``D Q`` are marked invalid and get ``g = nan``.
    """
    grid = np.asarray(grid, dtype=float)
    fv = np.asarray(f_values, dtype=complex)
    if fv.shape != grid.shape:
        raise InputError("f_values must match the grid")
    if model.nodes is None:
        raise InputError("model does not record its interpolation nodes")
    nodes = np.asarray(model.nodes, dtype=complex)
    if interval is None:
        interval = (float(grid.min()), float(grid.max()))
    a, b = interval
    num, den, n = _full_polys(model)
    if q_coeffs is None:
        Q = default_q(model, den, n, interval, poles)
    else:
        Q = rational.trim(np.asarray(q_coeffs, dtype=complex))
        if len(Q) != n:
            raise DegreeMismatch("Q has degree %d, expected %d" % (len(Q) - 1, n - 1))

    t = grid.astype(complex)
    D = P.polyval(t, den)
    with np.errstate(divide="ignore", invalid="ignore"):
        kern = t**n * ps.factor_product(nodes, t) / (factorial(n + nodes.size) * D * P.polyval(t, Q))
    singular = [0.0] + list(nodes)
    for poly in (den, Q):
        if len(rational.trim(poly)) > 1:
            singular += list(rational.poly_roots(poly))
    singular = np.array(singular, dtype=complex)
    dist = np.min(np.abs(t[:, None] - singular[None, :]), axis=1)
    valid = dist > exclusion * (b - a)
    with np.errstate(divide="ignore", invalid="ignore"):
        g = np.where(valid, (fv - P.polyval(t, num) / D) / kern, np.nan)
    return ErrorKernelReport(grid, kern, g, Q, valid)
