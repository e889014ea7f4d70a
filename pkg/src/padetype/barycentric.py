"""Padé-type barycentric interpolants.

The model

    R(t) = sum_i w_i f_i / (t - tau_i)  /  sum_i w_i / (t - tau_i)

interpolates at every node for any nonzero weights. Here the weights are
chosen (with ``w_0 = 1``) so that the expansion of ``R`` at the origin agrees
with a given power series through ``t**(k-1)``.
"""
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
import scipy.linalg

from . import series as ps
from .errors import DegenerateDenominator, InputError
from .linsolve import SolveReport, pinv_solve
from .nodes import check_factors, check_nodes
from .rational import POLE_EPS, PoleInfo, RationalModel, _signed_inf

WEIGHT_KINDS = ("fitted", "berrut", "shepard", "custom")
NODE_TOL = 1e-13
CANCEL_RTOL = 1e-8


@dataclass(frozen=True)
class BarycentricModel:
    nodes: np.ndarray
    values: np.ndarray
    weights: np.ndarray
    weight_kind: str = "fitted"
    prescribed_zeros: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    prescribed_poles: np.ndarray = field(default_factory=lambda: np.zeros(0, complex))
    report: Optional[SolveReport] = None
    n_coeffs: Optional[int] = None

    def __post_init__(self):
        if self.weight_kind not in WEIGHT_KINDS:
            raise InputError("unknown weight kind %r" % self.weight_kind)

    @property
    def k(self):
        return len(self.nodes) - 1

    @property
    def core_values(self):
        """Node values seen by the barycentric core, ``f_i P(tau_i) / Z(tau_i)``."""
        return (
            self.values
            * ps.factor_product(self.prescribed_poles, self.nodes)
            / ps.factor_product(self.prescribed_zeros, self.nodes)
        )

    def __call__(self, t, node_tol=NODE_TOL):
        return eval_bary(self, t, node_tol)

    def poles(self, real_tol=1e-10):
        return bary_poles(self, real_tol)

    def taylor(self, length):
        return bary_taylor(self, length)

    def to_rational(self):
        return to_rational(self)


def weight_matrix(c, nodes, values, k=None, l=None):
    """Order-of-contact system: entry ``(j, i) = (f_i - S_{j-1}(tau_i)) / tau_i**j``.

    Rows run over ``j = 1..max(k, l)``; coefficients past the ``l`` known
    ones are taken as zero.
    """
    tau, f = check_nodes(nodes, values)
    k = tau.size - 1 if k is None else k
    if tau.size != k + 1:
        raise InputError("degree %d needs %d nodes, got %d" % (k, k + 1, tau.size))
    c = ps.as_series(c)
    l = len(c) if l is None else l
    if l < 1:
        raise InputError("at least one series coefficient is required")
    known = np.zeros(max(k, l), dtype=complex)
    m = min(l, len(c))
    known[:m] = c[:m]
    rows = max(k, l)
    S = ps.partial_sums(known, rows - 1, tau)
    M = np.empty((rows, k + 1), dtype=complex)
    tp = np.ones_like(tau)
    for j in range(1, rows + 1):
        tp = tp * tau
        M[j - 1] = (f - S[j - 1]) / tp
    return M


def fit_weights(c, nodes, values, k=None, l=None, rcond=None):
    """Weights with ``w_0 = 1`` from the order-of-contact system.

    ``l`` (default ``len(c)``) is the number of known coefficients: ``l < k``
    pads with zeros, ``l > k`` gives a least-squares fit of the extra
    conditions.
    """
    tau, f = check_nodes(nodes, values)
    k = tau.size - 1 if k is None else k
    l = len(ps.as_series(c)) if l is None else l
    if k == 0:
        return BarycentricModel(tau, f, np.ones(1, complex), "fitted", n_coeffs=l)
    M = weight_matrix(c, tau, f, k, l)
    report = pinv_solve(M[:, 1:], -M[:, 0], rcond)
    w = np.concatenate([[1.0], report.solution])
    return BarycentricModel(tau, f, w, "fitted", report=report, n_coeffs=l)


def fit_weights_partial(c, nodes, values, k=None, zeros=(), poles=(), l=None, rcond=None):
    """Barycentric fit of ``f P / Z``; the model multiplies back by ``Z / P``."""
    tau, f = check_nodes(nodes, values)
    z, pl = check_factors(tau, zeros, poles)
    ct = ps.transform_for_factors(c, z, pl)
    ft = f * ps.factor_product(pl, tau) / ps.factor_product(z, tau)
    core = fit_weights(ct, tau, ft, k, l, rcond)
    return replace(core, values=f, prescribed_zeros=z, prescribed_poles=pl)


def preset_weights(nodes, values, kind):
    tau, f = check_nodes(nodes, values)
    if kind == "berrut":
        w = (-1.0) ** np.arange(tau.size) + 0j
    elif kind == "shepard":
        # evaluation substitutes w_i = 1/(t - tau_i); stored weights are unused
        w = np.ones(tau.size, dtype=complex)
    else:
        raise InputError("unknown weight preset %r" % kind)
    return BarycentricModel(tau, f, w, kind)


def eval_bary(model, t, node_tol=NODE_TOL):
    """Evaluate at scalar or array ``t``; node queries return the node value."""
    t = np.asarray(t, dtype=complex)
    shape = t.shape
    tv = t.ravel()
    tau = model.nodes
    g = model.core_values
    diff = tv[:, None] - tau[None, :]
    hit = np.abs(diff) <= node_tol * (1 + np.abs(tau))[None, :]
    safe = np.where(hit, 1.0, diff)
    if model.weight_kind == "shepard":
        kern = 1.0 / safe**2
    else:
        kern = model.weights[None, :] / safe
    numer = kern @ g
    denom = kern.sum(axis=1)
    small = np.abs(denom) < POLE_EPS * np.maximum(np.abs(kern).sum(axis=1), 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(small, _signed_inf(numer), numer / np.where(small, 1.0, denom))
    zf = ps.factor_product(model.prescribed_zeros, tv)
    pf = ps.factor_product(model.prescribed_poles, tv)
    at_pole = pf == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(at_pole, _signed_inf(zf), r * zf / np.where(at_pole, 1.0, pf))
    # exact interpolation at the nodes
    idx = np.argmax(hit, axis=1)
    any_hit = hit.any(axis=1)
    r = np.where(any_hit, model.values[idx], r)
    out = r.reshape(shape)
    return out if out.ndim else complex(out)


def _node_polys(tau):
    """Coefficients (increasing degree) of ``L_i(t) = prod_{j != i} (t - tau_j)``."""
    P = np.polynomial.polynomial
    return [P.polyfromroots(np.delete(tau, i)) for i in range(tau.size)]


def to_rational(model):
    """Numerator/denominator polynomials ``sum w_i g_i L_i`` and ``sum w_i L_i``."""
    if model.weight_kind == "shepard":
        raise InputError("Shepard interpolants have t-dependent weights")
    L = np.array(_node_polys(model.nodes), dtype=complex).reshape(model.nodes.size, -1)
    num = (model.weights * model.core_values) @ L
    den = model.weights @ L
    if den[0] != 0:
        num, den = num / den[0], den / den[0]
    return RationalModel(
        num, den, model.prescribed_zeros, model.prescribed_poles
    )


def bary_taylor(model, length):
    """Taylor coefficients at 0 via ``1/(t - tau) = -(1/tau) sum (t/tau)**m``."""
    if model.weight_kind == "shepard":
        raise InputError("Shepard interpolants have t-dependent weights")
    tau = model.nodes
    m = np.arange(length)
    powers = tau[None, :] ** (-(m[:, None] + 1))
    num = -(powers @ (model.weights * model.core_values))
    den = -(powers @ model.weights)
    for z in model.prescribed_zeros:
        num = ps.multiply_linear(num, z)[:length]
    for p in model.prescribed_poles:
        den = ps.multiply_linear(den, p)[:length]
    return ps.taylor_of_rational(num, den, length)


def contact_order(model):
    """Number of Taylor coefficients the fit is built to match: ``min(l, k)``."""
    l = model.n_coeffs if model.n_coeffs is not None else model.k
    return min(l, model.k)


def order_of_contact(model, c, n=None):
    """Max relative mismatch of the first ``n`` Taylor coefficients (default ``min(l, k)``)."""
    n = contact_order(model) if n is None else n
    if n == 0:
        return 0.0
    c = np.asarray(c, dtype=complex)
    taylor = bary_taylor(model, n)
    ref = np.array([ps.coeff(c, i) for i in range(n)])
    scale = max(np.max(np.abs(ref)), 1.0)
    return float(np.max(np.abs(taylor - ref)) / scale)


def denominator_roots(model):
    """Zeros of ``sum_i w_i / (t - tau_i)`` from the arrowhead pencil."""
    w = model.weights
    tau = model.nodes
    if not np.any(w):
        raise DegenerateDenominator("all weights vanish")
    n = tau.size + 1
    E = np.zeros((n, n), dtype=complex)
    E[0, 1:] = w
    E[1:, 0] = 1.0
    E[1:, 1:] = np.diag(tau)
    B = np.eye(n, dtype=complex)
    B[0, 0] = 0.0
    lam = scipy.linalg.eigvals(E, B)
    return lam[np.isfinite(lam)]


def bary_poles(model, real_tol=1e-10, cancel_rtol=CANCEL_RTOL):
    """Poles of the reduced interpolant, prescribed poles appended.

    A denominator root where the numerator also vanishes (relative to the
    size of its terms) is a common factor and is dropped.
    """
    if model.weight_kind == "shepard":
        raise InputError("Shepard interpolants have t-dependent weights")
    out = []
    g = model.core_values
    for r in denominator_roots(model):
        terms = model.weights * g / (r - model.nodes)
        if abs(terms.sum()) <= cancel_rtol * np.abs(terms).sum():
            continue
        out.append(PoleInfo(complex(r), abs(r.imag) <= real_tol))
    for r in model.prescribed_poles:
        out.append(PoleInfo(complex(r), abs(r.imag) <= real_tol, prescribed=True))
    return out


def real_poles(model, real_tol=1e-10, include_prescribed=False):
    return np.array(
        sorted(
            p.location.real
            for p in bary_poles(model, real_tol)
            if p.real and (include_prescribed or not p.prescribed)
        )
    )
