"""Sequence extrapolation with Padé-type interpolants.

For ``S_n = f(tau_n)`` with ``tau_n -> tau_inf``, each window of consecutive
samples is interpolated and the interpolant is evaluated at ``tau_inf``.
"""
import numpy as np

from .. import barycentric as bary
from .. import rational
from ..errors import InputError


def accelerate(samples, nodes, tau_inf, k, series, mode="rational", scaled=True, rcond=None):
    """Extrapolated values ``T_k^(n)``, one per sliding window.

    Rational windows hold ``k`` samples, barycentric windows ``k + 1``.
    """
    S = np.asarray(samples, dtype=complex)
    tau = np.asarray(nodes, dtype=complex)
    if S.shape != tau.shape:
        raise InputError("samples and nodes differ in length")
    if tau_inf == 0 or not np.isfinite(tau_inf):
        raise InputError("tau_inf must be finite and nonzero")
    width = k if mode == "rational" else k + 1
    if mode not in ("rational", "barycentric"):
        raise InputError("unknown mode %r" % mode)
    if width < 1 or tau.size < width:
        raise InputError("need at least %d samples" % width)
    out = []
    for n in range(tau.size - width + 1):
        win = slice(n, n + width)
        if mode == "rational":
            model = rational.fit(series, tau[win], S[win], k, k, scaled, rcond)
        else:
            model = bary.fit_weights(series, tau[win], S[win], k, rcond=rcond)
        out.append(model(tau_inf))
    return np.array(out)
