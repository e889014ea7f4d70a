"""Interpolation node checks and the node families used in the experiments."""
import numpy as np

from .errors import DuplicateNodes, InputError, NodeAtOrigin, PrescribedFactorAtNode


def check_nodes(nodes, values=None, allow_origin=False):
    tau = np.array(nodes, dtype=complex).ravel()
    if tau.size == 0:
        raise InputError("at least one interpolation node is required")
    if not np.all(np.isfinite(tau)):
        raise InputError("nodes must be finite")
    if not allow_origin and np.any(tau == 0):
        raise NodeAtOrigin("interpolation nodes must be nonzero")
    if len(np.unique(tau)) != tau.size:
        raise DuplicateNodes("interpolation nodes must be pairwise distinct")
    if values is None:
        return tau
    f = np.array(values, dtype=complex).ravel()
    if f.size != tau.size:
        raise InputError("%d values for %d nodes" % (f.size, tau.size))
    if not np.all(np.isfinite(f)):
        raise InputError("values must be finite")
    return tau, f


def check_factors(nodes, zeros, poles):
    zeros = np.array(zeros, dtype=complex).ravel()
    poles = np.array(poles, dtype=complex).ravel()
    for name, roots in (("zero", zeros), ("pole", poles)):
        if np.any(roots == 0):
            raise InputError("prescribed %ss must be nonzero" % name)
        if np.any(np.isin(roots, nodes)):
            raise PrescribedFactorAtNode("a prescribed %s coincides with a node" % name)
    return zeros, poles


def equidistant(a, b, n):
    """``n`` equally spaced points on ``[a, b]``, endpoints included."""
    if n == 1:
        pts = np.array([0.5 * (a + b)])
    else:
        pts = np.linspace(a, b, n)
    if np.any(pts == 0):
        raise NodeAtOrigin("equidistant grid on [%g, %g] with %d points hits 0" % (a, b, n))
    return pts


def roots_of_unity(n):
    return np.exp(2j * np.pi * np.arange(n) / n)


def chebyshev_zeros(n):
    """Zeros of ``T_n`` on ``[-1, 1]``."""
    pts = np.cos((2 * np.arange(n) + 1) * np.pi / (2 * n))
    # odd n puts a zero at the origin (up to rounding)
    if np.any(np.abs(pts) < 1e-14):
        raise NodeAtOrigin("T_%d vanishes at the origin" % n)
    return pts
