"""Piecewise Padé-type interpolation sharing one expansion point.

Every piece is fitted from the same series at the junction, so all pieces
agree with ``f`` (and with each other) in value and derivatives there.
"""
from dataclasses import dataclass
from math import factorial

import numpy as np

from .. import barycentric as bary
from .. import rational
from ..errors import InputError
from ..linsolve import solved_system_condition


@dataclass(frozen=True)
class Piece:
    interval: tuple
    nodes: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class PiecewiseResult:
    pieces: list
    models: list
    conditions: list
    taylor: np.ndarray        # one row of junction Taylor coefficients per piece
    derivatives: np.ndarray   # same, times j!
    max_disagreement: float
    center: float = 0.0

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        flat = t.ravel()
        out = np.empty(flat.shape, dtype=complex)
        for idx, x in enumerate(flat):
            dist = [max(pc.interval[0] - x, x - pc.interval[1], 0.0) for pc in self.pieces]
            out[idx] = self.models[int(np.argmin(dist))](x - self.center)
        out = out.reshape(t.shape)
        return out if out.ndim else complex(out)


def piecewise_fit(pieces, series, k, mode="rational", scaled=False, center=0.0, rcond=None):
    """Fit one interpolant per piece about ``center``.

    ``series`` holds the Taylor coefficients at ``center``; nodes are given in
    the original variable. Condition numbers are those of the systems as
    solved (normal equations for rectangular ones).
    """
    if not pieces:
        raise InputError("at least one piece is required")
    models, conds = [], []
    for pc in pieces:
        lo, hi = pc.interval
        tau = np.asarray(pc.nodes, dtype=complex)
        if np.any(tau.real < lo) or np.any(tau.real > hi):
            raise InputError("piece nodes must lie inside their interval")
        shifted = tau - center
        if mode == "rational":
            A, _ = rational.build_system(series, shifted, pc.values, k, k, scaled)
            model = rational.fit(series, shifted, pc.values, k, k, scaled, rcond)
        elif mode == "barycentric":
            model = bary.fit_weights(series, shifted, pc.values, rcond=rcond)
            M = bary.weight_matrix(series, shifted, pc.values)
            A = M[:, 1:]
        else:
            raise InputError("unknown mode %r" % mode)
        models.append(model)
        conds.append(solved_system_condition(A) if A.size else 1.0)

    order = k + 1 if mode == "rational" else min(bary.contact_order(m) for m in models)
    taylor = np.array([m.taylor(order + 2)[:order] for m in models])
    fact = np.array([float(factorial(j)) for j in range(order)])
    derivs = taylor * fact
    scale = np.maximum(np.max(np.abs(taylor), axis=0), 1.0)
    spread = np.max(np.abs(taylor - taylor[0]) / scale) if len(models) > 1 else 0.0
    return PiecewiseResult(list(pieces), models, conds, taylor, derivs, float(spread), center)
