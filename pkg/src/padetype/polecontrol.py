"""Spurious pole detection and removal.

A spurious real pole ``p`` is removed by re-fitting with ``(p, f(p))`` as an
interpolation condition in place of one of the original nodes.
"""
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from . import barycentric as bary
from . import rational
from .errors import InputError, IterationBudgetExceeded, ValueUnavailable

METHODS = ("roots", "sign_change", "threshold")


@dataclass(frozen=True)
class PoleReport:
    location: complex
    method: str
    bracket: Optional[tuple] = None
    residual_value: float = np.inf

    def __post_init__(self):
        if self.method not in METHODS:
            raise InputError("unknown detection method %r" % self.method)
        if (self.bracket is None) != (self.method == "roots"):
            raise InputError("a bracket is required exactly for grid-based reports")
        if self.bracket is not None and not self.bracket[0] < self.bracket[1]:
            raise InputError("bracket must satisfy lo < hi")


@dataclass(frozen=True)
class FitProblem:
    """Everything needed to (re)build an interpolant.

    ``func`` supplies ``f`` at new points; without it, ``table`` (a mapping
    from point to value) is consulted.
    """

    series: np.ndarray
    nodes: np.ndarray
    values: np.ndarray
    k: int
    mode: str = "rational"
    func: Optional[Callable] = None
    table: dict = field(default_factory=dict)
    zeros: tuple = ()
    poles: tuple = ()
    scaled: bool = True
    rcond: Optional[float] = None

    def fit(self):
        if self.mode == "rational":
            return rational.fit_partial(
                self.series, self.nodes, self.values, self.k,
                self.zeros, self.poles, self.scaled, self.rcond,
            )
        if self.mode == "barycentric":
            return bary.fit_weights_partial(
                self.series, self.nodes, self.values, self.k,
                self.zeros, self.poles, rcond=self.rcond,
            )
        raise InputError("unknown mode %r" % self.mode)

    def value_at(self, t):
        if self.func is not None:
            return complex(self.func(t))
        for key, val in self.table.items():
            if abs(key - t) <= 1e-12 * (1 + abs(t)):
                return complex(val)
        raise ValueUnavailable("no value of f available at %r" % (t,))

    def with_node(self, index, t):
        nodes = np.array(self.nodes, dtype=complex)
        values = np.array(self.values, dtype=complex)
        if np.any(np.abs(nodes - t) <= 1e-12 * (1 + abs(t))):
            raise InputError("pole location %r is already a node" % (t,))
        nodes[index] = t
        values[index] = self.value_at(t)
        return replace(self, nodes=nodes, values=values)


def _is_coefficient_model(model):
    return isinstance(model, rational.RationalModel)


def detect_poles(model, interval, grid_n=500, threshold=None, real_tol=1e-10):
    """Real poles of ``model`` inside ``interval``.

    Coefficient models report denominator roots. Barycentric models are
    scanned on a uniform grid: a cell is flagged when the value changes sign
    with both endpoint magnitudes above ``threshold``, or when ``|R|`` has a
    local maximum above ``threshold`` (default ``10 max|f_i|``).
    """
    a, b = interval
    if not a < b:
        raise InputError("interval must satisfy a < b")
    if grid_n < 2:
        raise InputError("grid_n must be at least 2")
    if _is_coefficient_model(model):
        out = []
        for r in rational.real_poles(model, real_tol):
            if a <= r <= b:
                out.append(PoleReport(complex(r), "roots"))
        return out

    if threshold is None:
        threshold = 10 * float(np.max(np.abs(model.values)))
    grid = np.linspace(a, b, grid_n)
    vals = np.real(bary.eval_bary(model, grid))
    mag = np.abs(vals)
    out = []
    flagged = set()
    for i in range(grid_n - 1):
        lo, hi = vals[i], vals[i + 1]
        if np.sign(lo) != np.sign(hi) and min(mag[i], mag[i + 1]) > threshold:
            out.append(
                PoleReport(complex(0.5 * (grid[i] + grid[i + 1])), "sign_change",
                           (float(grid[i]), float(grid[i + 1])), float(max(mag[i], mag[i + 1])))
            )
            flagged.update((i, i + 1))
    for i in range(grid_n):
        if i in flagged or not mag[i] > threshold:
            continue
        left = mag[i - 1] if i > 0 else -np.inf
        right = mag[i + 1] if i < grid_n - 1 else -np.inf
        if mag[i] >= left and mag[i] >= right:
            lo = grid[max(i - 1, 0)]
            hi = grid[min(i + 1, grid_n - 1)]
            out.append(PoleReport(complex(grid[i]), "threshold", (float(lo), float(hi)), float(mag[i])))
    out.sort(key=lambda r: r.location.real)
    return out


def replacement_point(report):
    """Where to impose the interpolation condition: exact root or bracket midpoint."""
    if report.method == "roots":
        return report.location.real if abs(report.location.imag) == 0 else report.location
    lo, hi = report.bracket
    return 0.5 * (lo + hi)


def _choose_index(problem, point, policy, used):
    nodes = np.asarray(problem.nodes)
    candidates = [i for i in range(nodes.size) if i not in used]
    if not candidates:
        raise IterationBudgetExceeded("every original node has already been replaced")
    if policy == "first":
        return candidates[0]
    if policy == "nearest":
        return min(candidates, key=lambda i: abs(nodes[i] - point))
    raise InputError("unknown replacement policy %r" % policy)


def remove_pole(problem, report, policy="first", used=()):
    """Re-fit with the pole location imposed as a node.

    Returns ``(model, new_problem, replaced_index)``.
    """
    if report is None:
        raise InputError("no pole to remove")
    point = replacement_point(report)
    idx = _choose_index(problem, point, policy, set(used))
    new = problem.with_node(idx, point)
    return new.fit(), new, idx


@dataclass(frozen=True)
class RemovalStep:
    report: PoleReport
    replaced_index: int
    old_node: complex
    new_node: complex


def remove_poles_iterate(problem, interval, max_iter=10, policy="first",
                         grid_n=500, threshold=None):
    """Detect and remove real poles until none remain in ``interval``.

    Each step replaces a node that has not been replaced before, so poles
    removed earlier stay imposed. Returns ``(model, problem, history)``.
    """
    if max_iter < 1:
        raise InputError("max_iter must be at least 1")
    model = problem.fit()
    history = []
    used = []
    for _ in range(max_iter):
        reports = detect_poles(model, interval, grid_n, threshold)
        if not reports:
            return model, problem, history
        report = reports[0]
        try:
            new_model, new_problem, idx = remove_pole(problem, report, policy, used)
        except IterationBudgetExceeded as exc:
            raise IterationBudgetExceeded(str(exc), history, model) from exc
        history.append(
            RemovalStep(report, idx, complex(problem.nodes[idx]), complex(new_problem.nodes[idx]))
        )
        used.append(idx)
        model, problem = new_model, new_problem
    if detect_poles(model, interval, grid_n, threshold):
        raise IterationBudgetExceeded(
            "poles remain after %d removals" % max_iter, history, model
        )
    return model, problem, history
