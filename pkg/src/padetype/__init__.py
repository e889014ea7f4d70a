"""Rational interpolants with a Padé-type property at the origin."""
from . import apps, barycentric, chebyshev, functions, linsolve, nodes, polecontrol, rational, series
from .barycentric import BarycentricModel, fit_weights, fit_weights_partial, preset_weights
from .chebyshev import ChebyshevModel, fit_cheb
from .errors import *  # noqa: F401,F403
from .linsolve import SolveReport, condition_number, pinv_solve
from .polecontrol import FitProblem, PoleReport, detect_poles, remove_pole, remove_poles_iterate
from .rational import RationalModel, fit, fit_partial

__version__ = "0.1.0"
