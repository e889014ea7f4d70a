"""Exception types raised by the fitting routines."""


class PadeTypeError(Exception):
    """Base class for every error raised by this package."""


class InputError(PadeTypeError, ValueError):
    """Invalid problem data (bad nodes, degrees, prescribed factors)."""


class ZeroShift(InputError):
    pass


class SingularAtOrigin(PadeTypeError, ZeroDivisionError):
    pass


class NodeAtOrigin(InputError):
    pass


class DuplicateNodes(InputError):
    pass


class PrescribedFactorAtNode(InputError):
    pass


class DegreeViolation(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class NonDecaying(InputError):
    pass


class NumericalFailure(PadeTypeError, ArithmeticError):
    """A dense decomposition failed to converge."""


class DegenerateDenominator(NumericalFailure):
    pass


class ValueUnavailable(PadeTypeError, LookupError):
    pass


class IterationBudgetExceeded(PadeTypeError, RuntimeError):
    """Pole removal did not terminate; ``history`` keeps what was done."""

    def __init__(self, message, history=None, model=None):
        super().__init__(message)
        self.history = list(history or [])
        self.model = model
