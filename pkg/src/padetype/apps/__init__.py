from .accelerate import accelerate
from .errorkernel import ErrorKernelReport, error_kernel
from .laplace import (
    LaplaceRational,
    evaluate_inverse,
    invert_from_interpolant,
    longman_sharir_invert,
    mapped_transform,
)
from .piecewise import Piece, PiecewiseResult, piecewise_fit

__all__ = [
    "accelerate",
    "ErrorKernelReport",
    "error_kernel",
    "LaplaceRational",
    "evaluate_inverse",
    "invert_from_interpolant",
    "longman_sharir_invert",
    "mapped_transform",
    "Piece",
    "PiecewiseResult",
    "piecewise_fit",
]
