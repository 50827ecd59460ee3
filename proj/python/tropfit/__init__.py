"""Max-plus polynomial and rational function fitting."""

from ._core import (
    InputError,
    alternating_solve,
    best_approx_solve,
    evaluate,
    fit_polynomial,
    fit_rational,
    fixture,
    min_poly,
)

__all__ = [
    "InputError",
    "alternating_solve",
    "best_approx_solve",
    "evaluate",
    "fit_polynomial",
    "fit_rational",
    "fixture",
    "min_poly",
]
__version__ = "0.1.0"
