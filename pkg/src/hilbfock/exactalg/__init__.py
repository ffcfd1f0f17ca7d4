"""Exact coefficient arithmetic: polynomials, rational functions, series, linear algebra."""

from .linalg import SolveResult, linear_solve, rank
from .mpoly import MPoly, format_coefficient, format_poly, parse_poly, poly_var, poly_vars
from .ratfun import RatFun
from .series import (
    Series,
    format_series,
    pochhammer,
    qpochhammer_inf,
    series_exp,
    series_from_poly,
    series_log,
    series_pow,
)

# Laurent polynomials in one or more auxiliary variables are MPoly values
# with possibly negative exponents.
LaurentPoly = MPoly

__all__ = [
    "LaurentPoly",
    "MPoly",
    "RatFun",
    "Series",
    "SolveResult",
    "format_coefficient",
    "format_poly",
    "format_series",
    "linear_solve",
    "parse_poly",
    "pochhammer",
    "poly_var",
    "poly_vars",
    "qpochhammer_inf",
    "rank",
    "series_exp",
    "series_from_poly",
    "series_log",
    "series_pow",
]
