"""Jacobi-Stirling numbers of both kinds: triangles, combinatorial models,
bijections and generating-function checks, all in exact arithmetic."""

from .exactmath import BiSeries, IntPoly, poly_eval, poly_mul, rebase_shift, series_compose
from .triangles import (
    build_central_even,
    build_central_odd,
    build_js_first,
    build_js_second,
    build_stirling,
    build_triangle,
    coeffs,
    explicit_js,
    legendre_stirling,
)

__version__ = "0.1.0"

__all__ = [
    "BiSeries",
    "IntPoly",
    "poly_eval",
    "poly_mul",
    "rebase_shift",
    "series_compose",
    "build_central_even",
    "build_central_odd",
    "build_js_first",
    "build_js_second",
    "build_stirling",
    "build_triangle",
    "coeffs",
    "explicit_js",
    "legendre_stirling",
]
