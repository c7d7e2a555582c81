"""Exact arithmetic and calculus in the positional numeral system with radix grossone."""

from .core import G, ONE, ZERO, GrossNumber, GrossTerm, NumberClass, Rational, classify, compare, div, split
from .errors import GrossError
from .expr import PiecewiseFunc, evaluate, format_expr, parse_expr, parse_function
from .numeral import format_number, parse_number
from .ratform import RationalForm, to_rational_form
from .series import ExpSum, ExpTerm, arithmetic_sum, count_points, geometric_sum, repeated_sum
from .topo import Grid, Unit, convert_unit, neighbors, set_continuity
from .deriv import derivative_report, relative_difference, side_derivative

__version__ = "0.1.0"

__all__ = [
    "G",
    "ONE",
    "ZERO",
    "GrossNumber",
    "GrossTerm",
    "NumberClass",
    "Rational",
    "classify",
    "compare",
    "div",
    "split",
    "GrossError",
    "PiecewiseFunc",
    "evaluate",
    "format_expr",
    "parse_expr",
    "parse_function",
    "format_number",
    "parse_number",
    "RationalForm",
    "to_rational_form",
    "ExpSum",
    "ExpTerm",
    "arithmetic_sum",
    "count_points",
    "geometric_sum",
    "repeated_sum",
    "Grid",
    "Unit",
    "convert_unit",
    "neighbors",
    "set_continuity",
    "derivative_report",
    "relative_difference",
    "side_derivative",
]
