"""Exact arithmetic: polynomials, rational functions, series, linear solving."""

from .linsolve import bareiss_solve, solve_linear_system
from .polynomial import Polynomial, Rational, Ring, as_rational, const, var
from .ratfun import RationalFunction, as_fraction, field_ops, ratfun_eq, substitute
from .series import SeriesPrefix, series_in_t
from .variables import (
    Role,
    S,
    T,
    VariableName,
    end_one,
    end_two,
    final,
    pair,
    parse_variable,
    single,
    triple,
)

__all__ = [
    "Polynomial",
    "Rational",
    "RationalFunction",
    "Ring",
    "Role",
    "S",
    "SeriesPrefix",
    "T",
    "VariableName",
    "as_fraction",
    "as_rational",
    "bareiss_solve",
    "const",
    "end_one",
    "end_two",
    "field_ops",
    "final",
    "pair",
    "parse_variable",
    "ratfun_eq",
    "series_in_t",
    "single",
    "solve_linear_system",
    "substitute",
    "triple",
    "var",
]
