"""Exact arithmetic substrate: rationals, sparse polynomials, linear solving,
and small LP feasibility, all over fractions.Fraction."""

from .scalars import GaussRat, Rat, rat, I
from .mpoly import (
    MPoly,
    NotDivisible,
    UnboundVariable,
    VARIABLES,
    elementary_symmetric,
    exact_divide,
    mpoly_arith,
    substitute,
)
from .parse import PolySyntaxError, UnknownVariable, parse_poly
from .linsolve import (
    LinInconsistency,
    LinSolution,
    LinSystem,
    determinant,
    matrix_inverse,
    nullspace,
    rank,
    solve_linear,
)
from .lp import LpFeasibility, LpInfeasible, LpPoint, lp_feasible

__all__ = [
    "GaussRat", "Rat", "rat", "I",
    "MPoly", "NotDivisible", "UnboundVariable", "VARIABLES",
    "elementary_symmetric", "exact_divide", "mpoly_arith", "substitute",
    "PolySyntaxError", "UnknownVariable", "parse_poly",
    "LinInconsistency", "LinSolution", "LinSystem",
    "determinant", "matrix_inverse", "nullspace", "rank", "solve_linear",
    "LpFeasibility", "LpInfeasible", "LpPoint", "lp_feasible",
]
