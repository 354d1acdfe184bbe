"""Exact multivariate Lagrange, Hermite and Birkhoff interpolation.

The heavy lifting happens in the C++ extension; this package re-exports
its public surface.
"""

from gbinterp._core import (
    GroebnerBasis,
    Node,
    ParseError,
    Polynomial,
    Solution,
    buchberger,
    interpolate,
    intersect_ideals,
    normal_form,
    solve_problem,
    staircase,
    verify,
)

__all__ = [
    "GroebnerBasis",
    "Node",
    "ParseError",
    "Polynomial",
    "Solution",
    "buchberger",
    "interpolate",
    "intersect_ideals",
    "normal_form",
    "solve_problem",
    "staircase",
    "verify",
]

__version__ = "0.1.0"
