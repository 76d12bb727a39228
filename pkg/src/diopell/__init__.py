"""diopell: exact solving of a*x^2 - b*y^2 = c over the integers and naturals.

Finite regimes (a*b a perfect square, definite forms, zero coefficients) are
enumerated completely; the Pell regime (a*b nonsquare) reports infinite
solution families grown from found seeds, without ever claiming the families
exhaust the solution set.
"""

from .core import (
    Completeness,
    Domain,
    Equation,
    FamilyDescriptor,
    FamilyKind,
    Line,
    SolutionKind,
    SolutionPair,
    SolutionSet,
)
from .diffsq import diffsq_solvable, parity_splits, solve_diff_squares
from .intkit import Factorization, divisor_pairs, divisors, factorize, is_perfect_square, isqrt
from .oracle import brute_force, pell_brute_force
from .pell import (
    ContinuedFractionExpansion,
    PellSolution,
    cf_sqrt,
    convergents,
    fundamental_solution,
    pell_stream,
)
from .solver import (
    DEFAULT_SEARCH_BOUND,
    Classification,
    EquationClass,
    NormalizedEquation,
    classify,
    find_particular_solution,
    iter_seed_solutions,
    normalize,
    pell_lift_family,
    scaled_pell_family,
    solve,
    solve_perfect_square_case,
)

__version__ = "0.1.0"

__all__ = [
    "Completeness",
    "Domain",
    "Equation",
    "FamilyDescriptor",
    "FamilyKind",
    "Line",
    "SolutionKind",
    "SolutionPair",
    "SolutionSet",
    "diffsq_solvable",
    "parity_splits",
    "solve_diff_squares",
    "Factorization",
    "divisor_pairs",
    "divisors",
    "factorize",
    "is_perfect_square",
    "isqrt",
    "brute_force",
    "pell_brute_force",
    "ContinuedFractionExpansion",
    "PellSolution",
    "cf_sqrt",
    "convergents",
    "fundamental_solution",
    "pell_stream",
    "DEFAULT_SEARCH_BOUND",
    "Classification",
    "EquationClass",
    "NormalizedEquation",
    "classify",
    "find_particular_solution",
    "iter_seed_solutions",
    "normalize",
    "pell_lift_family",
    "scaled_pell_family",
    "solve",
    "solve_perfect_square_case",
    "__version__",
]
