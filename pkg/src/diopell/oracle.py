"""Brute-force enumerators used to cross-check the constructive solvers.

Deliberately independent of the factorization and continued-fraction
machinery: nothing here is shared with the solver paths except exact integer
arithmetic and a squareness test, so agreement between the two is evidence
rather than tautology.
"""

from __future__ import annotations

import math

from .core import Domain, Equation, SolutionPair
from .pell import PellSolution

__all__ = ["brute_force", "pell_brute_force"]


def brute_force(eq: Equation, bound: int, domain: Domain = Domain.INTEGERS) -> list[SolutionPair]:
    """Every solution with |x| <= bound and |y| <= bound (0 <= x, y for N).

    Scans x exhaustively; for each x the residual a*x^2 - c must equal b*y^2,
    which pins |y| down to at most one candidate via an exact square root.
    Each hit is re-verified against the equation before being returned.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    lo = 0 if domain is Domain.NATURALS else -bound
    found: set[SolutionPair] = set()
    for x in range(lo, bound + 1):
        residual = eq.a * x * x - eq.c
        if eq.b == 0:
            if residual == 0:
                found.update(SolutionPair(x, y) for y in range(lo, bound + 1))
            continue
        quotient, remainder = divmod(residual, eq.b)
        if remainder != 0 or quotient < 0:
            continue
        y = math.isqrt(quotient)
        if y * y != quotient or y > bound:
            continue
        candidates = [y] if domain is Domain.NATURALS else [y, -y]
        found.update(SolutionPair(x, yy) for yy in candidates)
    result = sorted(found)
    for pair in result:
        if not eq.is_solution(pair):
            raise AssertionError(f"oracle self-check failed on {tuple(pair)} for {eq}")
    return result


def pell_brute_force(d: int, v_bound: int) -> PellSolution | None:
    """Minimal (u, v) with 1 <= v <= v_bound and d*v^2 + 1 square, if any."""
    if d < 1:
        raise ValueError("d must be positive")
    for v in range(1, v_bound + 1):
        t = d * v * v + 1
        u = math.isqrt(t)
        if u * u == t:
            return PellSolution(d, u, v, 1)
    return None
