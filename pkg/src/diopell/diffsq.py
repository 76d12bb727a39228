"""Complete solver for x^2 - y^2 = c over the integers and the naturals.

Writing the left side as (x - y)(x + y) turns each solution into a factor
split c = c1*c2 with c1 = x - y and c2 = x + y, and back:

    x = (c1 + c2) / 2,   y = (c2 - c1) / 2.

x and y are integers exactly when c1 and c2 have equal parity, which is
possible iff c is odd (two odd factors) or divisible by 4 (two even factors).
An even c that is not a multiple of 4 therefore has no solutions at all.

Enumerating the equal-parity divisor pairs of |c| yields one nonnegative
solution per split; the full integer solution set is its closure under the
sign flips x -> -x and y -> -y, and the natural solution set is its
intersection with the nonnegative quadrant.  For c < 0 solve y^2 - x^2 = |c|
and swap the coordinates back.
"""

from __future__ import annotations

from .core import Domain, Line, SolutionPair, SolutionSet
from .intkit import divisor_pairs

__all__ = ["diffsq_solvable", "parity_splits", "solve_diff_squares"]


def diffsq_solvable(c: int) -> bool:
    """True iff x^2 - y^2 = c has an integer solution: c odd or 4 | c."""
    return c % 2 == 1 or c % 4 == 0


def parity_splits(n: int) -> list[tuple[int, int]]:
    """Equal-parity pairs (c1, c2) with 0 < c1 <= c2 and c1*c2 = n; n >= 1."""
    return [(c1, c2) for c1, c2 in divisor_pairs(n) if (c2 - c1) % 2 == 0]


def solve_diff_squares(c: int, domain: Domain = Domain.INTEGERS) -> SolutionSet:
    """The complete solution set of x^2 - y^2 = c in the given domain.

    For c != 0 the result is finite (possibly empty).  c = 0 degenerates to
    x^2 = y^2, reported as the line x = y over the naturals and the pair of
    lines x = +-y over the integers.
    """
    if c == 0:
        origin = SolutionPair(0, 0)
        if domain is Domain.NATURALS:
            return SolutionSet.degenerate_line(
                [Line(origin, SolutionPair(1, 1))],
                "x = y (all (t, t) with t >= 0)",
            )
        return SolutionSet.degenerate_line(
            [Line(origin, SolutionPair(1, 1)), Line(origin, SolutionPair(1, -1))],
            "x = +-y (all (t, t) and (t, -t) with t in Z)",
        )
    if not diffsq_solvable(c):
        return SolutionSet.empty("c ≡ 2 (mod 4): a solution needs c odd or divisible by 4")

    base = []
    for c1, c2 in parity_splits(abs(c)):
        x, y = (c1 + c2) // 2, (c2 - c1) // 2
        base.append((x, y) if c > 0 else (y, x))
    if domain is Domain.NATURALS:
        return SolutionSet.finite(base)
    closed = {(sx * x, sy * y) for x, y in base for sx in (1, -1) for sy in (1, -1)}
    return SolutionSet.finite(closed)
