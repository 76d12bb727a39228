"""The Pell engine for u^2 - d*v^2 = 1 with d a positive nonsquare.

The route is the classical one: the continued fraction of sqrt(d) is exactly
periodic after its first term, its convergents h_k/k_k are the best rational
approximations to sqrt(d), and the convergent just before the period closes
(one full period for even period length, two for odd) gives the fundamental
solution.  All further solutions follow from the multiplication rule
    u' = u1*u + d*v1*v,   v' = u1*v + v1*u.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import cycle, islice
from typing import Iterator

from .intkit import is_perfect_square, isqrt

__all__ = [
    "ContinuedFractionExpansion",
    "PellSolution",
    "cf_sqrt",
    "convergents",
    "fundamental_solution",
    "pell_stream",
]


@dataclass(frozen=True)
class ContinuedFractionExpansion:
    """sqrt(d) = [a0; period repeated forever], d a positive nonsquare."""

    d: int
    a0: int
    period: tuple[int, ...]

    def quotients(self) -> Iterator[int]:
        """a0 followed by the periodic block, unbounded."""
        yield self.a0
        yield from cycle(self.period)


@dataclass(frozen=True)
class PellSolution:
    """u^2 - d*v^2 = 1; index 0 is (1, 0), index 1 the fundamental."""

    d: int
    u: int
    v: int
    index: int


def _require_pell_modulus(d: int) -> None:
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if is_perfect_square(d) is not None:
        raise ValueError(f"d must not be a perfect square, got {d}")


def cf_sqrt(d: int) -> ContinuedFractionExpansion:
    """Exact periodic continued fraction of sqrt(d).

    Runs the integer surd recurrence
        m' = a*q - m,   q' = (d - m'*m') // q,   a' = (a0 + m') // q'
    from (m, q, a) = (0, 1, a0).  The division for q' is always exact.  The
    period is closed when the state (m, q) first returns to its value at the
    start of the periodic part; keying on the state rather than on repeated
    quotients is what makes the detection sound.
    """
    _require_pell_modulus(d)
    a0 = isqrt(d)
    m, q, a = 0, 1, a0
    first: tuple[int, int] | None = None
    period: list[int] = []
    while True:
        m = a * q - m
        q = (d - m * m) // q
        if first is None:
            first = (m, q)
        elif (m, q) == first:
            break
        a = (a0 + m) // q
        period.append(a)
    return ContinuedFractionExpansion(d, a0, tuple(period))


def convergents(expansion: ContinuedFractionExpansion) -> Iterator[tuple[int, int]]:
    """Convergent pairs (h_k, k_k), unbounded.

    Two-term recurrence h_k = a_k*h_{k-1} + h_{k-2} (and the same for k_k),
    seeded with h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1.
    """
    h_prev, h_prev2 = 1, 0
    k_prev, k_prev2 = 0, 1
    for a in expansion.quotients():
        h_prev, h_prev2 = a * h_prev + h_prev2, h_prev
        k_prev, k_prev2 = a * k_prev + k_prev2, k_prev
        yield h_prev, k_prev


def fundamental_solution(d: int) -> PellSolution:
    """The least solution of u^2 - d*v^2 = 1 with v >= 1.

    For period length r the answer is convergent r-1 when r is even and
    convergent 2r-1 when r is odd (the odd case squares away the -1 that a
    single period produces).
    """
    expansion = cf_sqrt(d)
    r = len(expansion.period)
    target = r - 1 if r % 2 == 0 else 2 * r - 1
    u, v = next(islice(convergents(expansion), target, None))
    if u * u - d * v * v != 1:
        raise AssertionError(f"convergent ({u}, {v}) fails the identity for d={d}")
    return PellSolution(d, u, v, 1)


def pell_stream(d: int) -> Iterator[PellSolution]:
    """All solutions in order: (1, 0), the fundamental, then the recurrence.

    Strictly increasing in u and in v from index 1 on; every emitted pair
    satisfies the identity exactly.
    """
    fundamental = fundamental_solution(d)
    u1, v1 = fundamental.u, fundamental.v
    u, v, index = 1, 0, 0
    while True:
        yield PellSolution(d, u, v, index)
        u, v = u1 * u + d * v1 * v, u1 * v + v1 * u
        index += 1
