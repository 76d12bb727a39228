"""Shared value types: equations, solution pairs, families, and result sets.

Everything here is an immutable plain value; all arithmetic is exact Python
integer arithmetic. Nothing in this module computes anything expensive, so it
can be imported by every other module without dependency cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Iterator, NamedTuple


class Domain(Enum):
    """Where solutions are sought: all integers, or nonnegative integers."""

    INTEGERS = "z"
    NATURALS = "n"


class SolutionPair(NamedTuple):
    """An (x, y) pair; ordinary tuple ordering gives lexicographic sorting."""

    x: int
    y: int


@dataclass(frozen=True)
class Equation:
    """The equation a*x^2 - b*y^2 = c with the signs taken literally."""

    a: int
    b: int
    c: int

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x - self.b * y * y

    def is_solution(self, pair: tuple[int, int]) -> bool:
        x, y = pair
        return self.evaluate(x, y) == self.c

    def __str__(self) -> str:
        op, b = ("-", self.b) if self.b >= 0 else ("+", -self.b)
        return f"{self.a}x^2 {op} {b}y^2 = {self.c}"


@dataclass(frozen=True)
class Line:
    """The solution line base + t*direction, t ranging over the domain."""

    base: SolutionPair
    direction: SolutionPair

    def __post_init__(self) -> None:
        if self.direction == (0, 0):
            raise ValueError("line direction must be nonzero")

    def point(self, t: int) -> SolutionPair:
        return SolutionPair(
            self.base.x + t * self.direction.x,
            self.base.y + t * self.direction.y,
        )


class FamilyKind(Enum):
    SCALED_PELL = "scaled-pell"
    PELL_LIFT = "pell-lift"


@dataclass(frozen=True)
class FamilyDescriptor:
    """Finite generator data for an infinite family of solutions.

    Term n is
        x_n = x0*u_n + b*y0*v_n
        y_n = y0*u_n + a*x0*v_n
    where (x0, y0) is the seed, (a, b) come from the equation, and (u_n, v_n)
    walks the solutions of u^2 - pell_modulus*v^2 = 1 starting at (1, 0) and
    advancing by the stored fundamental solution.  Term 0 is the seed itself.
    The identity
        a*x_n^2 - b*y_n^2 = (a*x0^2 - b*y0^2) * (u_n^2 - a*b*v_n^2)
    makes every term an exact solution, so the descriptor is enough for a
    reader to continue the sequence by hand.
    """

    kind: FamilyKind
    equation: Equation
    seed: SolutionPair
    pell_modulus: int
    fundamental: tuple[int, int]

    def __post_init__(self) -> None:
        if self.pell_modulus != self.equation.a * self.equation.b:
            raise ValueError("pell modulus must equal a*b of the equation")
        u1, v1 = self.fundamental
        if u1 * u1 - self.pell_modulus * v1 * v1 != 1 or v1 < 1:
            raise ValueError("fundamental must solve u^2 - modulus*v^2 = 1 with v >= 1")
        if not self.equation.is_solution(self.seed):
            raise ValueError(f"seed {tuple(self.seed)} does not solve {self.equation}")

    def iter_terms(self) -> Iterator[SolutionPair]:
        a, b = self.equation.a, self.equation.b
        x0, y0 = self.seed
        u1, v1 = self.fundamental
        u, v = 1, 0
        while True:
            yield SolutionPair(x0 * u + b * y0 * v, y0 * u + a * x0 * v)
            u, v = u1 * u + self.pell_modulus * v1 * v, u1 * v + v1 * u

    def terms(self, count: int) -> list[SolutionPair]:
        return list(islice(self.iter_terms(), count))

    def term(self, n: int) -> SolutionPair:
        return next(islice(self.iter_terms(), n, None))


class SolutionKind(Enum):
    EMPTY = "empty"
    FINITE = "finite"
    FAMILIES = "families"
    DEGENERATE_LINE = "degenerate_line"


class Completeness(Enum):
    """How much of the full solution set a result claims to describe."""

    COMPLETE = "complete"
    FAMILY_ONLY = "family_only_unknown_completeness"
    UNKNOWN_WITHIN_BOUND = "unknown_within_bound"


@dataclass(frozen=True)
class SolutionSet:
    """Tagged solver result.

    kind EMPTY:            no solutions; `reason` says whether that is proven
                           (completeness COMPLETE) or only unresolved within a
                           search bound (UNKNOWN_WITHIN_BOUND).
    kind FINITE:           `solutions` is the complete set, sorted, no dupes.
    kind FAMILIES:         `families` holds one descriptor per infinite family
                           found, plus any sporadic pairs in `solutions`; never
                           claims completeness (FAMILY_ONLY).
    kind DEGENERATE_LINE:  `lines` parametrize the solutions, `description`
                           renders them for humans.
    """

    kind: SolutionKind
    completeness: Completeness
    solutions: tuple[SolutionPair, ...] = ()
    families: tuple[FamilyDescriptor, ...] = ()
    lines: tuple[Line, ...] = ()
    reason: str | None = None
    description: str | None = None

    @classmethod
    def empty(cls, reason: str, *, proven: bool = True) -> SolutionSet:
        completeness = Completeness.COMPLETE if proven else Completeness.UNKNOWN_WITHIN_BOUND
        return cls(SolutionKind.EMPTY, completeness, reason=reason)

    @classmethod
    def finite(cls, pairs, *, reason_if_empty: str = "exhaustive enumeration found nothing") -> SolutionSet:
        ordered = tuple(sorted({SolutionPair(*p) for p in pairs}))
        if not ordered:
            return cls.empty(reason_if_empty)
        return cls(SolutionKind.FINITE, Completeness.COMPLETE, solutions=ordered)

    @classmethod
    def from_families(cls, families, sporadic=()) -> SolutionSet:
        return cls(
            SolutionKind.FAMILIES,
            Completeness.FAMILY_ONLY,
            solutions=tuple(sorted({SolutionPair(*p) for p in sporadic})),
            families=tuple(families),
        )

    @classmethod
    def degenerate_line(cls, lines, description: str) -> SolutionSet:
        return cls(
            SolutionKind.DEGENERATE_LINE,
            Completeness.COMPLETE,
            lines=tuple(lines),
            description=description,
        )
