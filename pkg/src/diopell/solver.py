"""Front door for a*x^2 - b*y^2 = c: normalize, classify, and solve.

The solvable shapes split by the product a*b of the (sign-normalized)
coefficients:

* a*b a perfect square k^2 and c != 0: multiplying through by a gives
  z^2 - t^2 = a*c with z = a*x and t = k*y, so the difference-of-squares
  solver enumerates everything and divisibility filters map back.  The
  solution set is finite and is computed completely.

* a*b not a perfect square: whenever one natural solution (x0, y0) exists,
  composing it with the solutions (u_n, v_n) of u^2 - (a*b)*v^2 = 1 via

      x_n = x0*u_n + b*y0*v_n,   y_n = y0*u_n + a*x0*v_n

  gives infinitely many, because

      a*x_n^2 - b*y_n^2 = (a*x0^2 - b*y0^2) * (u_n^2 - a*b*v_n^2) = c * 1.

  Seeds are searched up to a bound; finding none proves nothing, and the
  result says so rather than claiming emptiness.

* a = 1, b nonsquare, and c a perfect square s^2: the scaled Pell family
  (s*u_n, s*v_n) exists unconditionally and is reported explicitly.

Equations the sign transforms cannot bring to this shape (a zero coefficient,
or a and b of opposite signs, which makes the left side definite) are handled
by direct exact enumeration so that `solve` is total over all inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from . import diffsq
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
from .intkit import is_perfect_square, isqrt
from .pell import fundamental_solution

__all__ = [
    "DEFAULT_SEARCH_BOUND",
    "NormalizedEquation",
    "EquationClass",
    "Classification",
    "normalize",
    "classify",
    "solve_perfect_square_case",
    "scaled_pell_family",
    "find_particular_solution",
    "iter_seed_solutions",
    "pell_lift_family",
    "solve",
]

DEFAULT_SEARCH_BOUND = 10_000


@dataclass(frozen=True)
class NormalizedEquation:
    """A rewritten equation with a >= 1, b >= 1, c >= 0, plus the transform.

    Solutions of `equation` and of `original` correspond one-to-one: negating
    the whole equation leaves pairs untouched, renaming the variables swaps
    them.  `to_original` and `to_normalized` apply that correspondence.
    """

    equation: Equation
    original: Equation
    swap_xy: bool
    negate_applied: bool

    def to_original(self, pair: tuple[int, int]) -> SolutionPair:
        x, y = pair
        return SolutionPair(y, x) if self.swap_xy else SolutionPair(x, y)

    def to_normalized(self, pair: tuple[int, int]) -> SolutionPair:
        return self.to_original(pair)  # the swap is an involution


def normalize(eq: Equation) -> NormalizedEquation:
    """Rewrite so that a >= 1, b >= 1, and c >= 0.

    Two solution-preserving moves are available: multiplying the equation by
    -1 maps (a, b, c) to (-a, -b, -c), and renaming x <-> y maps (a, b, c) to
    (-b, -a, c) while swapping each solution pair.  Together they normalize
    exactly the equations whose quadratic part is indefinite (a and b nonzero
    with equal signs); definite forms and zero coefficients are rejected here
    and handled by dedicated paths in `solve`.
    """
    a, b, c = eq.a, eq.b, eq.c
    if a == 0 and b == 0:
        raise ValueError("degenerate equation: a and b are both zero")
    if a == 0 or b == 0:
        raise ValueError("cannot normalize an equation with a zero quadratic coefficient")
    if (a > 0) != (b > 0):
        raise ValueError("cannot normalize a definite form: a and b have opposite signs")
    if a > 0:
        if c >= 0:
            return NormalizedEquation(eq, eq, swap_xy=False, negate_applied=False)
        return NormalizedEquation(Equation(b, a, -c), eq, swap_xy=True, negate_applied=True)
    if c <= 0:
        return NormalizedEquation(Equation(-a, -b, -c), eq, swap_xy=False, negate_applied=True)
    return NormalizedEquation(Equation(-b, -a, c), eq, swap_xy=True, negate_applied=False)


class EquationClass(Enum):
    DEGENERATE_ZERO_C = "degenerate-zero-c"
    PERFECT_SQUARE_AB = "perfect-square-ab"
    NON_SQUARE_AB = "non-square-ab"


@dataclass(frozen=True)
class Classification:
    kind: EquationClass
    k: int | None = None
    pell_modulus: int | None = None


def _require_normalized(eq: Equation) -> None:
    if eq.a < 1 or eq.b < 1:
        raise ValueError(f"expected a normalized equation (a >= 1, b >= 1), got {eq}")


def classify(eq: Equation) -> Classification:
    """Sort a normalized equation into its solving regime.

    c = 0 is degenerate; otherwise a*b = k^2 selects the finite
    difference-of-squares regime (a = b = 1 being the plain one) and a
    nonsquare a*b selects the Pell regime with modulus a*b.
    """
    _require_normalized(eq)
    if eq.c == 0:
        return Classification(EquationClass.DEGENERATE_ZERO_C)
    k = is_perfect_square(eq.a * eq.b)
    if k is not None:
        return Classification(EquationClass.PERFECT_SQUARE_AB, k=k)
    return Classification(EquationClass.NON_SQUARE_AB, pell_modulus=eq.a * eq.b)


def _filter_domain(pairs, domain: Domain):
    if domain is Domain.NATURALS:
        return [p for p in pairs if p[0] >= 0 and p[1] >= 0]
    return list(pairs)


def solve_perfect_square_case(eq: Equation, domain: Domain = Domain.INTEGERS) -> SolutionSet:
    """Complete finite solution set when a*b = k^2 and c != 0.

    Multiply by a: (a*x)^2 - (k*y)^2 = a*c.  Enumerate all integer solutions
    (z, t) of the difference of squares, keep those with a | z and k | t, and
    map back through x = z/a, y = t/k.
    """
    _require_normalized(eq)
    k = is_perfect_square(eq.a * eq.b)
    if k is None:
        raise ValueError(f"a*b is not a perfect square in {eq}")
    if eq.c == 0:
        raise ValueError("c must be nonzero; the c = 0 case degenerates to a line")
    inner = diffsq.solve_diff_squares(eq.a * eq.c, Domain.INTEGERS)
    if inner.kind is SolutionKind.EMPTY:
        return SolutionSet.empty(f"z^2 - t^2 = {eq.a * eq.c} has no integer solutions: {inner.reason}")
    pairs = [
        SolutionPair(z // eq.a, t // k)
        for z, t in inner.solutions
        if z % eq.a == 0 and t % k == 0
    ]
    return SolutionSet.finite(
        _filter_domain(pairs, domain),
        reason_if_empty="no difference-of-squares split survives the divisibility filters",
    )


def scaled_pell_family(d: int, c: int) -> FamilyDescriptor:
    """The family (c*u_n, c*v_n) solving x^2 - d*y^2 = c^2 for nonsquare d.

    Scaling every Pell solution by c works because
    (c*u)^2 - d*(c*v)^2 = c^2 * (u^2 - d*v^2) = c^2.
    """
    if c <= 0:
        raise ValueError("c must be positive")
    fundamental = fundamental_solution(d)  # validates d
    return FamilyDescriptor(
        kind=FamilyKind.SCALED_PELL,
        equation=Equation(1, d, c * c),
        seed=SolutionPair(c, 0),
        pell_modulus=d,
        fundamental=(fundamental.u, fundamental.v),
    )


def iter_seed_solutions(eq: Equation, bound: int) -> Iterator[SolutionPair]:
    """Natural solutions of eq with both coordinates <= bound, ascending in x.

    For each x the equation forces b*y^2 = a*x^2 - c, so y exists exactly when
    that residual is a nonnegative multiple of b with a square quotient.  At
    most one y >= 0 per x, hence the iteration order is lexicographic.
    """
    _require_normalized(eq)
    if bound < 1:
        raise ValueError("bound must be positive")
    for x in range(bound + 1):
        residual = eq.a * x * x - eq.c
        if residual < 0:
            continue
        quotient, remainder = divmod(residual, eq.b)
        if remainder:
            continue
        y = is_perfect_square(quotient)
        if y is None or y > bound:
            continue
        if x == 0 and y == 0:
            continue
        yield SolutionPair(x, y)


def find_particular_solution(eq: Equation, bound: int = DEFAULT_SEARCH_BOUND) -> SolutionPair | None:
    """The lexicographically least nonzero natural solution within the bound.

    None means "none with coordinates <= bound", never "none at all".
    """
    return next(iter_seed_solutions(eq, bound), None)


def pell_lift_family(eq: Equation, seed: tuple[int, int]) -> FamilyDescriptor:
    """The infinite family grown from one solution when a*b is not a square.

    Term n multiplies the seed by the n-th solution of u^2 - (a*b)*v^2 = 1:
        x_n = x0*u_n + b*y0*v_n,   y_n = y0*u_n + a*x0*v_n,
    and the product identity
        a*x_n^2 - b*y_n^2 = (a*x0^2 - b*y0^2) * (u_n^2 - a*b*v_n^2)
    shows each term solves the equation exactly.  Natural seeds give natural
    terms, strictly increasing in both coordinates.
    """
    _require_normalized(eq)
    modulus = eq.a * eq.b
    if is_perfect_square(modulus) is not None:
        raise ValueError(f"a*b = {modulus} is a perfect square; no Pell family exists")
    pair = SolutionPair(*seed)
    if pair == (0, 0):
        raise ValueError("seed must be a nonzero solution")
    if not eq.is_solution(pair):
        raise ValueError(f"seed {tuple(pair)} does not satisfy {eq}")
    fundamental = fundamental_solution(modulus)
    return FamilyDescriptor(
        kind=FamilyKind.PELL_LIFT,
        equation=eq,
        seed=pair,
        pell_modulus=modulus,
        fundamental=(fundamental.u, fundamental.v),
    )


def _terms_within(family: FamilyDescriptor, bound: int) -> set[SolutionPair]:
    """Family terms with both coordinates <= bound (terms increase strictly)."""
    terms: set[SolutionPair] = set()
    for term in family.iter_terms():
        if term.x > bound or term.y > bound:
            break
        terms.add(term)
    return terms


def _solve_pell_regime(eq: Equation, bound: int) -> SolutionSet:
    """Seed search plus families; families are the same for Z and N."""
    families: list[FamilyDescriptor] = []
    covered: set[SolutionPair] = set()
    scaled_root = is_perfect_square(eq.c) if eq.a == 1 else None
    if scaled_root:
        family = scaled_pell_family(eq.b, scaled_root)
        families.append(family)
        covered |= _terms_within(family, bound)
    for seed in iter_seed_solutions(eq, bound):
        if seed in covered:
            continue
        family = pell_lift_family(eq, seed)
        families.append(family)
        covered |= _terms_within(family, bound)
    if families:
        return SolutionSet.from_families(families)
    return SolutionSet.empty(
        f"no solution with coordinates <= {bound} found; existence is undecided within this bound",
        proven=False,
    )


def _solve_zero_c(eq: Equation, domain: Domain) -> SolutionSet:
    """a*x^2 = b*y^2 with a, b >= 1: a line pair when a*b is a square, else (0,0).

    Reducing by g = gcd(a, b) leaves coprime parts that are both squares
    exactly when a*b is one, say a/g = s^2 and b/g = r^2; then the equation is
    (s*x)^2 = (r*y)^2, i.e. the lines (x, y) = (r*t, +-s*t).
    """
    g = math.gcd(eq.a, eq.b)
    s = is_perfect_square(eq.a // g)
    r = is_perfect_square(eq.b // g)
    if s is None or r is None:
        return SolutionSet.finite([SolutionPair(0, 0)])
    origin = SolutionPair(0, 0)
    if domain is Domain.NATURALS:
        return SolutionSet.degenerate_line(
            [Line(origin, SolutionPair(r, s))],
            f"(x, y) = ({r}t, {s}t) for t >= 0",
        )
    return SolutionSet.degenerate_line(
        [Line(origin, SolutionPair(r, s)), Line(origin, SolutionPair(r, -s))],
        f"(x, y) = ({r}t, +-{s}t) for t in Z",
    )


def _square_quotient_root(num: int, den: int) -> int | None:
    """Nonnegative w with w^2 = num/den exactly, if that quotient is such."""
    if num % den != 0:
        return None
    q = num // den
    if q < 0:
        return None
    return is_perfect_square(q)


def _solve_zero_coefficient(eq: Equation, domain: Domain) -> SolutionSet:
    """Exactly one of a, b is zero: one variable is pinned, the other free."""
    if eq.a == 0:
        y0 = _square_quotient_root(-eq.c, eq.b)
        if y0 is None:
            return SolutionSet.empty(f"b*y^2 = {-eq.c} has no integer solution")
        values = [y0] if (domain is Domain.NATURALS or y0 == 0) else [y0, -y0]
        lines = [Line(SolutionPair(0, y), SolutionPair(1, 0)) for y in values]
        rendered = " or ".join(f"y = {y}" for y in values)
        return SolutionSet.degenerate_line(lines, f"{rendered}, x free")
    x0 = _square_quotient_root(eq.c, eq.a)
    if x0 is None:
        return SolutionSet.empty(f"a*x^2 = {eq.c} has no integer solution")
    values = [x0] if (domain is Domain.NATURALS or x0 == 0) else [x0, -x0]
    lines = [Line(SolutionPair(x, 0), SolutionPair(0, 1)) for x in values]
    rendered = " or ".join(f"x = {x}" for x in values)
    return SolutionSet.degenerate_line(lines, f"{rendered}, y free")


def _solve_definite(eq: Equation, domain: Domain) -> SolutionSet:
    """Opposite-sign coefficients make A*x^2 + B*y^2 = C with A, B >= 1.

    The left side dominates both coordinates, so exhaustive scanning of
    x <= isqrt(C/A) enumerates the complete (finite) solution set.
    """
    if eq.a > 0:
        big_a, big_b, big_c = eq.a, -eq.b, eq.c
    else:
        big_a, big_b, big_c = -eq.a, eq.b, -eq.c
    if big_c < 0:
        return SolutionSet.empty(
            f"definite form {big_a}x^2 + {big_b}y^2 = {big_c} has a negative right side"
        )
    if big_c == 0:
        return SolutionSet.finite([SolutionPair(0, 0)])
    base = []
    for x in range(isqrt(big_c // big_a) + 1):
        y = _square_quotient_root(big_c - big_a * x * x, big_b)
        if y is not None:
            base.append((x, y))
    if domain is Domain.NATURALS:
        pairs = base
    else:
        pairs = [(sx * x, sy * y) for x, y in base for sx in (1, -1) for sy in (1, -1)]
    return SolutionSet.finite(
        pairs,
        reason_if_empty=f"definite form {big_a}x^2 + {big_b}y^2 = {big_c} has no representation",
    )


def _map_back(result: SolutionSet, norm: NormalizedEquation) -> SolutionSet:
    """Rewrite a result for the normalized equation in original coordinates.

    Only a variable swap changes anything: pairs and lines get their
    coordinates exchanged, and each family is rebuilt against the swapped
    equation (b, a, -c), where the same composition law applies with the
    roles of the coefficients exchanged.
    """
    if not norm.swap_xy:
        return result
    neq = norm.equation
    swapped_eq = Equation(neq.b, neq.a, -neq.c)
    families = tuple(
        FamilyDescriptor(
            kind=FamilyKind.PELL_LIFT,
            equation=swapped_eq,
            seed=SolutionPair(f.seed.y, f.seed.x),
            pell_modulus=f.pell_modulus,
            fundamental=f.fundamental,
        )
        for f in result.families
    )
    return SolutionSet(
        kind=result.kind,
        completeness=result.completeness,
        solutions=tuple(sorted(SolutionPair(y, x) for x, y in result.solutions)),
        families=families,
        lines=tuple(
            Line(SolutionPair(line.base.y, line.base.x), SolutionPair(line.direction.y, line.direction.x))
            for line in result.lines
        ),
        reason=result.reason,
        description=result.description,
    )


def solve(
    eq: Equation,
    domain: Domain = Domain.INTEGERS,
    *,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> SolutionSet:
    """Solve a*x^2 - b*y^2 = c in the requested domain.

    Dispatch: zero coefficients and definite forms are enumerated directly;
    otherwise the equation is normalized and classified.  c = 0 gives lines
    or the origin; square a*b gives the complete finite set; nonsquare a*b
    gives solution families from seeds found up to `search_bound`, or an
    honest "unknown within bound" when no seed turns up.  Every returned
    object is expressed in the original coordinates.
    """
    if search_bound < 1:
        raise ValueError("search_bound must be positive")
    if eq.a == 0 and eq.b == 0:
        raise ValueError("degenerate equation: a and b are both zero")
    if eq.a == 0 or eq.b == 0:
        return _solve_zero_coefficient(eq, domain)
    if (eq.a > 0) != (eq.b > 0):
        return _solve_definite(eq, domain)

    norm = normalize(eq)
    neq = norm.equation
    classification = classify(neq)
    if classification.kind is EquationClass.DEGENERATE_ZERO_C:
        result = _solve_zero_c(neq, domain)
    elif classification.kind is EquationClass.PERFECT_SQUARE_AB:
        if neq.a == 1 and neq.b == 1:
            result = diffsq.solve_diff_squares(neq.c, domain)
        else:
            result = solve_perfect_square_case(neq, domain)
    else:
        result = _solve_pell_regime(neq, search_bound)
    return _map_back(result, norm)
