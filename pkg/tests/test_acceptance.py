"""Acceptance suite: one test per top-level correctness claim, zero tolerance.

Each test prints a single PASS line on success (visible under ``pytest -s``;
the test name itself carries the criterion number under ``pytest -v``).
Everything asserted here is exact integer arithmetic; there are no
floating-point tolerances anywhere.
"""

import json
import random
import subprocess
import sys
from itertools import islice, pairwise

from diopell.core import Completeness, Domain, Equation, SolutionKind
from diopell.diffsq import diffsq_solvable, solve_diff_squares
from diopell.intkit import is_perfect_square
from diopell.oracle import brute_force, pell_brute_force
from diopell.pell import cf_sqrt, convergents, fundamental_solution, pell_stream
from diopell.solver import pell_lift_family, scaled_pell_family, solve

Z = Domain.INTEGERS
N = Domain.NATURALS


def finite_pairs(result) -> set[tuple[int, int]]:
    assert result.kind in (SolutionKind.FINITE, SolutionKind.EMPTY)
    return {tuple(p) for p in result.solutions}


def test_criterion_1_solvability_biconditional_and_oracle_equality():
    """x^2 - y^2 = c solvable over Z iff c odd or 4 | c; sets match brute force."""
    mismatches = 0
    for c in range(-500, 501):
        if c == 0:
            continue
        result = solve_diff_squares(c, Z)
        nonempty = result.kind is SolutionKind.FINITE
        if nonempty != diffsq_solvable(c):
            mismatches += 1
            continue
        bound = (abs(c) + 1) // 2 + 1
        if finite_pairs(result) != set(brute_force(Equation(1, 1, c), bound, Z)):
            mismatches += 1
    assert mismatches == 0
    print("ACCEPTANCE 1 PASS: solvability biconditional and oracle equality, c in [-500, 500]")


def test_criterion_2_natural_solutions_are_quadrant_restriction():
    """Over N every solution is nonnegative and the set is the Z-set in the quadrant."""
    for c in range(1, 301):
        if not diffsq_solvable(c):
            continue
        n_set = finite_pairs(solve_diff_squares(c, N))
        z_set = finite_pairs(solve_diff_squares(c, Z))
        assert all(x >= 0 and y >= 0 for x, y in n_set), c
        assert n_set == {(x, y) for x, y in z_set if x >= 0 and y >= 0}, c
    print("ACCEPTANCE 2 PASS: natural solution sets for c in [1, 300]")


def test_criterion_3_pell_fundamental_correct_and_minimal():
    """Fundamental solutions: exact identity for d <= 1000, scan-verified minimality
    for d <= 200 (where feasible), and the large d = 61 case from the CF path."""
    for d in range(2, 1001):
        if is_perfect_square(d) is not None:
            continue
        fund = fundamental_solution(d)
        assert fund.u * fund.u - d * fund.v * fund.v == 1, d
    for d in range(2, 201):
        if is_perfect_square(d) is not None:
            continue
        fund = fundamental_solution(d)
        if fund.v > 10**5:
            continue
        scanned = pell_brute_force(d, fund.v)
        assert scanned is not None and (scanned.u, scanned.v) == (fund.u, fund.v), d
    big = fundamental_solution(61)
    assert big.u * big.u - 61 * big.v * big.v == 1
    assert (big.u, big.v) == (1766319049, 226153980)
    print("ACCEPTANCE 3 PASS: Pell fundamentals exact (d <= 1000), minimal (d <= 200), d=61 large case")


def test_criterion_4_scaled_families():
    """First 6 terms of every scaled family solve x^2 - d*y^2 = c^2 and increase."""
    for d in (2, 3, 5, 6, 7, 10):
        for c in range(1, 6):
            terms = scaled_pell_family(d, c).terms(6)
            for x, y in terms:
                assert x * x - d * y * y == c * c, (d, c, x, y)
            for (x0, y0), (x1, y1) in pairwise(terms):
                assert x1 > x0 and y1 > y0, (d, c)
    print("ACCEPTANCE 4 PASS: scaled Pell families for d in {2,3,5,6,7,10}, c in [1,5]")


def test_criterion_5_square_product_regime_is_complete_and_finite():
    """For a*b = k^2 the solver returns exactly the brute-force set, never a family."""
    for a in range(1, 11):
        for b in range(1, 11):
            k = is_perfect_square(a * b)
            if k is None:
                continue
            for c in range(1, 101):
                eq = Equation(a, b, c)
                result = solve(eq, N)
                assert result.kind in (SolutionKind.FINITE, SolutionKind.EMPTY), (a, b, c)
                bound = max((a * c + 1) // (2 * a), (a * c + 1) // (2 * k)) + 1
                assert finite_pairs(result) == set(brute_force(eq, bound, N)), (a, b, c)
    print("ACCEPTANCE 5 PASS: complete finite sets for square a*b, a,b in [1,10], c in [1,100]")


def test_criterion_6_lift_families_and_two_factor_identity():
    """The worked family for 2x^2 - 3y^2 = 5, then 50 random seeded equations."""
    family = pell_lift_family(Equation(2, 3, 5), (2, 1))
    assert family.terms(4) == [(2, 1), (16, 13), (158, 129), (1564, 1277)]
    for x, y in family.terms(4):
        assert 2 * x * x - 3 * y * y == 5

    rng = random.Random(1982)
    checked = 0
    while checked < 50:
        a, b = rng.randint(1, 12), rng.randint(1, 12)
        if is_perfect_square(a * b) is not None:
            continue
        c = rng.randint(-80, 80)
        if c == 0:
            continue
        eq = Equation(a, b, c)
        seeds = [p for p in brute_force(eq, 200, N) if p != (0, 0)]
        if not seeds:
            continue
        x0, y0 = seeds[0]
        lifted = pell_lift_family(eq, (x0, y0)).terms(5)
        pell = list(islice(pell_stream(a * b), 5))
        for term, ps in zip(lifted, pell):
            assert eq.evaluate(*term) == c, (eq, term)
            seed_factor = a * x0 * x0 - b * y0 * y0
            pell_factor = ps.u * ps.u - a * b * ps.v * ps.v
            assert seed_factor == c, eq
            assert pell_factor == 1, (eq, ps)
            assert seed_factor * pell_factor == c
        checked += 1
    print("ACCEPTANCE 6 PASS: lift family terms and the two-factor identity, 50 random equations")


def test_criterion_7_continued_fraction_structure():
    """Period ends in 2*a0 with palindromic prefix; convergent determinant identity."""
    for d in range(2, 1001):
        if is_perfect_square(d) is not None:
            continue
        expansion = cf_sqrt(d)
        assert expansion.period[-1] == 2 * expansion.a0, d
        prefix = expansion.period[:-1]
        assert prefix == prefix[::-1], d
        count = len(expansion.period) + 2
        pairs = list(islice(convergents(expansion), count))
        for k, ((h_prev, k_prev), (h, kk)) in enumerate(pairwise(pairs), start=1):
            assert h * k_prev - h_prev * kk == (-1) ** (k - 1), d
    print("ACCEPTANCE 7 PASS: continued fraction structure and determinant identity, d in [2, 1000]")


def test_criterion_8_cli_contract():
    """The documented invocations exit with the documented codes; JSON re-verifies."""
    def run(args):
        return subprocess.run(
            [sys.executable, "-m", "diopell", *args], capture_output=True, text=True
        )

    proc = run(["solve", "--a", "1", "--b", "1", "--c", "15", "--domain", "n"])
    assert proc.returncode == 0 and "(4, 1)" in proc.stdout and "(8, 7)" in proc.stdout
    proc = run(["solve", "--a", "1", "--b", "1", "--c", "6", "--domain", "z"])
    assert proc.returncode == 0 and "no solutions" in proc.stdout
    proc = run(["pell", "--d", "13", "--count", "2"])
    assert proc.returncode == 0 and "(1, 0)" in proc.stdout and "(649, 180)" in proc.stdout

    proc = run(["solve", "--a", "2", "--b", "3", "--c", "5", "--domain", "n", "--format", "json"])
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == proc.stdout.rstrip("\n")
    a, b, c = (int(doc["inputs"][key]) for key in ("a", "b", "c"))
    for family in doc["result"]["families"]:
        for term in family["terms"]:
            x, y = int(term["x"]), int(term["y"])
            assert a * x * x - b * y * y == c
    print("ACCEPTANCE 8 PASS: CLI exit codes and JSON re-verification")
