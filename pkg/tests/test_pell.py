"""Continued fraction and Pell engine tests.

The independent oracles used here:

* folding one full period of the expansion into a Moebius transform and
  checking, with exact integer arithmetic, that sqrt(d) is a fixed point;
* a plain v-scan (d*v^2 + 1 square?) for minimality of the fundamental
  solution;
* the determinant identity of consecutive convergents.
"""

from itertools import islice, pairwise

import pytest

from diopell.intkit import is_perfect_square
from diopell.pell import cf_sqrt, convergents, fundamental_solution, pell_stream

NONSQUARES_TO_1000 = [d for d in range(2, 1001) if is_perfect_square(d) is None]


def fold_period(period):
    """Matrix product of [[a, 1], [1, 0]] over the period, left to right."""
    p, p2, q, q2 = 1, 0, 0, 1
    for a in period:
        p, p2 = p * a + p2, p
        q, q2 = q * a + q2, q
    return p, p2, q, q2


def surd_identity_holds(d: int, a0: int, period) -> bool:
    """True iff [a0; period repeated] equals sqrt(d).

    The periodic tail t satisfies t = (p*t + p2)/(q*t + q2) with t = 1/(sqrt(d) - a0).
    Substituting and separating the rational and sqrt(d) parts gives two integer
    conditions that must both vanish.
    """
    p, p2, q, q2 = fold_period(period)
    rational = q - (q2 - p) * a0 - p2 * (d + a0 * a0)
    irrational = (q2 - p) + 2 * p2 * a0
    return rational == 0 and irrational == 0


def minimal_pell_by_scan(d: int, v_limit: int):
    for v in range(1, v_limit + 1):
        u = is_perfect_square(d * v * v + 1)
        if u is not None:
            return u, v
    return None


def test_cf_examples():
    assert (cf_sqrt(2).a0, cf_sqrt(2).period) == (1, (2,))
    assert (cf_sqrt(7).a0, cf_sqrt(7).period) == (2, (1, 1, 1, 4))
    assert (cf_sqrt(13).a0, cf_sqrt(13).period) == (3, (1, 1, 1, 1, 6))


@pytest.mark.parametrize("bad", [-5, 0, 1, 4, 9, 100])
def test_cf_rejects_squares_and_small(bad):
    with pytest.raises(ValueError):
        cf_sqrt(bad)


def test_cf_surd_identity():
    for d in NONSQUARES_TO_1000:
        expansion = cf_sqrt(d)
        assert surd_identity_holds(d, expansion.a0, expansion.period), d


def test_cf_structure():
    for d in NONSQUARES_TO_1000:
        expansion = cf_sqrt(d)
        assert expansion.a0 * expansion.a0 <= d < (expansion.a0 + 1) ** 2
        assert expansion.period[-1] == 2 * expansion.a0
        prefix = expansion.period[:-1]
        assert prefix == prefix[::-1], f"period prefix not palindromic for d={d}"


def test_convergents_determinant_identity():
    for d in NONSQUARES_TO_1000:
        if d > 200:
            continue
        expansion = cf_sqrt(d)
        count = 2 * len(expansion.period) + 2
        pairs = list(islice(convergents(expansion), count))
        for k, ((h_prev, k_prev), (h, kk)) in enumerate(pairwise(pairs), start=1):
            assert h * k_prev - h_prev * kk == (-1) ** (k - 1)


def test_fundamental_examples_match_scan():
    for d, expected in [(2, (3, 2)), (3, (2, 1)), (13, (649, 180))]:
        fund = fundamental_solution(d)
        assert (fund.u, fund.v) == expected
        assert minimal_pell_by_scan(d, expected[1]) == expected
        assert fund.index == 1


def test_fundamental_identity_range():
    for d in NONSQUARES_TO_1000:
        fund = fundamental_solution(d)
        assert fund.u * fund.u - d * fund.v * fund.v == 1
        assert fund.u >= 2 and fund.v >= 1


def test_fundamental_minimality_by_scan():
    for d in NONSQUARES_TO_1000:
        fund = fundamental_solution(d)
        if fund.v > 10**5:
            continue
        assert minimal_pell_by_scan(d, fund.v - 1) is None, f"smaller solution exists for d={d}"


def test_stream_examples():
    assert [(s.u, s.v) for s in islice(pell_stream(2), 3)] == [(1, 0), (3, 2), (17, 12)]
    assert [(s.u, s.v) for s in islice(pell_stream(6), 3)] == [(1, 0), (5, 2), (49, 20)]
    for d in (2, 3, 5, 61, 109):
        first = next(pell_stream(d))
        assert (first.u, first.v, first.index) == (1, 0, 0)


def test_stream_identity_and_monotonicity():
    for d in range(2, 51):
        if is_perfect_square(d) is not None:
            continue
        terms = list(islice(pell_stream(d), 8))
        for i, s in enumerate(terms):
            assert s.index == i
            assert s.u * s.u - d * s.v * s.v == 1
        for prev, cur in pairwise(terms):
            assert cur.u > prev.u
            assert cur.v > prev.v


def test_big_integer_fundamental_d61():
    fund = fundamental_solution(61)
    assert fund.u * fund.u - 61 * fund.v * fund.v == 1
    assert (fund.u, fund.v) == (1766319049, 226153980)
