"""Exact integer utilities: square roots, squareness, factoring, divisor pairs.

All functions work on arbitrary-precision Python integers and never touch
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Factorization",
    "isqrt",
    "is_perfect_square",
    "factorize",
    "divisors",
    "divisor_pairs",
]


@dataclass(frozen=True)
class Factorization:
    """n = product(p**e for p, e in factors), primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]


def isqrt(n: int) -> int:
    """Floor square root: the r with r*r <= n < (r+1)*(r+1)."""
    if n < 0:
        raise ValueError("isqrt is undefined for negative integers")
    return math.isqrt(n)


def is_perfect_square(n: int) -> int | None:
    """The nonnegative root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division (2, then odd candidates)."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    m = n
    factors: list[tuple[int, int]] = []
    e = 0
    while m % 2 == 0:
        m //= 2
        e += 1
    if e:
        factors.append((2, e))
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """Pairs (c1, c2) with c1*c2 = n and c1 <= c2, ascending in c1."""
    return [(d, n // d) for d in divisors(n) if d * d <= n]
