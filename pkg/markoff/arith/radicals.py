"""
Integer helpers for square roots and radicands.
"""

from functools import lru_cache
from math import isqrt
from typing import Tuple

from sympy import factorint, primerange

# Radicands below this bound are factored completely.
FULL_FACTOR_BOUND = 10**24

# Trial-division bound for larger radicands.
TRIAL_LIMIT = 1000


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


@lru_cache(maxsize=1 << 14)
def squarefree_decompose(n: int) -> Tuple[int, int]:
    """
    Split a positive integer into ``(s, c)`` with ``n = s**2 * c``.

    The cofactor ``c`` is squarefree whenever ``n`` is below ``FULL_FACTOR_BOUND``. Larger radicands
    are only stripped of small square factors and of a perfect-square remainder, so ``c`` may keep a
    square factor with two large primes. Equality of field elements never relies on ``c`` being
    squarefree (see ``same_square_class``).

    Args:
        n (int): The radicand, n > 0.

    Returns:
        Tuple[int, int]: The square part root ``s`` and the remaining radicand ``c``.
    """

    if n <= 0:
        raise ValueError(f"radicand must be positive, got {n}")
    if n < 4:
        return 1, n
    if n >= FULL_FACTOR_BOUND:
        return strip_small_squares(n)

    s, c = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        c *= p ** (e % 2)
    return s, c


def strip_small_squares(n: int) -> Tuple[int, int]:
    """Remove squares of primes below ``TRIAL_LIMIT`` and a perfect-square remainder from ``n``."""
    s, c = 1, n
    for p in primerange(2, TRIAL_LIMIT):
        pp = p * p
        if pp > c:
            break
        while c % pp == 0:
            c //= pp
            s *= p
    if is_square(c):
        s, c = s * isqrt(c), 1
    return s, c


def same_square_class(a: int, b: int) -> bool:
    """Whether sqrt(a) / sqrt(b) is rational."""
    return is_square(a * b)


def floor_surd(u: int, v: int, w: int, d: int) -> int:
    """
    Exact floor of (u + v*sqrt(d)) / w for w > 0.

    Args:
        u (int): Rational part of the numerator.
        v (int): Coefficient of the square root.
        w (int): Positive denominator.
        d (int): Radicand, d >= 0.

    Returns:
        int: The floor.
    """

    if w <= 0:
        raise ValueError("denominator must be positive")
    root_sq = v * v * d
    t = isqrt(root_sq)
    if t * t == root_sq:
        return (u + (t if v >= 0 else -t)) // w
    if v > 0:
        return (u + t) // w
    return (u - t - 1) // w
