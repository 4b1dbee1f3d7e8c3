"""
Exact rational combinations of square roots with certified signs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import floor, gcd, isqrt
from typing import Dict, Iterator, Tuple, Union

import mpmath

from markoff.arith.radicals import is_square, squarefree_decompose

# Starting precision of the interval enclosures, in bits.
START_BITS = 64

Scalar = Union[int, Fraction]


def _sqrt_enclosure(d: int, bits: int) -> Tuple[int, int]:
    """Integers lo, hi with lo <= sqrt(d) * 2**bits <= hi."""
    scaled = d << (2 * bits)
    r = isqrt(scaled)
    if r * r == scaled:
        return r, r
    return r, r + 1


@total_ordering
class SurdSum:
    """
    Finite sum of terms ``c * sqrt(d)`` with rational ``c``.

    The key 1 holds the rational part. Keys lying in the same square class are merged on
    construction, so the sum is zero exactly when every coefficient is zero.

    Attributes:
        terms (Dict[int, Fraction]): Map from radicand to coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[int, Scalar] = None) -> None:
        self._terms = _merge(terms or {})

    @classmethod
    def rational(cls, x: Scalar) -> SurdSum:
        return cls({1: Fraction(x)})

    @classmethod
    def sqrt(cls, d: int, coefficient: Scalar = 1) -> SurdSum:
        return cls({d: Fraction(coefficient)})

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    @property
    def is_rational(self) -> bool:
        return all(d == 1 for d in self._terms)

    def rational_part(self) -> Fraction:
        return self._terms.get(1, Fraction(0))

    def _coerce(self, other: object) -> SurdSum:
        if isinstance(other, SurdSum):
            return other
        if isinstance(other, (int, Fraction)):
            return SurdSum.rational(other)
        to_surd = getattr(other, "to_surd", None)
        if to_surd is not None:
            return to_surd()
        return NotImplemented

    def __add__(self, other: object) -> SurdSum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for d, c in other._terms.items():
            terms[d] = terms.get(d, 0) + c
        return SurdSum(terms)

    __radd__ = __add__

    def __neg__(self) -> SurdSum:
        return SurdSum({d: -c for d, c in self._terms.items()})

    def __sub__(self, other: object) -> SurdSum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> SurdSum:
        return (-self) + other

    def __mul__(self, other: object) -> SurdSum:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[int, Fraction] = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                # sqrt(a) * sqrt(b) = g * sqrt(a/g * b/g)
                g = gcd(a, b)
                key = (a // g) * (b // g)
                terms[key] = terms.get(key, 0) + x * y * g
        return SurdSum(terms)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> SurdSum:
        if isinstance(other, SurdSum):
            if not other.is_rational:
                raise TypeError("division by an irrational surd sum is not supported")
            other = other.rational_part()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            from markoff.errors import DivisionByZero

            raise DivisionByZero("division of a surd sum by zero")
        return SurdSum({d: c / other for d, c in self._terms.items()})

    def enclosure(self, bits: int) -> Tuple[Fraction, Fraction]:
        """
        Rational bounds lo <= value <= hi whose width shrinks like 2**-bits.

        Args:
            bits (int): Working precision of the square root enclosures.

        Returns:
            Tuple[Fraction, Fraction]: The lower and upper bound.
        """

        lo = hi = Fraction(0)
        scale = 1 << bits
        for d, c in self._terms.items():
            if d == 1:
                lo += c
                hi += c
                continue
            r_lo, r_hi = _sqrt_enclosure(d, bits)
            if c > 0:
                lo += c * Fraction(r_lo, scale)
                hi += c * Fraction(r_hi, scale)
            else:
                lo += c * Fraction(r_hi, scale)
                hi += c * Fraction(r_lo, scale)
        return lo, hi

    def sign(self) -> int:
        """Certified sign, -1, 0 or 1."""
        if not self._terms:
            return 0
        if self.is_rational:
            c = self.rational_part()
            return (c > 0) - (c < 0)
        # Merged terms are linearly independent, so a nonzero sum separates from 0 eventually
        bits = START_BITS
        while True:
            lo, hi = self.enclosure(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def floor(self) -> int:
        if self.is_rational:
            return floor(self.rational_part())
        bits = START_BITS
        while True:
            lo, hi = self.enclosure(bits)
            if floor(lo) == floor(hi):
                return floor(lo)
            bits *= 2

    def decimal(self, digits: int) -> str:
        """Value rounded to nearest with ``digits`` fractional digits."""
        scale = 10**digits
        shifted = self * scale + Fraction(1, 2)
        n = shifted.floor()
        sign = "-" if n < 0 else ""
        n = abs(n)
        if digits == 0:
            return f"{sign}{n}"
        whole, frac = divmod(n, scale)
        return f"{sign}{whole}.{frac:0{digits}d}"

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps + 10):
            return mpmath.mpf(self.decimal(dps + 10))

    def __float__(self) -> float:
        return float(self.decimal(20))

    def __repr__(self) -> str:
        body = ", ".join(f"{d}: {c}" for d, c in self.items())
        return f"SurdSum({{{body}}})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for d, c in self.items():
            parts.append(str(c) if d == 1 else f"{c}·√{d}")
        return " + ".join(parts)


def _merge(terms: Dict[int, Scalar]) -> Dict[int, Fraction]:
    """Pull square factors out of the keys and fold keys of one square class together."""
    merged: Dict[int, Fraction] = {}
    for d, c in terms.items():
        c = Fraction(c)
        if c == 0:
            continue
        if d <= 0:
            raise ValueError(f"radicand must be positive, got {d}")
        s, d = squarefree_decompose(d)
        c *= s
        for key in merged:
            if key == d or is_square(key * d):
                # sqrt(d) = t / key * sqrt(key)
                t = isqrt(key * d)
                merged[key] += c * Fraction(t, key)
                break
        else:
            merged[d] = c
    return {d: c for d, c in merged.items() if c != 0}
