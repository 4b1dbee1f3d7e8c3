"""
Exact elements (u + v*sqrt(d)) / w of real quadratic fields.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import total_ordering
from math import gcd, isqrt
from typing import Tuple, Union

import mpmath

from markoff.arith.radicals import floor_surd, is_square, squarefree_decompose
from markoff.errors import DivisionByZero

Number = Union[int, Fraction, "QuadraticIrrational"]

_QUADRUPLE = re.compile(r"^\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*\)$")


@total_ordering
class QuadraticIrrational:
    """
    Exact number (u + v*sqrt(d)) / w in normalized form.

    After normalization ``w > 0``, ``gcd(u, v, w) = 1`` and square factors are pulled out of ``d``.
    A vanishing ``v`` is stored with ``d = 1``, so the class also carries the rationals, which keeps
    the field closed under the arithmetic operators.

    Attributes:
        u (int): Rational part of the numerator.
        v (int): Coefficient of the square root.
        w (int): Positive denominator.
        d (int): Radicand.
    """

    __slots__ = ("_u", "_v", "_w", "_d")

    def __init__(self, u: int, v: int = 0, w: int = 1, d: int = 1) -> None:
        if w == 0:
            raise DivisionByZero("zero denominator in quadratic irrational")
        if d < 1:
            raise ValueError(f"radicand must be positive, got {d}")
        if v != 0 and d > 1:
            s, d = squarefree_decompose(d)
            v *= s
        if d == 1:
            u, v = u + v, 0
        if v == 0:
            d = 1
        if w < 0:
            u, v, w = -u, -v, -w
        g = gcd(gcd(u, v), w)
        self._u, self._v, self._w, self._d = u // g, v // g, w // g, d

    @classmethod
    def from_fraction(cls, x: Union[int, Fraction]) -> QuadraticIrrational:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, 1)

    @classmethod
    def half(cls, u: int, v: int, w: int, d: int) -> QuadraticIrrational:
        """The value 1/2 * (u + v*sqrt(d)) / w, the way limit points are usually written."""
        return cls(u, v, 2 * w, d)

    @classmethod
    def parse_quadruple(cls, text: str) -> QuadraticIrrational:
        match = _QUADRUPLE.match(text.strip())
        if match is None:
            raise ValueError(f"not a (u,v,w,d) quadruple: {text!r}")
        u, v, w, d = (int(group) for group in match.groups())
        return cls(u, v, w, d)

    @property
    def u(self) -> int:
        return self._u

    @property
    def v(self) -> int:
        return self._v

    @property
    def w(self) -> int:
        return self._w

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._v == 0

    def quadruple(self) -> Tuple[int, int, int, int]:
        return self._u, self._v, self._w, self._d

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self._u, self._w)

    def conjugate(self) -> QuadraticIrrational:
        return QuadraticIrrational(self._u, -self._v, self._w, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._u * self._u - self._v * self._v * self._d, self._w * self._w)

    def trace(self) -> Fraction:
        return Fraction(2 * self._u, self._w)

    def sign(self) -> int:
        u, v, d = self._u, self._v, self._d
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0 or (u > 0) == (v > 0):
            return 1 if v > 0 else -1
        # Opposite signs: the larger square wins
        lhs, rhs = u * u, v * v * d
        if u > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def __floor__(self) -> int:
        return floor_surd(self._u, self._v, self._w, self._d)

    def floor(self) -> int:
        return floor_surd(self._u, self._v, self._w, self._d)

    def _coerce(self, other: object) -> QuadraticIrrational:
        if isinstance(other, QuadraticIrrational):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticIrrational.from_fraction(other)
        return NotImplemented

    def _aligned(self, other: QuadraticIrrational) -> Tuple[QuadraticIrrational, QuadraticIrrational]:
        """Rewrite both operands over a common radicand."""
        if other.is_rational or self._d == other._d:
            return self, other
        if self.is_rational:
            return self, other
        product = self._d * other._d
        if not is_square(product):
            raise ValueError(f"{self} and {other} lie in different quadratic fields")
        # sqrt(d2) = t / sqrt(d1) = t * sqrt(d1) / d1
        t = isqrt(product)
        moved = QuadraticIrrational(other._u * self._d, other._v * t, other._w * self._d, self._d)
        return self, moved

    def compatible(self, other: QuadraticIrrational) -> bool:
        try:
            self._aligned(other)
        except ValueError:
            return False
        return True

    def __add__(self, other: Number) -> QuadraticIrrational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        d = a._d if not a.is_rational else b._d
        return QuadraticIrrational(a._u * b._w + b._u * a._w, a._v * b._w + b._v * a._w, a._w * b._w, d)

    __radd__ = __add__

    def __neg__(self) -> QuadraticIrrational:
        return QuadraticIrrational(-self._u, -self._v, self._w, self._d)

    def __sub__(self, other: Number) -> QuadraticIrrational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> QuadraticIrrational:
        return (-self) + other

    def __mul__(self, other: Number) -> QuadraticIrrational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._aligned(other)
        d = a._d if not a.is_rational else b._d
        return QuadraticIrrational(
            a._u * b._u + a._v * b._v * d,
            a._u * b._v + a._v * b._u,
            a._w * b._w,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadraticIrrational:
        n = self._u * self._u - self._v * self._v * self._d
        if n == 0:
            raise DivisionByZero(f"cannot invert {self}")
        return QuadraticIrrational(self._w * self._u, -self._w * self._v, n, self._d)

    def __truediv__(self, other: Number) -> QuadraticIrrational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> QuadraticIrrational:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> QuadraticIrrational:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticIrrational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.compatible(other):
            return False
        return (self - other).sign() == 0

    def __lt__(self, other: Number) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.compatible(other):
            return (self - other).sign() < 0
        return (self.to_surd() - other.to_surd()).sign() < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self._u, self._w))
        return hash(self.quadruple())

    def to_surd(self):
        from markoff.arith.surd import SurdSum

        return SurdSum({1: Fraction(self._u, self._w), self._d: Fraction(self._v, self._w)})

    def decimal(self, digits: int) -> str:
        """
        Render the value rounded to nearest with ``digits`` digits after the point.

        Args:
            digits (int): Number of fractional digits.

        Returns:
            str: The decimal expansion.
        """

        scale = 10**digits
        n = floor_surd(2 * self._u * scale + self._w, 2 * self._v * scale, 2 * self._w, self._d)
        return _render_scaled(n, digits)

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps + 10):
            return mpmath.mpf(self.decimal(dps + 10))

    def __float__(self) -> float:
        return float(self.decimal(20))

    def __repr__(self) -> str:
        return f"QuadraticIrrational({self._u}, {self._v}, {self._w}, {self._d})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(Fraction(self._u, self._w))
        if abs(self._v) == 1:
            root = f"√{self._d}"
        else:
            root = f"{abs(self._v)}√{self._d}"
        op = "+" if self._v > 0 else "-"
        if self._u == 0:
            numerator = root if self._v > 0 else f"-{root}"
        else:
            numerator = f"{self._u}{op}{root}"
        if self._w == 1:
            return numerator
        return f"({numerator})/{self._w}"

    def format_quadruple(self) -> str:
        return "({},{},{},{})".format(*self.quadruple())


def _render_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def sqrt_of(n: int) -> QuadraticIrrational:
    """The exact square root of a positive integer."""
    return QuadraticIrrational(0, 1, 1, n)
