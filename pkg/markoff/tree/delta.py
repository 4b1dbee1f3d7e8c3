"""
The quantity 1/2 (e sqrt(D_f) + f sqrt(D_e)) with D_x = 9x^2 - 4, decided in integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from markoff.arith.surd import SurdSum
from markoff.errors import NotExtendable, PreconditionViolation
from markoff.report import CheckReport


def delta(x: int) -> int:
    return 9 * x * x - 4


@dataclass(frozen=True)
class DeltaValue:
    """
    Exact value of 1/2 (e sqrt(D_f) + f sqrt(D_e)).

    Attributes:
        e (int): First argument, e >= 1.
        f (int): Second argument, f >= 1.
    """

    e: int
    f: int

    def __post_init__(self) -> None:
        if self.e < 1 or self.f < 1:
            raise PreconditionViolation(f"DeltaValue needs positive arguments, got ({self.e}, {self.f})")

    def to_surd(self) -> SurdSum:
        return SurdSum({delta(self.f): Fraction(self.e, 2), delta(self.e): Fraction(self.f, 2)})

    def compare(self, x: Union[int, Fraction]) -> int:
        """
        Sign of value - x, found by squaring twice.

        With A = D_f, B = D_e and x = p/q the value exceeds x iff
        2ef sqrt(AB) q^2 > 4p^2 - q^2 (e^2 A + f^2 B) =: R.

        Args:
            x (Union[int, Fraction]): The rational to compare against.

        Returns:
            int: 1, 0 or -1.
        """

        x = Fraction(x)
        if x < 0:
            return 1
        p, q = x.numerator, x.denominator
        e, f = self.e, self.f
        big_a, big_b = delta(f), delta(e)
        r = 4 * p * p - q * q * (e * e * big_a + f * f * big_b)
        if r < 0:
            return 1
        lhs = 4 * q**4 * e * e * f * f * big_a * big_b
        rhs = r * r
        return (lhs > rhs) - (lhs < rhs)

    def floor(self) -> int:
        # Each scaled root is off by less than 1, so the floor is one of two candidates
        e, f = self.e, self.f
        n = (isqrt(e * e * delta(f)) + isqrt(f * f * delta(e))) // 2
        if self.compare(n + 1) >= 0:
            n += 1
        return n

    def decimal(self, digits: int) -> str:
        return self.to_surd().decimal(digits)


def third_element(e: int, f: int) -> int:
    """
    Largest element g of the regular triple containing e and f, as floor(Delta_{e,f}).

    Args:
        e (int): One element.
        f (int): The other element.

    Returns:
        int: g, verified against the Markoff equation.
    """

    g = DeltaValue(e, f).floor()
    if e * e + f * f + g * g != 3 * e * f * g:
        raise NotExtendable(f"({e}, {f}) does not extend to a regular Markoff triple")
    return g


def somewhat_sharp_bounds(e: int, g: int, f: int) -> CheckReport:
    """
    Check the bounds of the largest element against Delta_{e,f}.

    - Delta - ef/g < g < Delta, hence g = floor(Delta).
    - Delta - 2/(3g) < Delta - 2/(9ef) < g.
    - g + 2ef / (g sqrt(D_e) sqrt(D_f)) < Delta.
    - 9e^2 f^2 - 4(e^2 + f^2) = (g - G)^2 with G = 3ef - g.
    """
    value = DeltaValue(e, f)
    report = CheckReport("somewhat-sharp", payload=(e, g, f))
    report.add("lower", value.compare(g) > 0, f"g={g} < Delta")
    report.add("upper", value.compare(g + Fraction(e * f, g)) < 0, "Delta - ef/g < g")
    report.add("floor", value.floor() == g, f"floor(Delta) == {g}")
    report.add("sharp-upper", value.compare(g + Fraction(2, 9 * e * f)) < 0, "Delta - 2/(9ef) < g")
    report.add("sharp-order", Fraction(2, 3 * g) > Fraction(2, 9 * e * f), "2/(3g) > 2/(9ef)")

    big_a, big_b = delta(f), delta(e)
    margin = value.to_surd() - g - SurdSum({big_a * big_b: Fraction(2 * e * f, g * big_a * big_b)})
    report.add("sharp-lower", margin.sign() > 0, "g + 2ef/(g sqrt(D_e D_f)) < Delta")

    big_g = 3 * e * f - g
    report.equal("gap-square", 9 * e * e * f * f - 4 * (e * e + f * f), (g - big_g) ** 2)
    return report
