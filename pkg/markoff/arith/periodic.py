"""
Eventually periodic continued fractions and their quadratic values.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterator, List, Tuple

from markoff.arith.continuants import continuant, format_cf, kl, parse_cf
from markoff.arith.quadratic import QuadraticIrrational
from markoff.arith.radicals import floor_surd, is_square
from markoff.errors import NotIrrational, PreconditionViolation
from markoff.report import CheckReport

_PERIODIC = re.compile(r"^\s*(?:([\d,\s]*?),?\s*)?\(([\d,\s]+)\)\*\s*$")


def primitive_period(period: List[int]) -> List[int]:
    """Shortest word whose repetition gives ``period``."""
    n = len(period)
    for size in range(1, n + 1):
        if n % size == 0 and period[:size] * (n // size) == period:
            return period[:size]
    return period


@dataclass(frozen=True)
class PeriodicCF:
    """
    The expansion [c_1, ..., c_k, overline(a_1, ..., a_n)].

    Instances are canonical: the period is primitive and the preperiod is as short as possible.

    Attributes:
        preperiod (Tuple[int, ...]): Digits before the period.
        period (Tuple[int, ...]): The repeating digits.
    """

    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise PreconditionViolation("period must be nonempty")
        if any(a < 1 for a in self.period) or any(a < 1 for a in self.preperiod[1:]):
            raise PreconditionViolation("continued fraction digits after the first must be >= 1")
        period = primitive_period(list(self.period))
        preperiod = list(self.preperiod)
        while preperiod and preperiod[-1] == period[-1]:
            preperiod.pop()
            period = [period[-1]] + period[:-1]
        object.__setattr__(self, "preperiod", tuple(preperiod))
        object.__setattr__(self, "period", tuple(period))

    @classmethod
    def pure(cls, period) -> "PeriodicCF":
        return cls((), tuple(period))

    @property
    def is_pure(self) -> bool:
        return not self.preperiod

    def digit(self, i: int) -> int:
        """The i-th digit, 0-based."""
        k = len(self.preperiod)
        if i < k:
            return self.preperiod[i]
        return self.period[(i - k) % len(self.period)]

    def digits(self, count: int) -> List[int]:
        return [self.digit(i) for i in range(count)]

    def iter_prefixes(self, limit: int = 10_000) -> Iterator[List[int]]:
        for count in range(1, limit + 1):
            yield self.digits(count)

    def shifted(self, k: int) -> "PeriodicCF":
        """Pure expansion with the period rotated left by k."""
        k %= len(self.period)
        return PeriodicCF.pure(self.period[k:] + self.period[:k])

    def reversed(self) -> "PeriodicCF":
        return PeriodicCF.pure(tuple(reversed(self.period)))

    def __str__(self) -> str:
        return format_periodic(self)


def format_periodic(pcf: PeriodicCF) -> str:
    """Text form such as ``2,(1,1,2,2)*``."""
    body = f"({format_cf(pcf.period)})*"
    if pcf.preperiod:
        return f"{format_cf(pcf.preperiod)},{body}"
    return body


def parse_periodic(text: str) -> PeriodicCF:
    match = _PERIODIC.match(text)
    if match is None:
        raise PreconditionViolation(f"not a periodic continued fraction: {text!r}")
    head, period = match.groups()
    return PeriodicCF(tuple(parse_cf(head or "")), tuple(parse_cf(period)))


def format_display_period(period: Tuple[int, ...]) -> str:
    """Period repeated to an even length of at least two, the way the spectrum tables print it."""
    period = list(period)
    while len(period) < 2 or len(period) % 2:
        period = period + list(period)
    return format_cf(period)


def periodic_to_quadratic(pcf: PeriodicCF) -> QuadraticIrrational:
    """
    Exact value of an eventually periodic continued fraction.

    The purely periodic part xi solves B_n xi^2 + (B_{n-1} - A_n) xi - A_{n-1} = 0 with
    A_i = K(a_1..a_i), B_i = K(a_2..a_i); the preperiod then acts by its convergent matrix.

    Args:
        pcf (PeriodicCF): The expansion.

    Returns:
        QuadraticIrrational: The value.
    """

    a = list(pcf.period)
    n = len(a)
    big_a, big_a1 = kl(a, 1, n), kl(a, 1, n - 1)
    big_b, big_b1 = kl(a, 2, n - 1), kl(a, 2, n - 2)
    b = big_a - big_b1
    # Reduce to the primitive minimal polynomial
    g = gcd(gcd(big_b, b), big_a1)
    big_b, b, big_a1 = big_b // g, b // g, big_a1 // g
    xi = QuadraticIrrational(b, 1, 2 * big_b, b * b + 4 * big_a1 * big_b)

    c = list(pcf.preperiod)
    if not c:
        return xi
    k = len(c)
    p, p1 = kl(c, 1, k), kl(c, 1, k - 1)
    q, q1 = kl(c, 2, k - 1), kl(c, 2, k - 2)
    return (xi * p + p1) / (xi * q + q1)


def quadratic_to_periodic(x: QuadraticIrrational) -> PeriodicCF:
    """
    Continued fraction of a quadratic irrational.

    Runs the complete quotient recursion on exact states (P, Q) with x_i = (P + sqrt(D)) / Q and
    Q | D - P^2. The first repeated state marks the start of the period, so the preperiod is minimal
    and the period primitive.

    Args:
        x (QuadraticIrrational): The value; must be irrational.

    Returns:
        PeriodicCF: The expansion.
    """

    if not isinstance(x, QuadraticIrrational):
        x = QuadraticIrrational.from_fraction(x)
    u, v, w, d = x.quadruple()
    if v == 0 or is_square(d):
        raise NotIrrational(f"{x} is rational")
    big_d = v * v * d
    big_p, big_q = (u, w) if v > 0 else (-u, -w)
    if (big_d - big_p * big_p) % big_q:
        big_p *= abs(big_q)
        big_d *= big_q * big_q
        big_q *= abs(big_q)

    seen = {}
    digits: List[int] = []
    while (big_p, big_q) not in seen:
        seen[(big_p, big_q)] = len(digits)
        if big_q > 0:
            a = floor_surd(big_p, 1, big_q, big_d)
        else:
            a = floor_surd(-big_p, -1, -big_q, big_d)
        digits.append(a)
        big_p = a * big_q - big_p
        big_q = (big_d - big_p * big_p) // big_q
    start = seen[(big_p, big_q)]
    return PeriodicCF(tuple(digits[:start]), tuple(digits[start:]))


def shift_and_reverse_checks(pcf: PeriodicCF, k: int = None) -> CheckReport:
    """
    Verify the cyclic-shift and reversed-period formulas exactly.

    For xi = [overline(a_1..a_n)] and each shift k (or only the given one) this checks
    sigma = (A_{k-1} - xi B_{k-1}) / (xi B_k - A_k) = [overline(a_{k+1}..a_n, a_1..a_k)],
    sigma = K(a_{k+1}..a_n, xi) / K(a_{k+2}..a_n, xi), eta = -1/conj(xi) = [overline(a_n..a_1)]
    and both expressions of tau = [overline(a_k..a_1, a_n..a_{k+1})].

    Args:
        pcf (PeriodicCF): A purely periodic expansion.
        k (int): Shift to check; all shifts 0..n-1 when omitted.

    Returns:
        CheckReport: One clause per identity and shift.
    """

    if not pcf.is_pure:
        raise PreconditionViolation("shift and reverse checks need a purely periodic expansion")
    a = list(pcf.period)
    n = len(a)
    xi = periodic_to_quadratic(pcf)
    xi_bar = xi.conjugate()
    eta = -1 / xi_bar
    report = CheckReport("shift-reverse", payload=format_periodic(pcf))
    report.equal("reverse", eta, periodic_to_quadratic(pcf.reversed()))

    shifts = range(n) if k is None else [k]
    for s in shifts:
        if not 0 <= s < n:
            raise PreconditionViolation(f"shift {s} outside 0..{n - 1}")
        sigma = periodic_to_quadratic(pcf.shifted(s))
        if s == 0:
            report.equal("shift1[k=0]", xi, sigma)
        else:
            lhs = (kl(a, 1, s - 1) - xi * kl(a, 2, s - 2)) / (xi * kl(a, 2, s - 1) - kl(a, 1, s))
            report.equal(f"shift1[k={s}]", lhs, sigma)
        tail = a[s:] + [xi]
        report.equal(f"shift2[k={s}]", continuant(tail) / continuant(tail[1:]), sigma)

        tau = periodic_to_quadratic(PeriodicCF.pure(tuple(reversed(a[:s])) + tuple(reversed(a[s:]))))
        middle = (kl(a, s + 2, n - s - 1) - eta * kl(a, s + 2, n - s - 2)) / (
            eta * kl(a, s + 1, n - s - 1) - kl(a, s + 1, n - s)
        )
        report.equal(f"reverse-shift[k={s}]", middle, tau)
        conj_tail = a[s:] + [xi_bar]
        report.equal(f"reverse-shift-conj[k={s}]", -continuant(conj_tail[1:]) / continuant(conj_tail), tau)
    return report
