"""
Continued fractions of m_{mu/nu} / r_{mu/nu} built from the floor differences kappa(i).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from markoff.arith.continuants import canonical_digits, eval_regular, regular_digits
from markoff.errors import NotCoprime, NotRecognized, PreconditionViolation, RangeError
from markoff.report import CheckReport
from markoff.tree.branches import fibonacci
from markoff.tree.node import MarkoffNode, node_at
from markoff.tree.stern_brocot import SBFraction, path_of_fraction, sb_split


def _check_pair(mu: int, nu: int) -> None:
    if mu < 1 or nu < 1:
        raise PreconditionViolation(f"mu and nu must be positive, got ({mu}, {nu})")
    if gcd(mu, nu) != 1:
        raise NotCoprime(f"({mu}, {nu}) are not coprime")


def kappa(i: int, mu: int, nu: int) -> int:
    if nu <= 1 or not 1 <= i < nu:
        raise RangeError(f"kappa({i}) needs nu > 1 and 1 <= i < nu, got nu={nu}")
    return (i * mu) // nu - ((i - 1) * mu) // nu


def segment_kappas(mu: int, nu: int) -> List[int]:
    """Number of 1,1 pairs in each Fibonacci segment: kappa(1), ..., kappa(nu-1), kappa(1)."""
    _check_pair(mu, nu)
    if nu == 1:
        return [mu - 1]
    ks = [kappa(i, mu, nu) for i in range(1, nu)]
    return ks + [ks[0]]


def frobenius_word(mu: int, nu: int) -> List[int]:
    """
    The word S(mu, nu) between the framing 2s.

    S(mu, 1) = 1_{2mu-2}; for nu > 1 the word is 1_{2kappa(1)}, 2, 2, 1_{2kappa(2)}, ..., 2, 2, 1_{2kappa(1)}.
    """
    word: List[int] = []
    for j, k in enumerate(segment_kappas(mu, nu)):
        if j:
            word += [2, 2]
        word += [1] * (2 * k)
    return word


@dataclass(frozen=True)
class FrobeniusCF:
    """
    Expansion [2, S(mu, nu), 2] of m_{mu/nu} / r_{mu/nu}.

    Attributes:
        mu (int): Numerator of the Stern-Brocot index.
        nu (int): Denominator of the Stern-Brocot index.
        digits (Tuple[int, ...]): The full expansion.
    """

    mu: int
    nu: int
    digits: Tuple[int, ...]

    @property
    def value(self) -> Fraction:
        return eval_regular(self.digits)

    @property
    def markoff(self) -> int:
        return self.value.numerator

    @property
    def weight(self) -> int:
        return self.value.denominator

    @property
    def coweight(self) -> int:
        m, r = self.markoff, self.weight
        s, rest = divmod(r * r + 1, m)
        if rest:
            raise NotRecognized(f"r^2 + 1 is not divisible by m for {self.mu}/{self.nu}")
        return s

    @property
    def word(self) -> Tuple[int, ...]:
        return self.digits[1:-1]


def frobenius_cf(mu: int, nu: int) -> FrobeniusCF:
    _check_pair(mu, nu)
    return FrobeniusCF(mu, nu, tuple([2] + frobenius_word(mu, nu) + [2]))


def swap_digits(digits) -> List[int]:
    """Exchange 1 and 2."""
    return [3 - a for a in digits]


def complement(mu: int, nu: int) -> FrobeniusCF:
    """Expansion for nu/mu, obtained by exchanging 1 and 2 inside S(mu, nu)."""
    source = frobenius_cf(mu, nu)
    return FrobeniusCF(nu, mu, tuple([2] + swap_digits(source.word) + [2]))


def fibonacci_segments(mu: int, nu: int) -> List[List[int]]:
    return [[2] + [1] * (2 * k) + [2] for k in segment_kappas(mu, nu)]


def segment_values(mu: int, nu: int) -> List[Fraction]:
    """[2, 1_{2k}, 2] = F_{2k+5} / F_{2k+3} for each segment."""
    return [Fraction(fibonacci(2 * k + 5), fibonacci(2 * k + 3)) for k in segment_kappas(mu, nu)]


def recursion_check(mu: int, nu: int) -> CheckReport:
    """
    S(mu, nu) = S(mu1, nu1), 2, 2, 1, 1, S(mu2, nu2) = S(mu2, nu2), 1, 1, 2, 2, S(mu1, nu1).

    The parts are the Stern-Brocot split of mu/nu, the larger fraction first.
    """
    _check_pair(mu, nu)
    if mu < 2 or nu < 2:
        raise PreconditionViolation(f"the recursion needs mu, nu > 1, got ({mu}, {nu})")
    first, second = sb_split(SBFraction(mu, nu))
    s = frobenius_word(mu, nu)
    s1 = frobenius_word(first.mu, first.nu)
    s2 = frobenius_word(second.mu, second.nu)
    report = CheckReport("frobenius-recursion", payload=(mu, nu))
    report.equal("left", s, s1 + [2, 2, 1, 1] + s2)
    report.equal("right", s, s2 + [1, 1, 2, 2] + s1)
    return report


def frobenius_checks(mu: int, nu: int) -> CheckReport:
    """Shape, counts and agreement with the tree."""
    cf = frobenius_cf(mu, nu)
    digits = list(cf.digits)
    report = CheckReport("frobenius", payload=(mu, nu))
    report.equal("length", len(digits), 2 * (mu + nu - 1))
    report.equal("ones", digits.count(1), 2 * (mu - 1))
    report.equal("twos", digits.count(2), 2 * nu)
    report.equal("palindrome", digits, digits[::-1])
    report.equal("segments", len(fibonacci_segments(mu, nu)), nu)
    node = node_at(path_of_fraction(SBFraction(mu, nu)))
    report.equal("markoff", cf.markoff, node.g)
    report.equal("weight", cf.weight, node.r[1])
    report.equal("coweight", cf.coweight, node.s[1])
    report.equal("complement", list(complement(nu, mu).digits), list(frobenius_cf(mu, nu).digits))
    return report


def _split_segments(digits: List[int]) -> List[int]:
    """Read [2, 1_{2k_1}, 2, 2, 1_{2k_2}, 2, ...] back into k_1, k_2, ..."""
    ks = []
    i, n = 0, len(digits)
    while i < n:
        if digits[i] != 2:
            raise NotRecognized("segment does not open with 2")
        i += 1
        ones = 0
        while i < n and digits[i] == 1:
            ones += 1
            i += 1
        if i == n or digits[i] != 2 or ones % 2:
            raise NotRecognized("segment is not of the form 2, 1_{2k}, 2")
        ks.append(ones // 2)
        i += 1
    return ks


def reconstruct_triple(m: int, r: int) -> Tuple[MarkoffNode, SBFraction]:
    """
    Recover mu/nu and the decorated triple from a Markoff number and its weight.

    Args:
        m (int): Markoff number, m >= 5.
        r (int): Its weight.

    Returns:
        Tuple[MarkoffNode, SBFraction]: The node with largest element m and its index.
    """

    if m < 5 or not 0 < r < m:
        raise PreconditionViolation(f"reconstruct_triple needs m >= 5 and 0 < r < m, got ({m}, {r})")
    digits = canonical_digits(regular_digits(Fraction(m, r)))
    ks = _split_segments(digits)
    nu = len(ks)
    mu = 1 + sum(ks)
    if gcd(mu, nu) != 1 or frobenius_cf(mu, nu).digits != tuple(digits):
        raise NotRecognized(f"{m}/{r} = [{','.join(map(str, digits))}] is not a Frobenius expansion")
    frac = SBFraction(mu, nu)
    node = node_at(path_of_fraction(frac))
    if node.g != m or node.r[1] != r:
        raise NotRecognized(f"({m}, {r}) does not match the tree at {frac}")
    return node, frac
