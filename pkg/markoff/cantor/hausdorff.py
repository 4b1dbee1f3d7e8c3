"""
Ratios d_WX = |I_WX| / |I_W| of nested interval lengths and the local Hausdorff partial products.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import List, Tuple, Union

import mpmath

from markoff.arith.surd import START_BITS, SurdSum
from markoff.cantor.intervals import interval_length
from markoff.errors import PreconditionViolation
from markoff.report import CheckReport
from markoff.tree.delta import delta
from markoff.tree.node import MarkoffNode, check_path, children, iter_tree, node_at


@dataclass(frozen=True)
class SurdRatio:
    """
    Quotient of two positive multi-radical sums, kept exact.

    Attributes:
        num (SurdSum): Numerator.
        den (SurdSum): Denominator, positive.
    """

    num: SurdSum
    den: SurdSum

    def enclosure(self, bits: int) -> Tuple[Fraction, Fraction]:
        lo_n, hi_n = self.num.enclosure(bits)
        lo_d, hi_d = self.den.enclosure(bits)
        if lo_d <= 0 or lo_n < 0:
            return Fraction(0), Fraction(-1)
        return lo_n / hi_d, hi_n / lo_d

    def _narrow(self, accept) -> Tuple[Fraction, Fraction]:
        bits = START_BITS
        while True:
            lo, hi = self.enclosure(bits)
            if lo <= hi and accept(lo, hi):
                return lo, hi
            bits *= 2

    def compare(self, x: Union[int, Fraction, SurdSum]) -> int:
        """Sign of value - x, decided exactly."""
        return (self.num - self.den * x).sign()

    def decimal(self, digits: int) -> str:
        """Round to nearest with ``digits`` fractional digits."""
        scale = 10**digits
        half = Fraction(1, 2)
        lo, _ = self._narrow(lambda lo, hi: floor(lo * scale + half) == floor(hi * scale + half))
        n = floor(lo * scale + half)
        whole, frac = divmod(n, scale)
        return f"{whole}.{frac:0{digits}d}" if digits else str(whole)

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        """Value with ``dps`` significant digits, however small it is."""
        tolerance = Fraction(1, 10 ** (dps + 2))
        lo, _ = self._narrow(lambda lo, hi: lo > 0 and hi - lo < lo * tolerance)
        with mpmath.workdps(dps + 10):
            return mpmath.mpf(lo.numerator) / lo.denominator

    def __float__(self) -> float:
        return float(self.to_mpf(17))


@dataclass(frozen=True)
class DRatios:
    """
    Both ratios at the node reached by a word.

    Attributes:
        path (str): The word W.
        left (SurdRatio): d_WL.
        right (SurdRatio): d_WR.
    """

    path: str
    left: SurdRatio
    right: SurdRatio

    def gap_share(self) -> SurdRatio:
        """1 - d_WL - d_WR, the share of I_W taken by the gap J_W."""
        return SurdRatio(self.left.den - self.left.num - self.right.num, self.left.den)


def _ratios(node: MarkoffNode) -> DRatios:
    whole = interval_length(node)
    left, right = (interval_length(child) for child in children(node))
    return DRatios(node.path, SurdRatio(left, whole), SurdRatio(right, whole))


def d_ratios(word: str) -> DRatios:
    """
    d_WL and d_WR for the node at the finite word W.

    Args:
        word (str): Path over L and R.

    Returns:
        DRatios: Exact ratios; render them with ``decimal`` or ``to_mpf``.
    """

    return _ratios(node_at(word))


def d_bound(node: MarkoffNode) -> SurdSum:
    """sqrt(D_e) f / (3 e^2 g), the decreasing bound on d_WL along L*."""
    return SurdSum({delta(node.e): Fraction(node.f, 3 * node.e * node.e * node.g)})


def d_bound_check(node: MarkoffNode) -> CheckReport:
    """Certify d_WL < sqrt(D_e) f / (3 e^2 g)."""
    ratio = _ratios(node).left
    report = CheckReport("d-bound", payload=node.path or "-")
    report.add("left", ratio.compare(d_bound(node)) < 0, "d_WL < sqrt(D_e) f / (3e^2 g)")
    return report


def d_ratio_checks(depth: int) -> CheckReport:
    """d_L + d_R < 1 and the bound on d_L at every node up to ``depth``."""
    report = CheckReport("d-ratios", payload=depth)
    for node in iter_tree(depth):
        ratios = _ratios(node)
        label = node.path or "-"
        report.add(f"sum[{label}]", ratios.gap_share().num.sign() > 0, "d_L + d_R < 1")
        report.add(f"bound[{label}]", ratios.left.compare(d_bound(node)) < 0, "d_L bound")
    return report


def h_partial_products(word: str, s: float, dps: int = 30) -> List[mpmath.mpf]:
    """
    Running products of d_{W|i L}^s + d_{W|i R}^s over the prefixes W|0, ..., W|n of the word.

    Args:
        word (str): Finite path.
        s (float): Exponent, s > 0.
        dps (int): Working precision in decimal digits.

    Returns:
        List[mpmath.mpf]: One product per prefix.
    """

    if s <= 0:
        raise PreconditionViolation(f"the exponent s must be positive, got {s}")
    word = check_path(word)
    products = []
    with mpmath.workdps(dps):
        total = mpmath.mpf(1)
        exponent = mpmath.mpf(s)
        for i in range(len(word) + 1):
            ratios = d_ratios(word[:i])
            term = ratios.left.to_mpf(dps) ** exponent + ratios.right.to_mpf(dps) ** exponent
            total *= term
            products.append(+total)
    return products
