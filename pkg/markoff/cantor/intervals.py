"""
The intervals I_g = [B_e, A_f] and gaps J_g = (A_g, B_g) whose nested unions cut out both Cantor sets.

For an element x with weight r_x the gap is centred at r_x / x:
A_x, B_x = r_x / x -+ 1/2 (3 - sqrt(9 - 4 / x^2)). The T versions use w_x / x and three times the
radius, so every T endpoint is 3 * (R endpoint) - 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from markoff.arith.quadratic import QuadraticIrrational
from markoff.arith.surd import SurdSum
from markoff.cantor.limits import SPECTRA
from markoff.errors import CertificateFailure, PreconditionViolation, ResourceLimit
from markoff.report import CheckReport
from markoff.tree.delta import DeltaValue, delta
from markoff.tree.node import MarkoffNode, children, iter_below, iter_level, iter_tree

MAX_COVER_DEPTH = 16

COVER_COLUMNS = ("depth", "path", "lo_exact", "hi_exact", "lo_dec", "hi_dec")


@dataclass(frozen=True)
class SpectrumInterval:
    """
    A closed interval I_g or an open gap J_g with exact endpoints.

    Attributes:
        kind (str): "I" (closed) or "J" (open).
        path (str): Path of the node the interval belongs to.
        lo (QuadraticIrrational): Left endpoint.
        hi (QuadraticIrrational): Right endpoint.
        spectrum (str): "R" or "T".
    """

    kind: str
    path: str
    lo: QuadraticIrrational
    hi: QuadraticIrrational
    spectrum: str

    @property
    def closed(self) -> bool:
        return self.kind == "I"

    def length(self) -> SurdSum:
        return self.hi.to_surd() - self.lo.to_surd()

    def contains(self, other: "SpectrumInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        left, right = ("[", "]") if self.closed else ("(", ")")
        return f"{left}{self.lo}, {self.hi}{right}"


def _check_spectrum(spectrum: str) -> str:
    spectrum = spectrum.upper()
    if spectrum not in SPECTRA:
        raise PreconditionViolation(f"spectrum must be one of {SPECTRA}, got {spectrum!r}")
    return spectrum


def endpoint_a(x: int, r: int, spectrum: str = "R") -> QuadraticIrrational:
    """A_x = (2 r_x - 3x + sqrt(D_x)) / (2x), or (2 w_x - 9x + 3 sqrt(D_x)) / (2x) for T."""
    if spectrum == "R":
        return QuadraticIrrational(2 * r - 3 * x, 1, 2 * x, delta(x))
    return QuadraticIrrational(2 * r - 9 * x, 3, 2 * x, delta(x))


def endpoint_b(x: int, r: int, spectrum: str = "R") -> QuadraticIrrational:
    if spectrum == "R":
        return QuadraticIrrational(2 * r + 3 * x, -1, 2 * x, delta(x))
    return QuadraticIrrational(2 * r + 9 * x, -3, 2 * x, delta(x))


def _weights(node: MarkoffNode, spectrum: str):
    return node.r if spectrum == "R" else node.w


def intervals(node: MarkoffNode, spectrum: str = "R") -> Tuple[SpectrumInterval, SpectrumInterval]:
    """
    The closed interval I_g and the open gap J_g of a node.

    Args:
        node (MarkoffNode): The node (e, g, f).
        spectrum (str): "R" for the weights r, "T" for the T-weights w.

    Returns:
        Tuple[SpectrumInterval, SpectrumInterval]: I_g = [B_e, A_f] and J_g = (A_g, B_g).
    """

    spectrum = _check_spectrum(spectrum)
    x_e, x_g, x_f = _weights(node, spectrum)
    big_i = SpectrumInterval(
        "I", node.path, endpoint_b(node.e, x_e, spectrum), endpoint_a(node.f, x_f, spectrum), spectrum
    )
    big_j = SpectrumInterval(
        "J", node.path, endpoint_a(node.g, x_g, spectrum), endpoint_b(node.g, x_g, spectrum), spectrum
    )
    return big_i, big_j


def interval_length(node: MarkoffNode, spectrum: str = "R") -> SurdSum:
    """|I_g| = (Delta_{e,f} - g) / (ef), three times that for T."""
    scale = 1 if spectrum.upper() == "R" else 3
    return (DeltaValue(node.e, node.f).to_surd() - node.g) * Fraction(scale, node.e * node.f)


def gap_length(x: int, spectrum: str = "R") -> SurdSum:
    """|J_x| = (3x - sqrt(D_x)) / x, three times that for T."""
    scale = 1 if spectrum.upper() == "R" else 3
    return SurdSum({1: 3 * scale, delta(x): Fraction(-scale, x)})


def interval_checks(node: MarkoffNode, spectrum: str = "R") -> CheckReport:
    """Endpoint order and both closed-form lengths."""
    big_i, big_j = intervals(node, spectrum)
    report = CheckReport("intervals", payload=node.path or "-")
    report.add("I-order", big_i.lo < big_i.hi, str(big_i))
    report.add("J-order", big_j.lo < big_j.hi, str(big_j))
    report.equal("I-length", big_i.length(), interval_length(node, spectrum))
    report.equal("J-length", big_j.length(), gap_length(node.g, spectrum))
    report.add("J-inside", big_i.lo < big_j.lo and big_j.hi < big_i.hi, f"{big_j} in {big_i}")
    return report


def cover(
    depth: int, spectrum: str = "R", cap: int = MAX_COVER_DEPTH, progress: bool = False
) -> List[SpectrumInterval]:
    """
    The 2^depth intervals of C_depth, from left to right.

    Args:
        depth (int): Tree level.
        spectrum (str): "R" or "T".
        cap (int): Largest depth allowed.
        progress (bool): Show a progress bar.

    Returns:
        List[SpectrumInterval]: The closed intervals I_g of the level.
    """

    if depth < 0:
        raise PreconditionViolation(f"depth must be >= 0, got {depth}")
    if depth > cap:
        raise ResourceLimit(f"cover depth {depth} exceeds the cap {cap}")
    spectrum = _check_spectrum(spectrum)
    nodes = tqdm(iter_level(depth), total=2**depth, desc=f"C_{depth}", disable=not progress, leave=False)
    return [intervals(node, spectrum)[0] for node in nodes]


def cover_rows(
    depth: int, spectrum: str = "R", digits: int = 20, cap: int = MAX_COVER_DEPTH
) -> Iterator[List[str]]:
    """CSV rows ``depth,path,lo_exact,hi_exact,lo_dec,hi_dec`` with (u,v,w,d) quadruples."""
    for interval in cover(depth, spectrum, cap):
        yield [
            str(depth),
            interval.path or "-",
            interval.lo.format_quadruple(),
            interval.hi.format_quadruple(),
            interval.lo.decimal(digits),
            interval.hi.decimal(digits),
        ]


def nesting_checks(depth: int, spectrum: str = "R") -> CheckReport:
    """I_child is inside I_parent minus J_parent, and the children share the gap's endpoints."""
    report = CheckReport("nesting", payload=(depth, spectrum))
    for node in iter_tree(depth - 1) if depth > 0 else []:
        big_i, big_j = intervals(node, spectrum)
        left, right = (intervals(child, spectrum)[0] for child in children(node))
        report.equal(f"left-lo[{node.path or '-'}]", left.lo, big_i.lo)
        report.equal(f"left-hi[{node.path or '-'}]", left.hi, big_j.lo)
        report.equal(f"right-lo[{node.path or '-'}]", right.lo, big_j.hi)
        report.equal(f"right-hi[{node.path or '-'}]", right.hi, big_i.hi)
        report.add(f"nonempty[{node.path or '-'}]", left.lo < left.hi and right.lo < right.hi)
    return report


def _sum_lengths(radicands: Dict[int, Fraction], rational: Fraction) -> SurdSum:
    terms: Dict[int, Fraction] = dict(radicands)
    terms[1] = terms.get(1, Fraction(0)) + rational
    return SurdSum(terms)


def cover_length(depth: int, spectrum: str = "R") -> SurdSum:
    """Total length of C_depth, summed exactly."""
    scale = 1 if spectrum.upper() == "R" else 3
    radicands: Dict[int, Fraction] = {}
    rational = Fraction(0)
    for node in iter_level(depth):
        e, f = node.e, node.f
        # (1/2 (e sqrt(D_f) + f sqrt(D_e)) - g) / (ef)
        for d, c in ((delta(f), Fraction(scale, 2 * f)), (delta(e), Fraction(scale, 2 * e))):
            radicands[d] = radicands.get(d, Fraction(0)) + c
        rational -= Fraction(scale * node.g, e * f)
    return _sum_lengths(radicands, rational)


def _gap_terms(gs) -> SurdSum:
    radicands: Dict[int, Fraction] = {}
    rational = Fraction(0)
    for g in gs:
        radicands[delta(g)] = radicands.get(delta(g), Fraction(0)) - Fraction(1, g)
        rational += 3
    return _sum_lengths(radicands, rational)


def _leading_gaps() -> SurdSum:
    return SurdSum({1: 6, 5: -1, 8: -1})


def gap_sum(depth: int) -> SurdSum:
    """
    (3 - sqrt 5) + (3 - sqrt 8) + 2 sum (3 - sqrt(9 - 4/g^2)) over the nodes above ``depth``.

    The partial sums increase to 1; depth 0 keeps only the two leading terms.
    """
    if depth < 0:
        raise PreconditionViolation(f"depth must be >= 0, got {depth}")
    gs = [node.g for node in iter_tree(depth - 1)] if depth > 0 else []
    return _leading_gaps() + _gap_terms(gs) * 2


def gap_sum_below(bound: int) -> SurdSum:
    return _leading_gaps() + _gap_terms(node.g for node in iter_below(bound)) * 2


def gap_sum_checks(depth: int) -> CheckReport:
    """Partial gap sums increase, stay below 1 and equal 1 - 2 |C_depth|."""
    report = CheckReport("gap-sum", payload=depth)
    previous: Optional[SurdSum] = None
    for k in range(depth + 1):
        current = gap_sum(k)
        report.add(f"below-one[{k}]", current < 1, current.decimal(12))
        if previous is not None:
            report.add(f"increasing[{k}]", previous < current)
        report.equal(f"cover[{k}]", current, 1 - cover_length(k) * 2)
        previous = current
    return report


def measure_certificate(depth: int, spectrum: str = "R", progress: bool = False) -> CheckReport:
    """
    Certify |I_g| < 3 |J_g| and Delta_{e,f} < g + 2/(3g) at every node up to ``depth``.

    Raises:
        CertificateFailure: At the first node where a bound fails.
    """

    spectrum = _check_spectrum(spectrum)
    report = CheckReport("measure-certificate", payload=(depth, spectrum))
    total = 2 ** (depth + 1) - 1
    nodes = tqdm(iter_tree(depth), total=total, desc="certificate", disable=not progress, leave=False)
    for node in nodes:
        label = node.path or "-"
        ratio = interval_length(node, spectrum) < gap_length(node.g, spectrum) * 3
        report.add(f"ratio[{label}]", ratio, "|I| < 3|J|")
        if not ratio:
            raise CertificateFailure(node.path, "|I_g| >= 3|J_g|")
        sharp = DeltaValue(node.e, node.f).compare(node.g + Fraction(2, 3 * node.g)) < 0
        report.add(f"sharp[{label}]", sharp, "Delta < g + 2/(3g)")
        if not sharp:
            raise CertificateFailure(node.path, "Delta_{e,f} >= g + 2/(3g)")
    return report


def affine_map_check(depth: int) -> CheckReport:
    """Every T endpoint up to ``depth`` is 3 * (R endpoint) - 1."""
    report = CheckReport("affine-map", payload=depth)
    for node in iter_tree(depth):
        for r_interval, t_interval in zip(intervals(node, "R"), intervals(node, "T")):
            tag = f"{r_interval.kind}[{node.path or '-'}]"
            report.equal(f"lo-{tag}", t_interval.lo, r_interval.lo * 3 - 1)
            report.equal(f"hi-{tag}", t_interval.hi, r_interval.hi * 3 - 1)
    return report
