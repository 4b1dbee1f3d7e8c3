"""
Limit points of m/r (spectrum R) and g/w (spectrum T) along eventually constant infinite paths.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from markoff.arith.continuants import is_convergent, regular_digits
from markoff.arith.periodic import PeriodicCF, periodic_to_quadratic, quadratic_to_periodic
from markoff.arith.quadratic import QuadraticIrrational
from markoff.errors import IdentityViolation, PreconditionViolation, UnsupportedPath
from markoff.report import CheckReport
from markoff.tree.branches import fibonacci, pell
from markoff.tree.node import MarkoffNode, check_path, iter_tree, mirror, node_at, root
from markoff.tsing.square import square_cf_of_node

SPECTRA = ("R", "T")

_TAIL = re.compile(r"^\s*([LRlr]*)\s*(?:\(([LRlr])\)|([LRlr])(?:\*|\u0304|bar))\s*$")


@dataclass(frozen=True)
class LimitPoint:
    """
    Exact limit along an infinite path of the form p X X X ...

    Attributes:
        path (str): The path, written with its tail as ``LR*``.
        value (QuadraticIrrational): The limit.
        expansion (PeriodicCF): Its continued fraction.
        spectrum (str): "R" for m/r and "T" for g/w.
    """

    path: str
    value: QuadraticIrrational
    expansion: PeriodicCF
    spectrum: str

    def decimal(self, digits: int = 30) -> str:
        return self.value.decimal(digits)


@dataclass(frozen=True)
class SpectrumEntry:
    """A purely periodic value of the spectrum tables together with the period it is printed with."""

    value: QuadraticIrrational
    period: Tuple[int, ...]


def _check_spectrum(spectrum: str) -> str:
    spectrum = spectrum.upper()
    if spectrum not in SPECTRA:
        raise PreconditionViolation(f"spectrum must be one of {SPECTRA}, got {spectrum!r}")
    return spectrum


def parse_tail_path(text: str) -> Tuple[str, str]:
    """
    Split a path such as ``LR*``, ``L(R)`` or ``LR̄`` into its finite part and the repeated letter.

    Trailing copies of the tail letter are absorbed, so ``LRR*`` and ``LR*`` give ("L", "R").

    Raises:
        UnsupportedPath: When no tail marker is present.
    """

    match = _TAIL.match(text)
    if match is None:
        raise UnsupportedPath(f"{text!r} has no tail marker; only paths pX* have exact limits")
    prefix = check_path(match.group(1))
    tail = (match.group(2) or match.group(3)).upper()
    while prefix.endswith(tail):
        prefix = prefix[:-1]
    return prefix, tail


def format_tail_path(prefix: str, tail: str) -> str:
    return f"{prefix}{tail}*"


def _inner_word(node: MarkoffNode) -> List[int]:
    """S with g/r_g = [2, S, 2]."""
    digits = regular_digits(Fraction(node.g, node.r[1]))
    if len(digits) < 2 or digits[0] != 2 or digits[-1] != 2:
        raise IdentityViolation("frobenius-shape", node.path or "-")
    return digits[1:-1]


def _left_value(g: int, x: int, y: int, spectrum: str) -> QuadraticIrrational:
    # x, y are (r, s) for R and (w, v) for T
    if spectrum == "R":
        return QuadraticIrrational.half(3 * g - 2 * x, 1, 3 * x - y, 9 * g * g - 4)
    return QuadraticIrrational.half(9 * g - 2 * x, 3, 9 * x - y, 9 * g * g - 4)


def _right_value(g: int, x: int, y: int, spectrum: str) -> QuadraticIrrational:
    if spectrum == "R":
        return QuadraticIrrational.half(3 * g + 2 * x, 1, 3 * x + y, 9 * g * g - 4)
    return QuadraticIrrational.half(9 * g + 2 * x, 3, 9 * x + y, 9 * g * g - 4)


def _decorations(node: MarkoffNode, spectrum: str) -> Tuple[int, int]:
    if spectrum == "R":
        return node.r[1], node.s[1]
    return node.w[1], node.v[1]


def left_period(node: MarkoffNode, spectrum: str) -> Tuple[int, ...]:
    """Period of the limit along pLR*: 2, S, 1, 1, 2 (R) or a_1..a_{2s-1}, a_{2s} - 1, 1, 8 (T)."""
    if spectrum == "R":
        return tuple([2] + _inner_word(node) + [1, 1, 2])
    a = list(square_cf_of_node(node).digits)
    return tuple(a[:-1] + [a[-1] - 1, 1, 8])


def right_period(node: MarkoffNode, spectrum: str) -> Tuple[int, ...]:
    """Period b with limit 1 + [b*] along pRL*: 1, S, 2, 2, 1 (R) or a_{2s} - 1, ..., a_1, 8, 1 (T)."""
    if spectrum == "R":
        return tuple([1] + _inner_word(node) + [2, 2, 1])
    a = list(square_cf_of_node(node).digits)
    return tuple([a[-1] - 1] + a[-2::-1] + [8, 1])


def _one_plus_pure(period: Tuple[int, ...]) -> PeriodicCF:
    return PeriodicCF((period[0] + 1,), tuple(period[1:]) + (period[0],))


def limit_point(path: str, spectrum: str = "R") -> LimitPoint:
    """
    Exact limit of m/r (or g/w) along a path pX*.

    Args:
        path (str): Finite word followed by a tail marker, e.g. ``LR*``.
        spectrum (str): "R" or "T".

    Returns:
        LimitPoint: The value, cross-checked against its periodic expansion.
    """

    spectrum = _check_spectrum(spectrum)
    prefix, tail = parse_tail_path(path)
    if not prefix:
        # Fibonacci and Pell branches
        if tail == "L":
            value = QuadraticIrrational.half(3, 1, 1, 5)
        else:
            value = QuadraticIrrational(1, 1, 1, 2)
        if spectrum == "T":
            value = 1 / (3 / value - 1)
        return LimitPoint(format_tail_path(prefix, tail), value, quadratic_to_periodic(value), spectrum)

    node = node_at(prefix[:-1])
    x, y = _decorations(node, spectrum)
    if tail == "R":
        value = _left_value(node.g, x, y, spectrum)
        expansion = PeriodicCF.pure(left_period(node, spectrum))
    else:
        value = _right_value(node.g, x, y, spectrum)
        expansion = _one_plus_pure(right_period(node, spectrum))
    if periodic_to_quadratic(expansion) != value:
        raise IdentityViolation("limit-expansion", format_tail_path(prefix, tail))
    return LimitPoint(format_tail_path(prefix, tail), value, expansion, spectrum)


def spectrum_pair(node: MarkoffNode, spectrum: str = "R") -> Tuple[SpectrumEntry, SpectrumEntry]:
    """
    The two table entries at a node: the limit along pLR* and the limit along pRL* minus one.

    Args:
        node (MarkoffNode): Node at the finite path p.
        spectrum (str): "R" or "T".

    Returns:
        Tuple[SpectrumEntry, SpectrumEntry]: Both values with their pure periods.
    """

    spectrum = _check_spectrum(spectrum)
    x, y = _decorations(node, spectrum)
    left = SpectrumEntry(_left_value(node.g, x, y, spectrum), left_period(node, spectrum))
    right = SpectrumEntry(_right_value(node.g, x, y, spectrum) - 1, right_period(node, spectrum))
    return left, right


def root_spectrum(spectrum: str = "R") -> Tuple[SpectrumEntry, SpectrumEntry]:
    """
    The root row of the spectrum tables.

    The left value is the left-limit formula at the singular element 2 and the right value the
    right-limit formula at the element 1, minus one; they equal the limits along R* and L* (minus one).
    """
    spectrum = _check_spectrum(spectrum)
    top = root()
    x_f, y_f = (top.r[2], top.s[2]) if spectrum == "R" else (top.w[2], top.v[2])
    x_e, y_e = (top.r[0], top.s[0]) if spectrum == "R" else (top.w[0], top.v[0])
    left = _left_value(top.f, x_f, y_f, spectrum)
    right = _right_value(top.e, x_e, y_e, spectrum) - 1
    return (
        SpectrumEntry(left, quadratic_to_periodic(left).period),
        SpectrumEntry(right, quadratic_to_periodic(right).period),
    )


def convergent_check(path: str, count: int = 10) -> CheckReport:
    """
    Every m/r along the path, up to ``count`` tail steps, is a convergent of the R-limit.

    Args:
        path (str): Path with a tail marker.
        count (int): Number of tail letters to unroll.

    Returns:
        CheckReport: One clause per prefix.
    """

    point = limit_point(path, "R")
    prefix, tail = parse_tail_path(path)
    word = prefix + tail * count
    report = CheckReport("convergents", payload=point.path)
    for i in range(len(word) + 1):
        node = node_at(word[:i])
        ratio = Fraction(node.g, node.r[1])
        report.add(word[:i] or "-", is_convergent(ratio, point.value), str(ratio))
    return report


def branch_limit_checks(count: int = 10) -> CheckReport:
    """
    Limits along L^n R* and R^n L* against their closed forms.

    L^n R*: [(2, 1_{2n}, 2)*] = 1/2 (3F_{2n+3} - 2F_{2n+1} + sqrt(9F_{2n+3}^2 - 4)) / (3F_{2n+1} - F_{2n-1}).
    R^n L*: 1 + [(1, 2_{2n}, 1)*] = 1/2 (3P_{2n+1} + 2P_{2n} + sqrt(9P_{2n+1}^2 - 4)) / (3P_{2n} + P_{2n-1}).
    """
    report = CheckReport("branch-limits", payload=count)
    for n in range(count + 1):
        point = limit_point("L" * n + "R*")
        big, mid, low = fibonacci(2 * n + 3), fibonacci(2 * n + 1), fibonacci(2 * n - 1)
        closed = QuadraticIrrational.half(3 * big - 2 * mid, 1, 3 * mid - low, 9 * big * big - 4)
        report.equal(f"fibonacci[{n}]", point.value, closed)
        report.equal(f"fibonacci-cf[{n}]", point.expansion, PeriodicCF.pure([2] + [1] * (2 * n) + [2]))

        point = limit_point("R" * n + "L*")
        big, mid, low = pell(2 * n + 1), pell(2 * n), pell(2 * n - 1)
        closed = QuadraticIrrational.half(3 * big + 2 * mid, 1, 3 * mid + low, 9 * big * big - 4)
        report.equal(f"pell[{n}]", point.value, closed)
        report.equal(f"pell-cf[{n}]", point.expansion, _one_plus_pure(tuple([1] + [2] * (2 * n) + [1])))
    return report


def period_complement_checks(depth: int) -> CheckReport:
    """Periods at mirrored nodes add up pointwise to 3 (R) and 9 (T)."""
    report = CheckReport("period-complement", payload=depth)
    for node in iter_tree(depth):
        other = node_at(mirror(node.path))
        for spectrum, total in (("R", 3), ("T", 9)):
            left = left_period(node, spectrum)
            right = right_period(other, spectrum)
            report.add(
                f"{spectrum}[{node.path or '-'}]",
                len(left) == len(right) and all(a + b == total for a, b in zip(left, right)),
                f"{left} + {right}",
            )
    return report


def limit_affine_checks(depth: int) -> CheckReport:
    """1/l_T = 3/l_R - 1 for both limits below every node."""
    report = CheckReport("limit-affine", payload=depth)
    for node in iter_tree(depth):
        for tail, letter in (("R", "L"), ("L", "R")):
            path = format_tail_path(node.path + letter, tail)
            r_value = limit_point(path, "R").value
            t_value = limit_point(path, "T").value
            report.equal(path, 1 / t_value, 3 / r_value - 1)
    return report
