"""
Fibonacci and Pell branches of the tree and the growth of decorations along a branch.
"""

from typing import Dict, List, Tuple

from markoff.arith.quadratic import QuadraticIrrational
from markoff.errors import PreconditionViolation, RangeError
from markoff.report import CheckReport
from markoff.tree.delta import delta
from markoff.tree.node import MarkoffNode, node_at

BRANCHES = ("fibonacci", "pell")


def _recurrence(x0: int, x1: int, a: int, i: int) -> int:
    """Term i of X_i = a X_{i-1} + X_{i-2}, negative indices included."""
    if i >= 0:
        for _ in range(i):
            x0, x1 = x1, a * x1 + x0
        return x0
    for _ in range(-i):
        x0, x1 = x1 - a * x0, x0
    return x0


def fibonacci(i: int) -> int:
    return _recurrence(0, 1, 1, i)


def lucas(i: int) -> int:
    return _recurrence(2, 1, 1, i)


def pell(i: int) -> int:
    return _recurrence(0, 1, 2, i)


def pell_q(i: int) -> int:
    return _recurrence(1, 4, 2, i)


def pell_r(i: int) -> int:
    return _recurrence(0, 2, 2, i)


def pell_s(i: int) -> int:
    return _recurrence(1, 1, 2, i)


SEQUENCES = {
    "F": fibonacci,
    "L": lucas,
    "P": pell,
    "Q": pell_q,
    "R": pell_r,
    "S": pell_s,
}


def branch_path(kind: str, n: int) -> str:
    kind = kind.lower()
    if kind == "fibonacci":
        if n < 2:
            raise RangeError(f"the Fibonacci branch starts at n = 2, got {n}")
        return "L" * (n - 2)
    if kind == "pell":
        if n < 1:
            raise RangeError(f"the Pell branch starts at n = 1, got {n}")
        return "R" * (n - 1)
    raise PreconditionViolation(f"unknown branch {kind!r}, expected one of {BRANCHES}")


def branch(kind: str, n: int) -> MarkoffNode:
    """
    Closed-form decorated node on a branch.

    Fibonacci (n >= 2): (1, F_{2n+1}, F_{2n-1}) with r = (0, F_{2n-1}, F_{2n-3}),
    s = (1, F_{2n-3}, F_{2n-5}), w = (-1, F_{2n-3}, F_{2n-5}), v = (10, F_{2n-7}, F_{2n-9}).

    Pell (n >= 1): (P_{2n-1}, P_{2n+1}, 2) with r = (P_{2n-2}, P_{2n}, 1), s = (P_{2n-3}, P_{2n-1}, 1),
    w = (S_{2n-3}, S_{2n-1}, 1), v = (R_{2n-5}, R_{2n-3}, 5).

    Args:
        kind (str): "fibonacci" or "pell".
        n (int): Index on the branch.

    Returns:
        MarkoffNode: The node, equal to node_at(branch_path(kind, n)).
    """

    path = branch_path(kind, n)
    if kind.lower() == "fibonacci":
        F = fibonacci
        return MarkoffNode(
            1,
            F(2 * n + 1),
            F(2 * n - 1),
            r=(0, F(2 * n - 1), F(2 * n - 3)),
            s=(1, F(2 * n - 3), F(2 * n - 5)),
            w=(-1, F(2 * n - 3), F(2 * n - 5)),
            v=(10, F(2 * n - 7), F(2 * n - 9)),
            path=path,
        )
    P, R, S = pell, pell_r, pell_s
    return MarkoffNode(
        P(2 * n - 1),
        P(2 * n + 1),
        2,
        r=(P(2 * n - 2), P(2 * n), 1),
        s=(P(2 * n - 3), P(2 * n - 1), 1),
        w=(S(2 * n - 3), S(2 * n - 1), 1),
        v=(R(2 * n - 5), R(2 * n - 3), 5),
        path=path,
    )


def complementary_weights(kind: str, n: int) -> Tuple[int, int, int]:
    """
    (e - w_e, g - w_g, f - w_f): (2, L_{2n-1}, L_{2n-3}) on the Fibonacci branch and
    (Q_{2n-3}, Q_{2n-1}, 1) on the Pell branch.
    """
    branch_path(kind, n)
    if kind.lower() == "fibonacci":
        return 2, lucas(2 * n - 1), lucas(2 * n - 3)
    return pell_q(2 * n - 3), pell_q(2 * n - 1), 1


def branch_checks(kind: str, n: int) -> CheckReport:
    node = branch(kind, n)
    walked = node_at(node.path)
    report = CheckReport(f"branch-{kind.lower()}", payload=n)
    report.equal("node", node, walked)
    complement = tuple(x - w for x, w in zip(walked.triple, walked.w))
    report.equal("complementary-weights", complement, complementary_weights(kind, n))
    return report


def _side_terms(node: MarkoffNode, side: str, decoration: str) -> Tuple[int, int, int, int]:
    """(x_{-1}, x_0, x_1, k) for the recurrence x_{i+1} = 3k x_i - x_{i-1}."""
    x_e, x_g, x_f = node.decoration(decoration)
    side = side.upper()
    if side == "E":
        return x_e, x_g, 3 * node.f * x_g - x_e, node.f
    if side == "F":
        return x_f, x_g, 3 * node.e * x_g - x_f, node.e
    raise PreconditionViolation(f"side must be E or F, got {side!r}")


def growth_coefficients(
    node: MarkoffNode, side: str, decoration: str = "m"
) -> Tuple[QuadraticIrrational, QuadraticIrrational, QuadraticIrrational, QuadraticIrrational]:
    """
    Closed form x_i = lam_+ base_+^i + lam_- base_-^i along repeated mutation on one side.

    Side E iterates R (base (3f +- sqrt(D_f))/2), side F iterates L (base (3e +- sqrt(D_e))/2), and
    lam_+- = 1/2 (x_0 +- (x_1 - x_{-1}) / sqrt(D)).

    Args:
        node (MarkoffNode): Starting node.
        side (str): "E" or "F".
        decoration (str): One of "m", "r", "s", "w", "v".

    Returns:
        Tuple: (lam_+, lam_-, base_+, base_-).
    """

    x_prev, x0, x1, k = _side_terms(node, side, decoration)
    d = delta(k)
    lam_plus = QuadraticIrrational(x0 * d, x1 - x_prev, 2 * d, d)
    lam_minus = QuadraticIrrational(x0 * d, x_prev - x1, 2 * d, d)
    base_plus = QuadraticIrrational(3 * k, 1, 2, d)
    base_minus = QuadraticIrrational(3 * k, -1, 2, d)
    return lam_plus, lam_minus, base_plus, base_minus


def growth_sequence(node: MarkoffNode, side: str, count: int, decoration: str = "m") -> List[int]:
    """x_0, ..., x_{count-1} from the recurrence."""
    x_prev, x0, _, k = _side_terms(node, side, decoration)
    values = []
    for _ in range(count):
        values.append(x0)
        x_prev, x0 = x0, 3 * k * x0 - x_prev
    return values


def growth_checks(node: MarkoffNode, count: int = 11) -> CheckReport:
    """Closed forms against the recurrence, and the recurrence against the tree, for every decoration."""
    report = CheckReport("growth", payload=node.path or "-")
    for side, letter in (("E", "R"), ("F", "L")):
        for decoration in ("m", "r", "s", "w", "v"):
            lam_plus, lam_minus, base_plus, base_minus = growth_coefficients(node, side, decoration)
            values = growth_sequence(node, side, count, decoration)
            for i, value in enumerate(values):
                closed = lam_plus * base_plus**i + lam_minus * base_minus**i
                report.equal(f"{side}[{decoration}][{i}]", closed, value)
        walked = node
        for i, value in enumerate(growth_sequence(node, side, min(count, 6))):
            report.equal(f"{side}-tree[{i}]", walked.g, value)
            walked = node_at(walked.path + letter)
    return report


def sequence_table(count: int, start: int = 0) -> Dict[str, List[int]]:
    return {name: [seq(i) for i in range(start, start + count)] for name, seq in SEQUENCES.items()}
