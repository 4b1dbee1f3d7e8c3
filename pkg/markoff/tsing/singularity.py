"""
T-singularities 1/n^2 (1, nk - 1), their length encodings and Hirzebruch-Jung chains.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from markoff.arith.continuants import eval_hj, eval_regular, hj_digits, regular_digits
from markoff.errors import DegenerateLE, IdentityViolation, NotCoprime, PreconditionViolation, RangeError
from markoff.report import CheckReport
from markoff.tree.node import iter_level, mirror, node_at


@dataclass(frozen=True)
class TSingularity:
    """
    The pair (n, k) of the singularity 1/n^2 (1, nk - 1).

    Attributes:
        n (int): Order root, n > 1.
        k (int): Coprime residue with 0 < k < n.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 2 or not 0 < self.k < self.n:
            raise PreconditionViolation(f"need n > 1 and 0 < k < n, got ({self.n}, {self.k})")
        if gcd(self.n, self.k) != 1:
            raise NotCoprime(f"({self.n}, {self.k}) are not coprime")

    @property
    def is_normal(self) -> bool:
        return self.k < self.n - self.k or self.n == 2

    def normalized(self) -> "TSingularity":
        """Representative with k < n - k; both share the LE."""
        if self.is_normal:
            return self
        return TSingularity(self.n, self.n - self.k)

    def quotient(self) -> Fraction:
        """n^2 / (nk - 1)."""
        return Fraction(self.n * self.n, self.n * self.k - 1)

    def __str__(self) -> str:
        return f"({self.n},{self.k})"


def pair_from_le(le: Sequence[int]) -> TSingularity:
    """
    Fold an LE into its pair: c_1 gives (c_1 + 2, 1), then each c_i maps (n, k) to (n + c_i (n - k), n - k).

    Args:
        le (Sequence[int]): Entries c_1, ..., c_m, each >= 1.

    Returns:
        TSingularity: The pair; (2, 1) for the empty LE.
    """

    if any(c < 1 for c in le):
        raise PreconditionViolation(f"LE entries must be positive, got {list(le)}")
    if not le:
        return TSingularity(2, 1)
    n, k = le[0] + 2, 1
    for c in le[1:]:
        n, k = n + c * (n - k), n - k
    return TSingularity(n, k)


def le_from_pair(t: TSingularity) -> List[int]:
    """Invert pair_from_le by division with remainder."""
    if not t.is_normal:
        raise PreconditionViolation(f"le_from_pair needs k < n - k, got {t}")
    n, k = t.n, t.k
    reversed_le = []
    while k > 1:
        c = (n - k) // k
        reversed_le.append(c)
        n = n - c * k
        n, k = n, n - k
    if n > 2:
        reversed_le.append(n - 2)
    return reversed_le[::-1]


def cf_of_pair(t: TSingularity) -> Tuple[List[int], bool]:
    """
    Regular continued fraction of n/k read off the LE as [c_m + 1, c_{m-1}, ..., c_2, c_1 + 1].

    Returns:
        Tuple[List[int], bool]: The digits and whether the LE was degenerate (m <= 1), in which
        case the plain expansion of n/k is returned.
    """
    t = t.normalized()
    le = le_from_pair(t)
    if len(le) <= 1:
        return regular_digits(Fraction(t.n, t.k)), True
    digits = [le[-1] + 1] + le[-2:0:-1] + [le[0] + 1]
    if eval_regular(digits) != Fraction(t.n, t.k):
        raise IdentityViolation("le-continued-fraction", str(t))
    return digits, False


def cf_of_pair_strict(t: TSingularity) -> List[int]:
    digits, degenerate = cf_of_pair(t)
    if degenerate:
        raise DegenerateLE(f"the LE of {t} has fewer than two entries")
    return digits


def ksb_trace(le: Sequence[int]) -> List[List[int]]:
    """
    Chains produced by the blocks of moves, starting from [[4]].

    A block c either prepends c twos and adds c to the last entry, when the first entry is not 2,
    or adds c to the first entry and appends c twos.
    """
    chain = [4]
    trace = [list(chain)]
    for c in le:
        if c < 1:
            raise PreconditionViolation(f"LE entries must be positive, got {list(le)}")
        if chain[0] != 2 and chain[-1] == 2:
            chain = [2] * c + chain[:-1] + [chain[-1] + c]
        else:
            chain = [chain[0] + c] + chain[1:] + [2] * c
        trace.append(list(chain))
    return trace


def hj_of_tsing(t: TSingularity) -> List[int]:
    """
    Hirzebruch-Jung expansion of n^2/(nk - 1) by replaying the LE as moves.

    Args:
        t (TSingularity): The pair; k may be on either side of n/2.

    Returns:
        List[int]: Digits, all >= 2.
    """

    chain = ksb_trace(le_from_pair(t.normalized()))[-1]
    target = t.quotient()
    if eval_hj(chain) != target:
        chain = chain[::-1]
    if eval_hj(chain) != target or chain != hj_digits(target):
        raise IdentityViolation("ksb-chain", str(t))
    return chain


def hj_label(hj: Sequence[int]) -> str:
    """Intersection graph of the resolution, e.g. "-5 — -2"."""
    return " — ".join(f"-{a}" for a in hj)


def branch_le(kind: str, n: int) -> List[int]:
    """
    LE of g^2/(g w_g - 1) on a branch.

    Fibonacci (n >= 3): 3, (1,5)_{n-2} for even n and (1,5)_{n-1} for odd n.
    Pell (n >= 1): 6, (4,8)_{n-2}, 3 for even n and (4,8)_{n-1}, 3 for odd n.
    """
    from markoff.tsing.square import pattern

    kind = kind.lower()
    if kind == "fibonacci":
        if n < 3:
            raise RangeError(f"Fibonacci LE formula needs n >= 3, got {n}")
        return [3] + pattern([1, 5], n - 2) if n % 2 == 0 else pattern([1, 5], n - 1)
    if kind == "pell":
        if n < 1:
            raise RangeError(f"Pell LE formula needs n >= 1, got {n}")
        return [6] + pattern([4, 8], n - 2) + [3] if n % 2 == 0 else pattern([4, 8], n - 1) + [3]
    raise PreconditionViolation(f"unknown branch {kind!r}")


def le_of_node_path(path: str) -> List[int]:
    node = node_at(path)
    return le_from_pair(TSingularity(node.g, node.w[1]).normalized())


def opposite_le_sum(path: str) -> CheckReport:
    """LEs at a path and at its mirror have equal length and add up to [7, 9, ..., 9, 8]."""
    if not path:
        raise PreconditionViolation("the root is its own mirror")
    left, right = le_of_node_path(path), le_of_node_path(mirror(path))
    report = CheckReport("opposite-le", payload=path)
    report.equal("length", len(left), len(right))
    if len(left) == len(right):
        expected = [7] + [9] * (len(left) - 2) + [8] if len(left) > 1 else [8]
        report.equal("sum", [a + b for a, b in zip(left, right)], expected)
    return report


def opposite_le_checks(depth: int) -> CheckReport:
    report = CheckReport("opposite-le-levels", payload=depth)
    for level in range(1, depth + 1):
        for node in iter_level(level):
            if node.path[0] == "L":
                report.extend(opposite_le_sum(node.path))
    return report
