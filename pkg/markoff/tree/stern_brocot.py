"""
Stern-Brocot indexing of the Markoff tree.

The Stern-Brocot triple (1/0, 1/1, 0/1) sits at the root; L replaces (a, b, c) by (a, a+b, b) and R by
(b, b+c, c), so L moves towards larger fractions. The middle fraction of the triple at a path indexes
the largest element of the Markoff triple at the same path.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Tuple

from markoff.errors import NotCoprime, PreconditionViolation
from markoff.tree.node import MarkoffNode, check_path, node_at

_FRACTION = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


@dataclass(frozen=True)
class SBFraction:
    """
    Nonnegative fraction mu/nu in lowest terms, 1/0 included.

    Attributes:
        mu (int): Numerator.
        nu (int): Denominator.
    """

    mu: int
    nu: int

    def __post_init__(self) -> None:
        if self.mu < 0 or self.nu < 0 or (self.mu == 0 and self.nu == 0):
            raise PreconditionViolation(f"invalid Stern-Brocot fraction {self.mu}/{self.nu}")
        if gcd(self.mu, self.nu) != 1:
            raise NotCoprime(f"{self.mu}/{self.nu} is not in lowest terms")

    @classmethod
    def parse(cls, text: str) -> "SBFraction":
        match = _FRACTION.match(text)
        if match is None:
            raise PreconditionViolation(f"not a fraction mu/nu: {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def mediant(self, other: "SBFraction") -> "SBFraction":
        return SBFraction(self.mu + other.mu, self.nu + other.nu)

    def __lt__(self, other: "SBFraction") -> bool:
        return self.mu * other.nu < other.mu * self.nu

    def __gt__(self, other: "SBFraction") -> bool:
        return other < self

    def __str__(self) -> str:
        return f"{self.mu}/{self.nu}"


INFINITY = SBFraction(1, 0)
ONE = SBFraction(1, 1)
ZERO = SBFraction(0, 1)

SBTriple = Tuple[SBFraction, SBFraction, SBFraction]


def sb_root() -> SBTriple:
    return INFINITY, ONE, ZERO


def sb_step(triple: SBTriple, direction: str) -> SBTriple:
    a, b, c = triple
    if direction == "L":
        return a, a.mediant(b), b
    return b, b.mediant(c), c


def triple_of_path(path: str) -> SBTriple:
    triple = sb_root()
    for letter in check_path(path):
        triple = sb_step(triple, letter)
    return triple


def fraction_of_path(path: str) -> SBFraction:
    return triple_of_path(path)[1]


def path_of_fraction(frac: SBFraction) -> str:
    """
    The L/R word leading to ``frac`` in the Stern-Brocot tree.

    Args:
        frac (SBFraction): A fraction with mu, nu >= 1.

    Returns:
        str: The word; empty for 1/1.
    """

    if frac.mu < 1 or frac.nu < 1:
        raise PreconditionViolation(f"{frac} is not inside the Stern-Brocot tree")
    triple = sb_root()
    letters = []
    while triple[1] != frac:
        direction = "L" if frac > triple[1] else "R"
        letters.append(direction)
        triple = sb_step(triple, direction)
    return "".join(letters)


def sb_split(frac: SBFraction) -> Tuple[SBFraction, SBFraction]:
    """
    The two lattice vectors in [0, mu] x [0, nu] summing to (mu, nu) and forming a basis with it.

    They are the outer fractions of the Stern-Brocot triple of ``frac``, the larger value first.
    """
    triple = triple_of_path(path_of_fraction(frac))
    return triple[0], triple[2]


def markoff_of_fraction(frac: SBFraction) -> int:
    """m_{mu/nu}: 1 for 1/0, 2 for 0/1, and the largest element at the matching path otherwise."""
    if frac == INFINITY:
        return 1
    if frac == ZERO:
        return 2
    return node_at(path_of_fraction(frac)).g


def node_of_fraction(frac: SBFraction) -> MarkoffNode:
    return node_at(path_of_fraction(frac))


def weight_of_fraction(frac: SBFraction) -> int:
    """r_{mu/nu} with r_{1/0} = 0 and r_{0/1} = 1."""
    if frac == INFINITY:
        return 0
    if frac == ZERO:
        return 1
    return node_of_fraction(frac).r[1]
