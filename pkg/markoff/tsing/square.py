"""
Continued fractions of n^2/(nk - 1) and their behaviour along the Markoff tree.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Sequence

from markoff.arith.continuants import eval_regular, regular_digits
from markoff.errors import IdentityViolation, InvalidSquareCF, PreconditionViolation, RangeError
from markoff.report import CheckReport
from markoff.tree.branches import fibonacci, pell, pell_s
from markoff.tree.node import MarkoffNode, iter_tree
from markoff.tsing.singularity import TSingularity, le_from_pair, pair_from_le

ALPHABET = frozenset({1, 3, 4, 5, 6, 8})


@dataclass(frozen=True)
class SquareCF:
    """
    Expansion [a_1, ..., a_{2s}] of g^2/(gw - 1) with a_1, a_{2s} > 1.

    Attributes:
        digits (tuple): The digits.
        g (int): The order root.
        w (int): The residue with w < g - w.
        v (Optional[int]): (w^2 + 9)/g when it is an integer.
        note (str): Set when the input needed canonicalization.
    """

    digits: tuple
    g: int
    w: int
    v: Optional[int] = None
    note: str = ""

    @property
    def s(self) -> int:
        return len(self.digits) // 2

    @property
    def big_w(self) -> int:
        return self.g - self.w

    @property
    def big_v(self) -> Optional[int]:
        if self.v is None:
            return None
        return self.v + self.g - 2 * self.w

    def value(self) -> Fraction:
        return eval_regular(self.digits)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.digits) + "]"


def _coweight(g: int, w: int) -> Optional[int]:
    v, rest = divmod(w * w + 9, g)
    return None if rest else v


def square_cf(t: TSingularity) -> SquareCF:
    """
    Almost palindromic expansion of n^2/(nk - 1).

    With n/k = [c_1, ..., c_s]: for even s the middle is c_s - 1, c_s + 1, for odd s it is
    c_s + 1, c_s - 1, and the outer digits are mirrored.

    Args:
        t (TSingularity): The pair; k is replaced by min(k, n - k).

    Returns:
        SquareCF: The expansion, verified by evaluation.
    """

    note = ""
    if not t.is_normal:
        note = f"k replaced by n - k = {t.n - t.k}"
        t = t.normalized()
    if t.n == 2:
        raise PreconditionViolation("(2, 1) has no square expansion with k < n - k")
    c = regular_digits(Fraction(t.n, t.k))
    s = len(c)
    if s % 2 == 0:
        middle = [c[-1] - 1, c[-1] + 1]
    else:
        middle = [c[-1] + 1, c[-1] - 1]
    digits = c[:-1] + middle + c[-2::-1]
    if eval_regular(digits) != t.quotient():
        raise IdentityViolation("palindromic-split", str(t))
    return SquareCF(tuple(digits), t.n, t.k, _coweight(t.n, t.k), note)


def related_cfs(t: TSingularity) -> Dict[str, List[int]]:
    """Expansions of n^2/(nk + 1), n^2/(n(n-k) + 1) and n^2/(n(n-k) - 1) derived from the square one."""
    sq = square_cf(t)
    a = list(sq.digits)
    n, k = sq.g, sq.w
    related = {
        "nk-1": a,
        "nk+1": a[::-1],
        "n(n-k)+1": [1, a[0] - 1] + a[1:],
        "n(n-k)-1": [1, a[-1] - 1] + a[-2::-1],
    }
    denominators = {
        "nk-1": n * k - 1,
        "nk+1": n * k + 1,
        "n(n-k)+1": n * (n - k) + 1,
        "n(n-k)-1": n * (n - k) - 1,
    }
    for name, digits in related.items():
        if eval_regular(digits) != Fraction(n * n, denominators[name]):
            raise IdentityViolation(f"related[{name}]", str(t))
    return related


def append8_suite(sq: SquareCF) -> CheckReport:
    """The eight expansions obtained by appending 8, against their closed forms."""
    g, w, v = sq.g, sq.w, sq.v
    if v is None:
        raise PreconditionViolation(f"w^2 + 9 is not divisible by g for {sq}")
    big_w, big_v = sq.big_w, sq.big_v
    if not w < big_w:
        raise PreconditionViolation("append8 needs w < g - w")
    a = list(sq.digits)
    rev = a[::-1]
    gg = 9 * g * g
    clauses = {
        "i": (a + [8], Fraction(gg - g * big_w + 1, 8 * g * w + g * v - 17)),
        "ii": (a[:-1] + [a[-1] - 1, 1, 8], Fraction(gg - g * w - 1, 9 * g * w - g * v)),
        "iii": ([1, a[0] - 1] + a[1:] + [8], Fraction(gg - g * big_w + 1, 9 * g * big_w - g * big_v + 18)),
        "iv": (
            [1, a[0] - 1] + a[1:-1] + [a[-1] - 1, 1, 8],
            Fraction(gg - g * w - 1, 8 * g * big_w + g * big_v - 1),
        ),
        "v": (rev + [8], Fraction(gg - g * big_w - 1, 8 * g * w + g * v - 1)),
        "vi": (rev[:-1] + [rev[-1] - 1, 1, 8], Fraction(gg - g * w + 1, 9 * g * w - g * v + 18)),
        "vii": ([1, rev[0] - 1] + rev[1:] + [8], Fraction(gg - g * big_w - 1, 9 * g * big_w - g * big_v)),
        "viii": (
            [1, rev[0] - 1] + rev[1:-1] + [rev[-1] - 1, 1, 8],
            Fraction(gg - g * w + 1, 8 * g * big_w + g * big_v - 17),
        ),
    }
    report = CheckReport("append8", payload=str(sq))
    for name, (digits, closed) in clauses.items():
        report.equal(name, eval_regular(digits), closed)
    return report


def square_from_digits(digits: Sequence[int]) -> SquareCF:
    """Recover (g, w) from digits that evaluate to g^2/(gw - 1)."""
    value = eval_regular(digits)
    g = isqrt(value.numerator)
    if g * g != value.numerator or (value.denominator + 1) % g:
        raise InvalidSquareCF(f"[{','.join(map(str, digits))}] is not of the form g^2/(gw - 1)")
    w = (value.denominator + 1) // g
    return SquareCF(tuple(digits), g, w, _coweight(g, w))


def juxtapose(sq_e: SquareCF, sq_f: SquareCF) -> SquareCF:
    """
    Square expansion of the middle element from those of e and f.

    [a_{2s}, ..., a_1, 8, 1, b_{2t} - 1, b_{2t-1}, ..., b_1].
    """
    if sq_e.g <= 1 or sq_f.g <= 2:
        raise PreconditionViolation("juxtapose needs e > 1 and f > 2; use a branch seed")
    a, b = list(sq_e.digits), list(sq_f.digits)
    digits = a[::-1] + [8, 1, b[-1] - 1] + b[-2::-1]
    return square_from_digits(digits)


def pattern(xs: Sequence[int], n: int) -> List[int]:
    """(a_0, ..., a_{m-1})_n: the first n terms of the cyclic repetition."""
    if n < 0:
        raise RangeError(f"pattern length must be >= 0, got {n}")
    if not xs:
        if n:
            raise RangeError("cannot repeat an empty sequence")
        return []
    return [xs[j % len(xs)] for j in range(n)]


def insert(x: int, k: int, xs: Sequence[int]) -> List[int]:
    """Place x so that it becomes the k-th entry (1-based)."""
    if not 1 <= k <= len(xs) + 1:
        raise RangeError(f"insert position {k} outside 1..{len(xs) + 1}")
    return list(xs[: k - 1]) + [x] + list(xs[k - 1 :])


def branch_seed(kind: str, n: int) -> SquareCF:
    """
    Square expansion on a branch.

    Fibonacci (n >= 3, g = F_{2n+1}): [3 inserted at n into 6, (1,5)_{2n-5}, 6].
    Pell (n >= 1, g = P_{2n+1}): [6 inserted at n into (4,8)_{2n-1}].
    """
    kind = kind.lower()
    if kind == "fibonacci":
        if n < 3:
            raise RangeError(f"Fibonacci seed needs n >= 3, got {n}")
        digits = insert(3, n, [6] + pattern([1, 5], 2 * n - 5) + [6])
        g, w = fibonacci(2 * n + 1), fibonacci(2 * n - 3)
    elif kind == "pell":
        if n < 1:
            raise RangeError(f"Pell seed needs n >= 1, got {n}")
        digits = insert(6, n, pattern([4, 8], 2 * n - 1))
        g, w = pell(2 * n + 1), pell_s(2 * n - 1)
    else:
        raise PreconditionViolation(f"unknown branch {kind!r}")
    sq = square_from_digits(digits)
    if (sq.g, sq.w) != (g, w):
        raise IdentityViolation(f"branch-seed[{kind}]", n)
    return sq


def branch_mutation_seed(kind: str, n: int) -> SquareCF:
    """
    Square expansion of the first triple off a branch.

    Fibonacci (n >= 3): the triple (F_{2n+1}, 3F_{2n-1}F_{2n+1} - 1, F_{2n-1}).
    Pell (n >= 1): the triple (P_{2n-1}, 3P_{2n-1}P_{2n+1} - 2, P_{2n+1}).
    """
    kind = kind.lower()
    if kind == "fibonacci":
        if n < 3:
            raise RangeError(f"Fibonacci mutation seed needs n >= 3, got {n}")
        tail = pattern([1, 5], 2 * n - 5)
        inner = insert(3, n - 1, [6] + tail + [6, 8] + tail + [6])
        digits = insert(3, 3 * n - 2, inner)
        g = 3 * fibonacci(2 * n - 1) * fibonacci(2 * n + 1) - 1
    elif kind == "pell":
        if n < 1:
            raise RangeError(f"Pell mutation seed needs n >= 1, got {n}")
        head = insert(6, n, pattern([4, 8], 2 * n - 2))
        digits = insert(6, 3 * n + 1, head + [1, 3] + pattern([8, 4], 2 * n - 2))
        g = 3 * pell(2 * n - 1) * pell(2 * n + 1) - 2
    else:
        raise PreconditionViolation(f"unknown branch {kind!r}")
    sq = square_from_digits(digits)
    if sq.g != g:
        raise IdentityViolation(f"mutation-seed[{kind}]", n)
    return sq


def le_of_square(sq: SquareCF) -> List[int]:
    """
    LE read off one half of the square expansion.

    Odd s: a_s - 2, a_{s-1}, ..., a_2, a_1 - 1 (for s = 1 the other half, a_2 - 1).
    Even s: a_s, ..., a_2, a_1 - 1.
    """
    a = list(sq.digits)
    if len(a) % 2 or not a or a[0] < 2 or a[-1] < 2:
        raise InvalidSquareCF(f"{sq} is not an even expansion with outer digits > 1")
    s = len(a) // 2
    if s == 1:
        le = [a[1] - 1]
        other = le
    elif s % 2:
        le = [a[s - 1] - 2] + a[s - 2 : 0 : -1] + [a[0] - 1]
        other = a[s : 2 * s - 1] + [a[-1] - 1]
    else:
        le = a[s - 1 : 0 : -1] + [a[0] - 1]
        other = [a[s] - 2] + a[s + 1 : 2 * s - 1] + [a[-1] - 1]
    if le != other:
        raise InvalidSquareCF(f"the halves of {sq} give different LEs {le} and {other}")
    return le


def square_cf_of_node(node: MarkoffNode) -> SquareCF:
    return square_cf(TSingularity(node.g, node.w[1]))


def square_cf_tree(depth: int) -> Dict[str, SquareCF]:
    """
    Square expansions for every node up to ``depth``, keyed by path.

    Branch nodes come from the seeds and every other node from juxtaposing its e and f, each
    cross-checked against the direct expansion of g^2/(g w_g - 1).
    """
    by_number: Dict[int, SquareCF] = {}
    tree: Dict[str, SquareCF] = {}
    for node in iter_tree(depth):
        if node.e == 1:
            sq = branch_seed("fibonacci", len(node.path) + 2) if node.path else branch_seed("pell", 1)
        elif node.f == 2:
            sq = branch_seed("pell", len(node.path) + 1)
        else:
            sq = juxtapose(by_number[node.e], by_number[node.f])
        if sq.digits != square_cf_of_node(node).digits:
            raise IdentityViolation("square-tree", node.path or "-")
        by_number[node.g] = sq
        tree[node.path] = sq
    return tree


def digit_structure(sq: SquareCF) -> CheckReport:
    digits = list(sq.digits)
    report = CheckReport("digit-structure", payload=str(sq))
    report.add("alphabet", set(digits) <= ALPHABET, f"digits {sorted(set(digits))}")
    report.add("neighbours", all(x != y for x, y in zip(digits, digits[1:])), "a_i != a_{i+1}")
    report.add("exclusive", not (4 in digits and 5 in digits), "never both 4 and 5")
    return report


def digit_family(path: str) -> str:
    """
    Which of 4 and 5 the square expansion at ``path`` carries.

    The R subtree carries 4; the L subtree carries 5 except on the words L R^k.
    """
    if not path:
        return "4"
    if path[0] == "R":
        return "4"
    if set(path[1:]) <= {"R"}:
        return ""
    return "5"


def digit_family_checks(depth: int) -> CheckReport:
    report = CheckReport("digit-family", payload=depth)
    for path, sq in square_cf_tree(depth).items():
        report.extend(digit_structure(sq))
        family = digit_family(path)
        report.equal(f"has4[{path or '-'}]", 4 in sq.digits, family == "4")
        report.equal(f"has5[{path or '-'}]", 5 in sq.digits, family == "5")
    return report


def le_check(sq: SquareCF) -> CheckReport:
    """le_of_square agrees with the Euclidean LE and folds back to (g, w)."""
    report = CheckReport("le-of-square", payload=str(sq))
    le = le_of_square(sq)
    report.equal("euclid", le, le_from_pair(TSingularity(sq.g, sq.w)))
    report.equal("fold", pair_from_le(le), TSingularity(sq.g, sq.w))
    return report
