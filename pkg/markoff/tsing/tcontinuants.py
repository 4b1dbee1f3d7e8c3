"""
T-continuants: the semicontinuants S_m and continuants T_m summed over even-odd index sets.

S_0 = S_1 = 1 and S_i = S_{i-2} + c_{i-1} S_{i-1}; T_m = S_m + S_{m+1}. On the LE c_1, ..., c_m of a
pair (n, k) these give T_m(c_1, ..., c_m) = n and S_m(c_1, ..., c_{m-1}) = k.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import FrozenSet, List, Optional, Sequence, Tuple

from markoff.arith.continuants import continuant
from markoff.errors import PreconditionViolation, RangeError, ResourceLimit
from markoff.report import CheckReport
from markoff.tree.branches import fibonacci
from markoff.tsing.singularity import TSingularity, pair_from_le

IndexSet = FrozenSet[int]

MAX_INDEX_SETS = 25


@dataclass(frozen=True)
class IndexFamily:
    """
    The index sets J_m and I_m = J_m + J_{m+1}.

    Attributes:
        m (int): Order, m >= 0.
        J (Tuple[IndexSet, ...]): Subsets of {1, ..., m-1} summed by S_m.
        I (Tuple[IndexSet, ...]): Subsets of {1, ..., m} summed by T_m; the empty set occurs twice.
    """

    m: int
    J: Tuple[IndexSet, ...]
    I: Tuple[IndexSet, ...]


@dataclass(frozen=True)
class TPolyEval:
    """
    Values of the T-semicontinuant and T-continuant on an argument vector c_1, ..., c_m.

    Attributes:
        args (Tuple[int, ...]): The arguments.
        S (int): S_m(c_1, ..., c_{m-1}).
        T (int): T_m(c_1, ..., c_m).
    """

    args: Tuple[int, ...]
    S: int
    T: int

    def pair(self) -> Tuple[int, int]:
        return self.T, self.S


def _j_sets(m: int) -> List[List[IndexSet]]:
    levels: List[List[IndexSet]] = [[frozenset()], [frozenset()]]
    for i in range(2, m + 1):
        levels.append(levels[i - 2] + [x | {i - 1} for x in levels[i - 1]])
    return levels


def index_sets(m: int, cap: int = MAX_INDEX_SETS) -> IndexFamily:
    """
    Build J_m and I_m from J_0 = J_1 = {{}} and J_m = J_{m-2} + {X + {m-1} : X in J_{m-1}}.

    Args:
        m (int): Order, m >= 0.
        cap (int): Largest order built explicitly; both families grow like Fibonacci numbers.

    Returns:
        IndexFamily: J_m (F_{m+1} sets) and I_m (F_{m+3} sets).
    """

    if m < 0:
        raise PreconditionViolation(f"index_sets needs m >= 0, got {m}")
    if m > cap:
        raise ResourceLimit(f"index sets of order {m} exceed the cap {cap}")
    levels = _j_sets(m + 1)
    return IndexFamily(m, tuple(levels[m]), tuple(levels[m]) + tuple(levels[m + 1]))


def is_evenodd(xs: Sequence[int]) -> bool:
    """Consecutive elements alternate in parity."""
    return all((a - b) % 2 for a, b in zip(xs, xs[1:]))


def evenodd_member(x: Sequence[int], m: int) -> bool:
    """
    Whether x lies in J_m, by the parity rule.

    A non-empty x = {i_1 < ... < i_k} is in J_m iff x is a subset of {1, ..., m-1}, is even-odd,
    and i_1 = k + m mod 2.
    """

    xs = sorted(x)
    if len(set(xs)) != len(xs):
        raise PreconditionViolation(f"index set has repeated entries: {list(x)}")
    if not xs:
        return True
    if xs[0] < 1 or xs[-1] > m - 1:
        return False
    return is_evenodd(xs) and (xs[0] - len(xs) - m) % 2 == 0


def semicontinuant(xs: Sequence[int]) -> int:
    """S_{len+1}(xs) by the recurrence."""
    a, b = 1, 1
    for c in xs:
        a, b = b, a + c * b
    return b


def tcontinuant(xs: Sequence[int]) -> int:
    """T_{len}(xs) = S_{len}(xs minus its last entry) + S_{len+1}(xs)."""
    if not xs:
        return 2
    return semicontinuant(xs[:-1]) + semicontinuant(xs)


def eval_ST(args: Sequence[int]) -> TPolyEval:
    args = tuple(args)
    return TPolyEval(args, semicontinuant(args[:-1]), tcontinuant(args))


def _monomial_value(args: Sequence[int], index: IndexSet) -> int:
    return prod(args[i - 1] for i in index)


def subset_sum_ST(args: Sequence[int], cap: int = MAX_INDEX_SETS) -> TPolyEval:
    """S_m and T_m summed monomial by monomial over the explicit index sets."""
    args = tuple(args)
    family = index_sets(len(args), cap)
    s = sum(_monomial_value(args, index) for index in family.J)
    t = sum(_monomial_value(args, index) for index in family.I)
    return TPolyEval(args, s, t)


def reverse_pair(le: Sequence[int]) -> TSingularity:
    """
    The pair (n, k') whose LE is the reversal of le.

    k' = S_m(c_m, ..., c_2) and k k' = (-1)^{m+1} mod n.
    """

    if not le:
        return TSingularity(2, 1)
    reversed_le = list(le)[::-1]
    return TSingularity(tcontinuant(reversed_le), semicontinuant(reversed_le[:-1]))


def _format_monomial(index: IndexSet) -> str:
    return "".join(f"x{i}" for i in sorted(index))


def _format_polynomial(indices: Sequence[IndexSet]) -> str:
    counts = Counter(indices)
    terms = []
    for index in sorted(counts, key=lambda x: (len(x), sorted(x))):
        coeff = counts[index]
        if not index:
            terms.append(str(coeff))
        else:
            terms.append(("" if coeff == 1 else str(coeff)) + _format_monomial(index))
    return " + ".join(terms)


def monomials(m: int) -> Tuple[str, str]:
    """
    S_m and T_m as sums of monomials, e.g. ("1 + x1", "2 + x1 + x2 + x1x2") for m = 2.

    Args:
        m (int): Order, 0 <= m <= 6.

    Returns:
        Tuple[str, str]: The two polynomials.
    """

    if not 0 <= m <= 6:
        raise RangeError(f"monomial listing is limited to m <= 6, got {m}")
    family = index_sets(m)
    return _format_polynomial(family.J), _format_polynomial(family.I)


def index_set_checks(m: int, cap: int = MAX_INDEX_SETS) -> CheckReport:
    """Cardinalities and the parity description of J_m, J_{m+1} and I_m."""
    family = index_sets(m, cap)
    upper = family.I[len(family.J) :]
    report = CheckReport("index-sets", payload=m)
    report.equal("card-J", len(family.J), fibonacci(m + 1))
    report.equal("card-I", len(family.I), fibonacci(m + 3))
    report.equal("empty-twice", family.I.count(frozenset()), 2)
    report.add("parity-J", all(evenodd_member(x, m) for x in family.J))
    report.add("parity-J+1", all(evenodd_member(x, m + 1) for x in upper))
    evenodd = {
        frozenset(x)
        for size in range(1, m + 1)
        for x in combinations(range(1, m + 1), size)
        if is_evenodd(x)
    }
    nonempty = {x for x in family.I if x}
    report.equal("I-all-evenodd", nonempty, evenodd)
    report.equal("I-distinct", len(nonempty), len(family.I) - 2)
    return report


def _product_clauses(
    report: CheckReport, c: List[int], split: Optional[int], position: Optional[int], d: int
) -> None:
    m = len(c)
    t = tcontinuant(c)
    if split is not None:
        if not 0 < split < m:
            raise PreconditionViolation(f"split must satisfy 0 < split < {m}, got {split}")
        tail = c[split:][::-1]
        rhs = semicontinuant(c[:split]) * semicontinuant(tail)
        rhs += semicontinuant(c[: split - 1]) * semicontinuant(tail[:-1])
        report.equal("product", t, rhs)
    if position is not None:
        i = position
        if not 1 <= i <= m:
            raise PreconditionViolation(f"position must satisfy 1 <= i <= {m}, got {i}")
        if c[i - 1] + d <= 0:
            raise PreconditionViolation(f"c_{i} + d must stay positive, got {c[i - 1] + d}")
        bumped = c[: i - 1] + [c[i - 1] + d] + c[i:]
        left, right = semicontinuant(c[: i - 1]), semicontinuant(c[i:][::-1])
        report.equal("perturb", tcontinuant(bumped), t + d * left * right)
        plus2 = c[: i - 1] + [c[i - 1] + 2] + c[i:]
        report.equal("plus2", tcontinuant(plus2), right * tcontinuant(c[:i]) + left * tcontinuant(c[i:]))
    for i in range(1, m + 1):
        lhs = semicontinuant(c[: m - 1]) + (-1) ** i * semicontinuant(c[: m - i])
        rhs = sum((-1) ** (j - 1) * tcontinuant(c[: m - j]) for j in range(1, i))
        report.equal(f"alternating[{i}]", lhs, rhs)
    for i in range(m + 1):
        rhs = sum(c[j - 1] * semicontinuant(c[: j - 1]) for j in range(i + 1, m + 1))
        report.equal(f"telescoping[{i}]", t - tcontinuant(c[:i]), rhs)


def identity_suite(
    args: Sequence[int], split: Optional[int] = None, d: int = 1, position: Optional[int] = None
) -> CheckReport:
    """
    Product, perturbation, alternating-sum and telescoping formulas, plus the links to continuants and LEs.

    Args:
        args (Sequence[int]): c_1, ..., c_m, each positive.
        split (Optional[int]): Split point of the product formula, defaults to m // 2 (skipped for m < 2).
        d (int): Perturbation added at ``position``.
        position (Optional[int]): Entry perturbed by d and by 2, defaults to 1 (skipped for m = 0).

    Returns:
        CheckReport: One clause per identity; call ``require()`` to raise on failure.
    """

    c = list(args)
    if any(x < 1 for x in c):
        raise PreconditionViolation(f"T-continuant arguments must be positive, got {c}")
    m = len(c)
    if split is None and m >= 2:
        split = m // 2
    if position is None and m >= 1:
        position = 1
    report = CheckReport("t-continuants", payload=tuple(c))
    value = eval_ST(c)
    report.equal("symmetry", value.T, tcontinuant(c[::-1]))
    if m <= MAX_INDEX_SETS:
        report.equal("subset-sum", subset_sum_ST(c).pair(), value.pair())
    _product_clauses(report, c, split, position, d)
    if m > 1:
        report.equal("T=K", value.T, continuant([c[-1] + 1] + c[-2:0:-1] + [c[0] + 1]))
        report.equal("S=K", value.S, continuant(c[-2:0:-1] + [c[0] + 1]))
    pair = pair_from_le(c)
    report.equal("le-pair", value.pair(), (pair.n, pair.k))
    back = reverse_pair(c)
    report.equal("reverse-le", pair_from_le(c[::-1]), back)
    report.equal("reverse-residue", (pair.k * back.k - (-1) ** (m + 1)) % pair.n, 0)
    return report
