"""
Continuants, regular and Hirzebruch-Jung continued fractions.
"""

from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from markoff.errors import DivisionByZero, IdentityViolation, PreconditionViolation
from markoff.report import CheckReport


def continuant(xs: Sequence[Any]) -> Any:
    """
    Evaluate the continuant K(x_1, ..., x_n).

    K() = 1, K(x_1) = x_1 and K_i = x_i * K_{i-1} + K_{i-2}. The entries may be any ring elements
    (integers, fractions or quadratic irrationals).

    Args:
        xs (Sequence[Any]): The entries.

    Returns:
        Any: The continuant, of the entries' type.
    """

    prev, cur = 0, 1
    for x in xs:
        prev, cur = cur, x * cur + prev
    return cur


def kl(xs: Sequence[Any], start: int, length: int) -> Any:
    """
    Continuant of ``length`` entries starting at the 1-based index ``start``.

    A length of -1 gives 0, matching K_{-1} = 0.
    """
    if length == -1:
        return 0
    if length < -1:
        raise PreconditionViolation(f"continuant length {length} < -1")
    return continuant(xs[start - 1 : start - 1 + length])


def convergents(digits: Sequence[int]) -> List[Tuple[int, int]]:
    """Convergent ladder (p_i, q_i) of [a_1, ..., a_n]."""
    ladder = []
    p_prev, p = 1, digits[0] if digits else 1
    q_prev, q = 0, 1
    if digits:
        ladder.append((p, q))
    for a in digits[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        ladder.append((p, q))
    return ladder


def eval_regular(digits: Sequence[int]) -> Fraction:
    if not digits:
        raise PreconditionViolation("empty continued fraction")
    p, q = convergents(digits)[-1]
    return Fraction(p, q)


def eval_hj(digits: Sequence[int]) -> Fraction:
    """
    Value of the minus continued fraction a_1 - 1/(a_2 - 1/(...)).

    Intermediate values may be negative. A zero tail raises ``DivisionByZero``.
    """
    if not digits:
        raise PreconditionViolation("empty Hirzebruch-Jung continued fraction")
    value = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        if value == 0:
            raise DivisionByZero(f"zero tail while evaluating [[{format_cf(digits)}]]")
        value = a - 1 / value
    return value


def hj_digits(value: Fraction) -> List[int]:
    """
    Expansion of a rational > 1 as a Hirzebruch-Jung continued fraction.

    Args:
        value (Fraction): The rational, value > 1.

    Returns:
        List[int]: Digits, all >= 2.
    """

    value = Fraction(value)
    if value <= 1:
        raise PreconditionViolation(f"Hirzebruch-Jung expansion needs a value > 1, got {value}")
    digits = []
    while True:
        # Ceiling step
        a = -((-value.numerator) // value.denominator)
        digits.append(a)
        rest = a - value
        if rest == 0:
            return digits
        value = 1 / rest


def regular_digits(value: Fraction) -> List[int]:
    """Regular continued fraction of a positive rational, canonical form."""
    value = Fraction(value)
    if value <= 0:
        raise PreconditionViolation(f"regular expansion needs a positive value, got {value}")
    p, q = value.numerator, value.denominator
    digits = []
    while q:
        a, r = divmod(p, q)
        digits.append(a)
        p, q = q, r
    return digits


def canonical_digits(digits: Sequence[int]) -> List[int]:
    """Absorb a trailing 1 into the digit before it."""
    digits = list(digits)
    if len(digits) > 1 and digits[-1] == 1:
        digits[-2] += 1
        digits.pop()
    return digits


def expand_digits(digits: Sequence[int]) -> List[int]:
    """The other expansion of the same rational: a_n > 1 becomes a_n - 1, 1."""
    digits = list(digits)
    if not digits:
        return digits
    if digits[-1] == 1 and len(digits) > 1:
        return canonical_digits(digits)
    digits[-1] -= 1
    digits.append(1)
    return digits


def same_cf(xs: Sequence[int], ys: Sequence[int]) -> bool:
    return canonical_digits(xs) == canonical_digits(ys)


def is_convergent(x: Fraction, value: Any) -> bool:
    """
    Whether the rational ``x`` is a convergent of the irrational ``value``.

    ``value`` must support comparison with rationals and ``floor``.
    """
    from markoff.arith.periodic import quadratic_to_periodic

    pcf = quadratic_to_periodic(value)
    x = Fraction(x)
    for digits in pcf.iter_prefixes():
        y = eval_regular(digits)
        if y == x:
            return True
        if y.denominator > x.denominator:
            return False
    return False


def reverse_denominator(digits: Sequence[int]) -> Tuple[Fraction, int]:
    """
    Evaluate the reversed continued fraction.

    If [a_1, ..., a_n] = p/q then [a_n, ..., a_1] = p/q' with q q' = (-1)^(n-1) mod p.

    Args:
        digits (Sequence[int]): The digits, first digit > 0.

    Returns:
        Tuple[Fraction, int]: The value p/q' of the reversed fraction and q'.
    """

    if not digits or digits[0] <= 0:
        raise PreconditionViolation("reverse_denominator needs a nonempty fraction with a_1 > 0")
    n = len(digits)
    p = continuant(digits)
    q = continuant(digits[1:])
    q_rev = continuant(digits[:-1])
    if p > 1 and (q * q_rev - (-1) ** (n - 1)) % p != 0:
        raise IdentityViolation("reverse-denominator congruence", list(digits))
    return Fraction(p, q_rev), q_rev


def concat_cf(xs: Sequence[int], ys: Sequence[int]) -> Fraction:
    """
    Value of the concatenation xs ++ ys from the values of the parts.

    With xs = [a_1..a_m] = P/Q and ys = [b_1..b_n] = U/V the concatenation is X/Y where
    X = P U + Q' V and Y = Q U + Q'' V, Q' = K(a_1..a_{m-1}), Q'' = K(a_2..a_{m-1}).
    """
    if not xs or not ys:
        raise PreconditionViolation("concat_cf needs two nonempty fractions")
    big_p, big_q = continuant(xs), continuant(xs[1:])
    q1 = continuant(xs[:-1])
    q2 = continuant(xs[1:-1]) if len(xs) > 1 else 0
    u, v = continuant(ys), continuant(ys[1:])
    value = Fraction(big_p * u + q1 * v, big_q * u + q2 * v)
    direct = eval_regular(list(xs) + list(ys))
    if value != direct:
        raise IdentityViolation("concatenation law", (list(xs), list(ys)))
    return value


def complement_transform(p: int, q: int) -> List[int]:
    """
    Continued fraction of p/q from the one of p/(p-q) by rewriting the prefix.

    p/(p-q) = [a_1, ..., a_n] gives p/q = [1, a_1 - 1, a_2, ..., a_n].

    Args:
        p (int): Numerator.
        q (int): Denominator with p - q < q < p.

    Returns:
        List[int]: The digits of p/q.
    """

    from math import gcd

    if not 0 < q < p or gcd(p, q) != 1:
        raise PreconditionViolation(f"complement_transform needs 0 < q < p coprime, got ({p}, {q})")
    if q <= p - q:
        raise PreconditionViolation(f"complement_transform needs q > p - q, got ({p}, {q})")
    base = regular_digits(Fraction(p, p - q))
    digits = [1, base[0] - 1] + base[1:]
    if eval_regular(digits) != Fraction(p, q):
        raise IdentityViolation("complement rewrite", (p, q))
    return digits


def factorization_check(xs: Sequence[int], s: int) -> CheckReport:
    """K_{s+t} = K_s K_t(x_{s+1}..) + K_{s-1} K_{t-1}(x_{s+2}..) for one split point."""
    n = len(xs)
    t = n - s
    report = CheckReport("factorization", payload=(list(xs), s))
    lhs = continuant(xs)
    rhs = kl(xs, 1, s) * kl(xs, s + 1, t) + kl(xs, 1, s - 1) * kl(xs, s + 2, t - 1)
    report.equal(f"s={s}", lhs, rhs)
    return report


def cassini_check(xs: Sequence[int], s: int, k: int) -> CheckReport:
    """
    K_{s+t} K_k(x_{s+1}..x_{s+k}) = K_{s+k} K_t(x_{s+1}..x_{s+t})
    + (-1)^k K_{s-1} K_{t-k-1}(x_{s+k+2}..x_{s+t}) for 1 <= k <= t.
    """
    n = len(xs)
    t = n - s
    report = CheckReport("cassini", payload=(list(xs), s, k))
    if not 1 <= k <= t:
        raise PreconditionViolation(f"cassini needs 1 <= k <= t, got k={k}, t={t}")
    lhs = continuant(xs) * kl(xs, s + 1, k)
    rhs = kl(xs, 1, s + k) * kl(xs, s + 1, t) + (-1) ** k * kl(xs, 1, s - 1) * kl(xs, s + k + 2, t - k - 1)
    report.equal(f"s={s},k={k}", lhs, rhs)
    return report


def cassini2_check(xs: Sequence[int]) -> CheckReport:
    """K_{t+1}(x_1..x_{t+1}) K_{t-1}(x_2..x_t) = K_t(x_1..x_t) K_t(x_2..x_{t+1}) + (-1)^(t-1)."""
    t = len(xs) - 1
    report = CheckReport("cassini2", payload=list(xs))
    if t < 1:
        raise PreconditionViolation("cassini2 needs at least two entries")
    lhs = continuant(xs) * kl(xs, 2, t - 1)
    rhs = kl(xs, 1, t) * kl(xs, 2, t) + (-1) ** (t - 1)
    report.equal(f"t={t}", lhs, rhs)
    return report


def continuant_checks(xs: Sequence[int]) -> CheckReport:
    """Reversal, factorization and both Cassini identities at every split point."""
    report = CheckReport("continuant", payload=list(xs))
    report.equal("reversal", continuant(xs), continuant(list(reversed(xs))))
    n = len(xs)
    for s in range(1, n):
        report.extend(factorization_check(xs, s))
        for k in range(1, n - s + 1):
            report.extend(cassini_check(xs, s, k))
    if n >= 2:
        report.extend(cassini2_check(xs))
    return report


def format_cf(digits: Sequence[int]) -> str:
    return ",".join(str(a) for a in digits)


def parse_cf(text: str) -> List[int]:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise PreconditionViolation(f"not a comma-separated digit list: {text!r}") from exc
