from fractions import Fraction

import pytest

from markoff.arith import (
    PeriodicCF,
    QuadraticIrrational,
    SurdSum,
    canonical_digits,
    complement_transform,
    concat_cf,
    continuant,
    continuant_checks,
    convergents,
    eval_hj,
    eval_regular,
    expand_digits,
    format_periodic,
    hj_digits,
    is_convergent,
    parse_cf,
    parse_periodic,
    periodic_to_quadratic,
    quadratic_to_periodic,
    regular_digits,
    reverse_denominator,
    same_cf,
    shift_and_reverse_checks,
    sqrt_of,
    squarefree_decompose,
)
from markoff.errors import DivisionByZero, NotIrrational, PreconditionViolation


@pytest.mark.parametrize(
    "xs, expected",
    [
        ([], 1),
        ([7], 7),
        ([2, 1, 1, 2, 2, 1, 1, 2], 194),
        ([6, 1, 3, 6], 169),
    ],
)
def test_continuant_values(xs, expected):
    assert continuant(xs) == expected


def test_continuant_accepts_fractions():
    assert continuant([Fraction(1, 2), 2]) == Fraction(2)


def test_convergent_ladder():
    assert convergents([2, 1, 1, 2]) == [(2, 1), (3, 1), (5, 2), (13, 5)]


def test_eval_regular_and_canonical_forms():
    assert eval_regular([2, 1, 1, 2, 2, 1, 1, 2]) == Fraction(194, 75)
    assert regular_digits(Fraction(194, 75)) == [2, 1, 1, 2, 2, 1, 1, 2]
    assert canonical_digits([6, 2, 1]) == [6, 3]
    assert expand_digits([6, 3]) == [6, 2, 1]
    assert same_cf([4, 6, 8, 3, 1], [4, 6, 8, 4])
    with pytest.raises(PreconditionViolation):
        eval_regular([])


def test_hirzebruch_jung_round_trip():
    assert eval_hj([7, 2, 2, 2]) == Fraction(25, 4)
    assert hj_digits(Fraction(25, 4)) == [7, 2, 2, 2]
    assert eval_hj([4]) == 4
    with pytest.raises(PreconditionViolation):
        hj_digits(Fraction(1))


def test_eval_hj_zero_tail():
    with pytest.raises(DivisionByZero):
        eval_hj([2, 1, 0])


def test_reverse_denominator():
    value, q_rev = reverse_denominator([6, 1, 3, 6])
    assert value == eval_regular([6, 3, 1, 6])
    assert value == Fraction(169, 27)
    assert q_rev == 27
    assert (25 * q_rev + 1) % 169 == 0


def test_concat_cf_matches_direct_evaluation(rng):
    assert concat_cf([6, 3, 1, 6], [8, 1, 3, 6]) == eval_regular([6, 3, 1, 6, 8, 1, 3, 6])
    for _ in range(1000):
        xs = [rng.randint(1, 9) for _ in range(rng.randint(1, 20))]
        ys = [rng.randint(1, 9) for _ in range(rng.randint(1, 20))]
        assert concat_cf(xs, ys) == eval_regular(xs + ys)


def test_complement_transform():
    assert complement_transform(13, 8) == [1, 1, 1, 1, 2]
    assert eval_regular(complement_transform(194, 119)) == Fraction(194, 119)
    with pytest.raises(PreconditionViolation):
        complement_transform(13, 5)


def test_continuant_identities_on_random_vectors(rng):
    for _ in range(200):
        xs = [rng.randint(1, 9) for _ in range(rng.randint(2, 20))]
        assert continuant_checks(xs).ok


def test_parse_cf():
    assert parse_cf("[6,1,3,6]") == [6, 1, 3, 6]
    assert parse_cf("") == []
    with pytest.raises(PreconditionViolation):
        parse_cf("6,a")


def test_quadratic_normalization():
    x = QuadraticIrrational(-4, 1, 4, 32)
    assert x == QuadraticIrrational(-1, 1, 1, 2)
    assert x.quadruple() == (-1, 1, 1, 2)
    assert squarefree_decompose(32) == (4, 2)
    assert QuadraticIrrational(3, 2, 1, 4).is_rational


def test_quadratic_arithmetic_and_order():
    root2 = sqrt_of(2)
    assert root2 * root2 == 2
    assert (1 + root2) * (root2 - 1) == 1
    assert 1 / (root2 - 1) == root2 + 1
    assert Fraction(141, 100) < root2 < Fraction(142, 100)
    assert root2.floor() == 1
    assert root2.decimal(10) == "1.4142135624"


def test_quadratic_to_periodic():
    assert quadratic_to_periodic(sqrt_of(2)) == PeriodicCF((1,), (2,))
    golden = QuadraticIrrational(1, 1, 2, 5)
    assert quadratic_to_periodic(golden) == PeriodicCF.pure([1])
    with pytest.raises(NotIrrational):
        quadratic_to_periodic(QuadraticIrrational(3, 0, 2))


def test_periodic_values():
    assert periodic_to_quadratic(PeriodicCF.pure([2, 1, 1, 2])) == QuadraticIrrational.half(11, 1, 5, 221)
    assert periodic_to_quadratic(PeriodicCF((1,), (2,))) == sqrt_of(2)


def test_long_period_round_trip():
    x = QuadraticIrrational(-97, 3, 48, 408880)
    assert x.quadruple() == (-97, 12, 48, 25555)
    pcf = quadratic_to_periodic(x)
    assert len(pcf.preperiod) == 1
    assert len(pcf.period) == 2312
    assert periodic_to_quadratic(pcf) == x


def test_quadratic_round_trip_on_random_values(rng):
    done = 0
    while done < 300:
        u, v = rng.randint(-100, 100), rng.randint(-6, 6)
        w, d = rng.choice([-1, 1]) * rng.randint(1, 50), rng.randint(2, 10**6)
        x = QuadraticIrrational(u, v, w, d)
        if x.is_rational:
            continue
        assert periodic_to_quadratic(quadratic_to_periodic(x)) == x
        done += 1


def test_squarefree_decompose_large_radicands():
    assert squarefree_decompose(5 * 49 * 10**400) == (7 * 10**200, 5)
    big = 10**20 + 39
    assert squarefree_decompose((6 * big) ** 2) == (6 * big, 1)
    s, c = squarefree_decompose(12 * big**2)
    assert s % 2 == 0 and c % 3 == 0
    assert s * s * c == 12 * big**2


def test_periodic_canonical_form():
    pcf = PeriodicCF((3, 1, 2), (1, 2, 1, 2))
    assert pcf.period == (1, 2)
    assert pcf.preperiod == (3,)
    assert pcf.digits(7) == [3, 1, 2, 1, 2, 1, 2]


def test_periodic_text_form():
    assert parse_periodic("2,(1,1,2,2)*") == PeriodicCF.pure([2, 1, 1, 2])
    assert format_periodic(PeriodicCF((1,), (2,))) == "1,(2)*"
    assert parse_periodic("1,(2)*") == PeriodicCF((1,), (2,))
    assert parse_periodic("(2,1,1,2)*") == PeriodicCF.pure([2, 1, 1, 2])
    with pytest.raises(PreconditionViolation):
        parse_periodic("2,1,1")


def test_is_convergent():
    assert is_convergent(Fraction(3, 2), sqrt_of(2))
    assert is_convergent(Fraction(7, 5), sqrt_of(2))
    assert not is_convergent(Fraction(10, 7), sqrt_of(2))


@pytest.mark.parametrize("period", [(2, 1, 1, 2), (6, 3, 1, 8), (1, 2, 2, 1), (3, 1, 4, 1, 5)])
def test_shift_and_reverse(period):
    assert shift_and_reverse_checks(PeriodicCF.pure(period)).ok


def test_shift_and_reverse_needs_pure_expansion():
    with pytest.raises(PreconditionViolation):
        shift_and_reverse_checks(PeriodicCF((1,), (2,)))


def test_surd_sum_sign_and_equality():
    x = SurdSum({1: 6, 5: -1, 8: -1})
    assert x.sign() == 1
    assert x.decimal(4) == "0.9355"
    assert SurdSum.sqrt(8) == SurdSum.sqrt(2, 2)
    assert SurdSum({2: 1, 3: 1}) > SurdSum.rational(Fraction(314, 100))
    assert SurdSum({2: 1, 3: -1}).sign() == -1
