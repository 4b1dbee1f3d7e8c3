import mpmath
import pytest

from markoff.census import (
    SWEEP_COLUMNS,
    DeviationRow,
    deviations,
    enumerate_markoff,
    iter_triples,
    markoff_count,
    regression,
    rows_from_records,
    singular_rows,
    table_gen,
    table_row,
    uniqueness_check,
    zagier_deviation,
    zagier_sweep,
)
from markoff.errors import NotMarkoff, PreconditionViolation, ResourceLimit


@pytest.mark.parametrize(
    "bound, numbers",
    [
        (1, [1]),
        (2, [1, 2]),
        (10, [1, 2, 5]),
        (100, [1, 2, 5, 13, 29, 34, 89]),
    ],
)
def test_small_bounds(bound, numbers):
    result = enumerate_markoff(bound)
    assert result.numbers == numbers
    assert result.count == len(numbers)
    assert result.unique


def test_count_below_googol():
    assert markoff_count(10**100) == 9670


@pytest.mark.slow
@pytest.mark.parametrize("k, count", [(200, 38512), (300, 86518)])
def test_large_counts(k, count):
    assert markoff_count(10**k) == count


def test_worker_processes_agree():
    single = enumerate_markoff(10**40)
    split = enumerate_markoff(10**40, threads=2, split_depth=3)
    assert split == single
    assert uniqueness_check(10**40).unique


def test_enumeration_limits():
    with pytest.raises(PreconditionViolation):
        enumerate_markoff(0)
    with pytest.raises(PreconditionViolation):
        enumerate_markoff(100, threads=0)
    with pytest.raises(ResourceLimit):
        enumerate_markoff(10**30, split_depth=2, budget=10)


def test_iter_triples():
    triples = list(iter_triples(100))
    assert triples[0] == (1, 5, 2)
    assert sorted(g for _, g, _ in triples) == [5, 13, 29, 34, 89]
    for e, g, f in triples:
        assert e * e + g * g + f * f == 3 * e * g * f


@pytest.mark.parametrize(
    "m, r, s, w, v",
    [
        (1, 0, 1, -1, 10),
        (2, 1, 1, 1, 5),
        (5, 2, 1, 1, 2),
        (194, 75, 29, 31, 5),
        (433, 179, 74, 104, 25),
    ],
)
def test_table_row(m, r, s, w, v):
    assert table_row(m).as_dict() == {"m": m, "r": r, "s": s, "w": w, "v": v}


def test_table_gen():
    rows = table_gen(9)
    assert [row.m for row in rows] == [1, 2, 5, 13, 29, 34, 89, 169, 194]
    assert rows[:2] == singular_rows()
    assert rows[-1].cells() == ["194", "75", "29", "31", "5"]
    with pytest.raises(PreconditionViolation):
        table_gen(0)
    with pytest.raises(ResourceLimit):
        table_gen(10, cap=5)
    with pytest.raises(NotMarkoff):
        table_row(3)


@pytest.mark.parametrize(
    "k, count, expected",
    [
        (0, 1, 1.0),
        (100, 9670, 88.56323998934204),
        (200, 38512, 186.25295995736815),
        (300, 86518, 285.0691599040583),
    ],
)
def test_deviations(k, count, expected):
    row = deviations(k, count)
    assert float(row.dev_logn) == pytest.approx(expected, abs=1e-8)
    assert row.dev_log3n < row.dev_logn


def test_zagier_deviation():
    row = zagier_deviation(100)
    assert row.count == 9670
    assert float(row.dev_logn) == pytest.approx(88.56323998934204, abs=1e-8)
    with pytest.raises(PreconditionViolation):
        zagier_deviation(-1)


@pytest.mark.slow
def test_zagier_deviation_at_300():
    row = zagier_deviation(300, threads=4)
    assert row.count == 86518
    assert float(row.dev_logn) == pytest.approx(285.0691599040583, abs=1e-8)


def test_zagier_sweep():
    rows = zagier_sweep([2, 0, 1])
    assert [(row.k, row.count) for row in rows] == [(0, 1), (1, 3), (2, 7)]
    assert zagier_sweep([]) == []
    assert rows[0].cells()[:2] == ["0", "1"]


def test_regression_on_linear_rows():
    rows = [DeviationRow(k, 0, mpmath.mpf(2 * k + 1), mpmath.mpf(0)) for k in range(5)]
    fit = regression(rows)
    assert fit.slope == pytest.approx(2.0)
    assert fit.intercept == pytest.approx(1.0)
    assert fit.rvalue == pytest.approx(1.0)
    assert fit.quadratic[0] == pytest.approx(0.0, abs=1e-9)
    assert fit.expected_slope == pytest.approx(0.9147, abs=1e-3)
    with pytest.raises(PreconditionViolation):
        regression(rows[:2])


def test_rows_from_records():
    records = [dict(zip(SWEEP_COLUMNS, ["100", "9670", "88.56323998934204", "79.1"]))]
    rows = rows_from_records(records)
    assert rows[0].k == 100 and rows[0].count == 9670
    with pytest.raises(PreconditionViolation):
        rows_from_records([{"k": "1"}])
