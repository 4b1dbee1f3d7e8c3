"""
Deviation of the Markoff counting function M(n) from C (log n)^2 and C (log 3n)^2.
"""

from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence

import mpmath
import numpy as np
from scipy import stats

from markoff.census.enumerate import enumerate_markoff
from markoff.errors import PreconditionViolation

ZAGIER_C = "0.180717104711507"

DEFAULT_PRECISION = 64

SWEEP_COLUMNS = ("k", "M", "dev_logn", "dev_log3n")

# published fit of dev_logn against k over 0 <= k <= 15000
REFERENCE_SLOPE = 0.9147551564680976
REFERENCE_INTERCEPT = -2.038389099852793


@dataclass(frozen=True)
class DeviationRow:
    """
    One row of the sweep.

    Attributes:
        k (int): Exponent of the bound 10^k.
        count (int): M(10^k).
        dev_logn (mpmath.mpf): M - C (ln 10^k)^2.
        dev_log3n (mpmath.mpf): M - C (ln 3 10^k)^2.
    """

    k: int
    count: int
    dev_logn: mpmath.mpf
    dev_log3n: mpmath.mpf

    def cells(self, digits: int = 17) -> List[str]:
        return [
            str(self.k),
            str(self.count),
            mpmath.nstr(self.dev_logn, digits),
            mpmath.nstr(self.dev_log3n, digits),
        ]

    def as_dict(self, digits: int = 17) -> Dict[str, str]:
        return dict(zip(SWEEP_COLUMNS, self.cells(digits)))


@dataclass(frozen=True)
class RegressionResult:
    """
    Least-squares fits of dev_logn against k.

    Attributes:
        slope (float): Linear slope.
        intercept (float): Linear intercept.
        rvalue (float): Correlation coefficient.
        quadratic (List[float]): Coefficients of the degree-two fit, highest first.
        expected_slope (float): 2 C ln 3 ln 10, the slope implied by M(n) ~ C (log 3n)^2.
    """

    slope: float
    intercept: float
    rvalue: float
    quadratic: List[float]
    expected_slope: float

    def summary(self) -> Dict[str, float]:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "rvalue": self.rvalue,
            "expected_slope": self.expected_slope,
            "inverse_log3": 1 / float(mpmath.log(3)),
            "reference_slope": REFERENCE_SLOPE,
            "reference_intercept": REFERENCE_INTERCEPT,
        }


def zagier_constant() -> mpmath.mpf:
    return mpmath.mpf(ZAGIER_C)


def deviations(k: int, count: int, precision: int = DEFAULT_PRECISION) -> DeviationRow:
    """Both deviations of a known M(10^k), evaluated with ``precision`` digits."""
    if k < 0:
        raise PreconditionViolation(f"k must be >= 0, got {k}")
    with mpmath.workdps(precision):
        c = zagier_constant()
        log_n = k * mpmath.log(10)
        log_3n = mpmath.log(3) + log_n
        return DeviationRow(k, count, count - c * log_n**2, count - c * log_3n**2)


def zagier_deviation(k: int, precision: int = DEFAULT_PRECISION, threads: int = 1) -> DeviationRow:
    """
    M(10^k) - C (ln 10^k)^2 and M(10^k) - C (ln 3 10^k)^2.

    Args:
        k (int): Exponent of the bound, k >= 0.
        precision (int): Decimal digits for the logarithms.
        threads (int): Worker processes for the enumeration.

    Returns:
        DeviationRow: The count and both deviations.
    """

    if k < 0:
        raise PreconditionViolation(f"k must be >= 0, got {k}")
    return deviations(k, enumerate_markoff(10**k, threads=threads).count, precision)


def zagier_sweep(
    ks: Iterable[int], precision: int = DEFAULT_PRECISION, threads: int = 1, progress: bool = False
) -> List[DeviationRow]:
    """
    Deviation rows for several exponents from a single enumeration up to the largest bound.

    Args:
        ks (Iterable[int]): Exponents, each >= 0.
        precision (int): Decimal digits for the logarithms.
        threads (int): Worker processes for the enumeration.
        progress (bool): Show a progress bar.

    Returns:
        List[DeviationRow]: One row per exponent, in increasing k.
    """

    ks = sorted(set(ks))
    if not ks:
        return []
    if ks[0] < 0:
        raise PreconditionViolation(f"k must be >= 0, got {ks[0]}")
    numbers = enumerate_markoff(10 ** ks[-1], threads=threads, progress=progress).numbers
    return [deviations(k, bisect_right(numbers, 10**k), precision) for k in ks]


def regression(rows: Sequence[DeviationRow]) -> RegressionResult:
    """
    Fit dev_logn = intercept + slope k by least squares, plus a quadratic fit.

    Args:
        rows (Sequence[DeviationRow]): At least three rows with distinct k.

    Returns:
        RegressionResult: Both fits and the slope predicted by the constant C.
    """

    if len({row.k for row in rows}) < 3:
        raise PreconditionViolation("the regression needs at least three distinct k")
    ks = np.array([row.k for row in rows], dtype=np.float64)
    devs = np.array([float(row.dev_logn) for row in rows], dtype=np.float64)
    fit = stats.linregress(ks, devs)
    quadratic = np.polyfit(ks, devs, 2)
    expected = float(2 * zagier_constant() * mpmath.log(3) * mpmath.log(10))
    return RegressionResult(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        rvalue=float(fit.rvalue),
        quadratic=[float(x) for x in quadratic],
        expected_slope=expected,
    )


def rows_from_records(
    records: Iterable[Dict[str, str]], precision: int = DEFAULT_PRECISION
) -> List[DeviationRow]:
    """Rebuild rows from CSV/TSV records with the sweep columns."""
    rows = []
    with mpmath.workdps(precision):
        for record in records:
            missing = [c for c in SWEEP_COLUMNS if c not in record]
            if missing:
                raise PreconditionViolation(f"sweep record lacks columns {missing}")
            rows.append(
                DeviationRow(
                    int(record["k"]),
                    int(record["M"]),
                    mpmath.mpf(record["dev_logn"]),
                    mpmath.mpf(record["dev_log3n"]),
                )
            )
    return rows
