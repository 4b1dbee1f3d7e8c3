"""
Runner for the exact identity and certificate suites.

Each suite takes the shared settings and returns one CheckReport; ``run_suites`` runs a selection and
``require`` turns the first failing clause into an IdentityViolation.
"""

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Sequence

from tqdm import tqdm

from markoff.arith.continuants import concat_cf, continuant_checks, eval_regular
from markoff.arith.periodic import PeriodicCF, shift_and_reverse_checks
from markoff.cantor.hausdorff import d_ratio_checks
from markoff.cantor.intervals import (
    affine_map_check,
    gap_sum_checks,
    interval_checks,
    measure_certificate,
    nesting_checks,
)
from markoff.cantor.limits import branch_limit_checks, limit_affine_checks, period_complement_checks
from markoff.census.enumerate import uniqueness_check
from markoff.errors import IdentityViolation, PreconditionViolation
from markoff.frobenius.frobenius import frobenius_checks, recursion_check
from markoff.report import CheckReport
from markoff.tree.branches import branch_checks, growth_checks
from markoff.tree.delta import somewhat_sharp_bounds
from markoff.tree.node import iter_tree, node_at, node_checks
from markoff.tree.stern_brocot import fraction_of_path
from markoff.tsing.singularity import opposite_le_checks
from markoff.tsing.square import append8_suite, digit_family_checks, le_check, square_cf_of_node
from markoff.tsing.tcontinuants import MAX_INDEX_SETS, identity_suite, index_set_checks


@dataclass
class SuiteSettings:
    """
    Sizes shared by every suite.

    Attributes:
        depth (int): Tree depth for the tree-wide suites.
        samples (int): Random cases for the sampled suites.
        seed (int): Seed of the random generator.
        max_length (int): Longest argument vector in the exhaustive T-continuant sweep.
        max_entry (int): Largest entry in that sweep.
        index_cap (int): Largest order whose index sets are built explicitly.
    """

    depth: int = 12
    samples: int = 200
    seed: int = 0
    max_length: int = 4
    max_entry: int = 6
    index_cap: int = MAX_INDEX_SETS


Suite = Callable[[SuiteSettings, random.Random], CheckReport]


def _random_digits(rng: random.Random, length: int, top: int = 9) -> List[int]:
    return [rng.randint(1, top) for _ in range(length)]


def _random_path(rng: random.Random, depth: int) -> str:
    return "".join(rng.choice("LR") for _ in range(rng.randint(0, depth)))


def continuant_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("continuants", payload=settings.samples)
    for _ in range(settings.samples):
        report.extend(continuant_checks(_random_digits(rng, rng.randint(2, 20))))
    for _ in range(5 * settings.samples):
        xs, ys = _random_digits(rng, rng.randint(1, 20)), _random_digits(rng, rng.randint(1, 20))
        try:
            report.add("concat", concat_cf(xs, ys) == eval_regular(xs + ys))
        except IdentityViolation:
            report.add("concat", False, f"{xs} ++ {ys}")
    return report


def periodic_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("periodic", payload=settings.samples)
    for _ in range(max(1, settings.samples // 10)):
        report.extend(shift_and_reverse_checks(PeriodicCF.pure(_random_digits(rng, rng.randint(1, 5), 6))))
    return report


def tree_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("tree", payload=settings.depth)
    for node in iter_tree(settings.depth):
        report.extend(node_checks(node))
        report.extend(somewhat_sharp_bounds(*node.triple))
    for n in range(1, settings.depth + 1):
        report.extend(branch_checks("fibonacci", n + 1))
        report.extend(branch_checks("pell", n))
    for node in iter_tree(min(settings.depth, 3)):
        report.extend(growth_checks(node, count=8))
    return report


def frobenius_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("frobenius", payload=settings.depth)
    for node in iter_tree(min(settings.depth, 8)):
        frac = fraction_of_path(node.path)
        report.extend(frobenius_checks(frac.mu, frac.nu))
        if frac.mu > 1 and frac.nu > 1:
            report.extend(recursion_check(frac.mu, frac.nu))
    return report


def tsing_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("tsing", payload=settings.samples)
    for _ in range(settings.samples):
        node = node_at(_random_path(rng, settings.depth))
        sq = square_cf_of_node(node)
        report.extend(le_check(sq))
        try:
            report.extend(append8_suite(sq))
        except PreconditionViolation:
            continue
    report.extend(opposite_le_checks(min(settings.depth, 8)))
    report.extend(digit_family_checks(min(settings.depth, 6)))
    return report


def tcontinuant_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("t-continuants", payload=(settings.max_length, settings.max_entry))
    for m in range(settings.max_length + 2):
        report.extend(index_set_checks(m, settings.index_cap))
    for m in range(settings.max_length + 1):
        for args in product(range(1, settings.max_entry + 1), repeat=m):
            report.extend(identity_suite(args))
    for _ in range(settings.samples):
        args = _random_digits(rng, rng.randint(1, 10))
        position = rng.randint(1, len(args))
        report.extend(identity_suite(args, d=rng.randint(1, 5), position=position))
    return report


def cantor_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    depth = settings.depth
    report = CheckReport("cantor", payload=depth)
    for spectrum in ("R", "T"):
        report.extend(measure_certificate(depth, spectrum))
        report.extend(nesting_checks(depth, spectrum))
        for node in iter_tree(min(depth, 4)):
            report.extend(interval_checks(node, spectrum))
    report.extend(gap_sum_checks(min(depth, 8)))
    report.extend(affine_map_check(min(depth, 10)))
    report.extend(d_ratio_checks(min(depth, 6)))
    report.extend(branch_limit_checks(6))
    report.extend(period_complement_checks(min(depth, 4)))
    report.extend(limit_affine_checks(min(depth, 3)))
    return report


def census_suite(settings: SuiteSettings, rng: random.Random) -> CheckReport:
    report = CheckReport("census", payload=10**100)
    result = uniqueness_check(10**100)
    report.equal("count", result.count, 9670)
    report.add("unique", result.unique, str(result.duplicates[:5]))
    return report


SUITES: Dict[str, Suite] = {
    "continuants": continuant_suite,
    "periodic": periodic_suite,
    "tree": tree_suite,
    "frobenius": frobenius_suite,
    "tsing": tsing_suite,
    "tcontinuants": tcontinuant_suite,
    "cantor": cantor_suite,
    "census": census_suite,
}


def run_suites(
    names: Sequence[str] = (), settings: SuiteSettings = None, progress: bool = False
) -> List[CheckReport]:
    """
    Run the named suites, or all of them.

    Args:
        names (Sequence[str]): Suite names from ``SUITES``; empty runs everything.
        settings (SuiteSettings): Shared sizes and seed.
        progress (bool): Show a progress bar over the suites.

    Returns:
        List[CheckReport]: One report per suite, in the order given.
    """

    settings = settings or SuiteSettings()
    names = list(names) or list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise PreconditionViolation(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    reports = []
    for name in tqdm(names, desc="verify", disable=not progress, leave=False):
        rng = random.Random(f"{settings.seed}:{name}")
        reports.append(SUITES[name](settings, rng))
    return reports


def require(reports: Sequence[CheckReport]) -> None:
    for report in reports:
        report.require()
