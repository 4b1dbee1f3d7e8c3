"""
Handlers behind the CLI subcommands.

Each handler takes its command dataclass, writes data to standard output (or the configured file) and
status lines to standard error, and raises the library errors unchanged.
"""

import sys
from typing import Any, Dict, List, Optional

from markoff.arith.continuants import format_cf
from markoff.arith.periodic import format_display_period, format_periodic
from markoff.cantor import (
    COVER_COLUMNS,
    affine_map_check,
    cover_rows,
    d_ratios,
    gap_sum,
    gap_sum_below,
    h_partial_products,
    intervals,
    limit_point,
    measure_certificate,
    root_spectrum,
    spectrum_pair,
)
from markoff.census import (
    SWEEP_COLUMNS,
    TABLE_COLUMNS,
    deviations,
    enumerate_markoff,
    regression,
    rows_from_records,
    table_gen,
    zagier_sweep,
)
from markoff.configs import (
    CantorConfig,
    CensusConfig,
    FrobeniusConfig,
    RegressionConfig,
    TreeConfig,
    TSingConfig,
    VerifyConfig,
)
from markoff.errors import InputError, VerificationError
from markoff.frobenius import complement, frobenius_cf, reconstruct_triple, recursion_check, snake_diagram
from markoff.tree import (
    MarkoffNode,
    branch,
    complementary_weights,
    growth_sequence,
    node_at,
    node_checks,
    node_from_triple,
    sequence_table,
    tree_rows,
)
from markoff.tree.node import DECORATIONS
from markoff.tree.stern_brocot import SBFraction
from markoff.tsing import (
    TSingularity,
    append8_suite,
    cf_of_pair,
    hj_label,
    hj_of_tsing,
    juxtapose,
    le_from_pair,
    pair_from_le,
    related_cfs,
    square_cf,
    square_from_digits,
)
from markoff.utils import log_utils
from markoff.utils.format_utils import format_digits, read_records, render_mapping, render_rows
from markoff.utils.parse_utils import parse_bound, parse_ints, parse_pair, parse_triple, power_of_ten
from markoff.verify import SuiteSettings, run_suites


def emit(text: str, output: Optional[str] = None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    with open(output, "w", newline="\n") as f:
        f.write(text)
    log_utils.info(f"Saved output to {output}.")


def _progress() -> bool:
    return not log_utils.is_quiet()


def _decorations(text: str) -> List[str]:
    if text.strip().lower() == "all":
        return list(DECORATIONS)
    names = [name.strip() for name in text.split(",") if name.strip()]
    unknown = [name for name in names if name not in DECORATIONS]
    if unknown or not names:
        raise InputError(f"unknown decorations {unknown}, choose from {DECORATIONS} or all")
    return names


def select_node(path: Optional[str], triple: Optional[str]) -> MarkoffNode:
    """The node named by a path or by a regular triple e,g,f."""
    if path is not None:
        return node_at(path)
    if triple is None:
        raise InputError("select a node with --path or --triple")
    e, g, f = parse_triple(triple)
    node = node_from_triple(e, g, f)
    found, _ = reconstruct_triple(node.g, node.r[1])
    if found.triple != node.triple:
        raise InputError(f"({e},{g},{f}) is not in tree order; expected {found}")
    return found


def _node_mapping(node: MarkoffNode) -> Dict[str, Any]:
    mapping: Dict[str, Any] = {"path": node.path or "-"}
    for name in DECORATIONS:
        mapping[name] = format_cf(node.decoration(name))
    return mapping


def run_tree(cfg: TreeConfig) -> int:
    names = _decorations(cfg.decorations)
    if cfg.action == "dump":
        emit(render_rows(tree_rows(cfg.depth, names), ["path"] + names, cfg.format))
    elif cfg.action == "node":
        node = select_node(cfg.path, cfg.triple)
        node_checks(node).require()
        emit(render_mapping(_node_mapping(node), cfg.format))
    elif cfg.action == "branch":
        node = branch(cfg.branch, cfg.n)
        mapping = _node_mapping(node)
        mapping["g-w"] = format_cf(complementary_weights(cfg.branch, cfg.n))
        emit(render_mapping(mapping, cfg.format))
    elif cfg.action == "growth":
        node = node_at(cfg.path or "")
        rows = [[name] + growth_sequence(node, cfg.side, cfg.n, name) for name in names]
        emit(render_rows(rows, ["decoration"] + [str(i) for i in range(cfg.n)], cfg.format))
    else:
        table = sequence_table(cfg.n)
        rows = [[i] + [table[name][i] for name in table] for i in range(cfg.n)]
        emit(render_rows(rows, ["i"] + list(table), cfg.format))
    return 0


def run_frobenius(cfg: FrobeniusConfig) -> int:
    if cfg.action == "reconstruct":
        if cfg.m is None or cfg.r is None:
            raise InputError("reconstruct needs --m and --r")
        node, frac = reconstruct_triple(cfg.m, cfg.r)
        mapping = {"fraction": str(frac)}
        mapping.update(_node_mapping(node))
        emit(render_mapping(mapping, cfg.format))
        return 0

    frac = SBFraction.parse(cfg.fraction)
    mu, nu = frac.mu, frac.nu
    if cfg.action == "snake":
        emit(snake_diagram(mu, nu).render() + "\n")
    elif cfg.action == "recursion":
        report = recursion_check(mu, nu).require()
        emit(report.summary() + "\n")
    else:
        cf = frobenius_cf(mu, nu) if cfg.action == "cf" else complement(mu, nu)
        mapping = {
            "fraction": f"{cf.mu}/{cf.nu}",
            "cf": format_digits(cf.digits),
            "m": cf.markoff,
            "r": cf.weight,
            "s": cf.coweight,
        }
        emit(render_mapping(mapping, cfg.format))
    return 0


def _tsing_pair(cfg: TSingConfig) -> TSingularity:
    if cfg.pair is not None:
        n, k = parse_pair(cfg.pair)
        return TSingularity(n, k)
    if cfg.le is not None:
        return pair_from_le(parse_ints(cfg.le))
    if cfg.path is not None or cfg.triple is not None:
        node = select_node(cfg.path, cfg.triple)
        return TSingularity(node.g, node.w[1])
    raise InputError("give --pair, --le, --triple or --path")


def run_tsing(cfg: TSingConfig) -> int:
    if cfg.action == "juxtapose":
        if cfg.left is None or cfg.right is None:
            raise InputError("juxtapose needs --left and --right")
        sq = juxtapose(square_from_digits(parse_ints(cfg.left)), square_from_digits(parse_ints(cfg.right)))
        emit(format_digits(sq.digits) + "\n")
        return 0

    t = _tsing_pair(cfg)
    if cfg.action == "le":
        if not t.is_normal:
            log_utils.warn(f"k replaced by n - k = {t.n - t.k}")
        emit(format_digits(le_from_pair(t.normalized())) + "\n")
    elif cfg.action == "pair":
        emit(f"{t.n},{t.k}\n")
    elif cfg.action == "square":
        sq = square_cf(t)
        if sq.note:
            log_utils.warn(sq.note)
        emit(format_digits(sq.digits) + "\n")
    elif cfg.action == "hj":
        hj = hj_of_tsing(t)
        emit(render_mapping({"hj": format_digits(hj), "graph": hj_label(hj)}, cfg.format))
    elif cfg.action == "cf":
        digits, degenerate = cf_of_pair(t)
        if degenerate:
            log_utils.warn(f"the LE of {t} has fewer than two entries; printing the plain expansion")
        emit(format_digits(digits) + "\n")
    elif cfg.action == "related":
        related = related_cfs(t)
        emit(render_mapping({name: format_digits(digits) for name, digits in related.items()}, cfg.format))
    else:
        report = append8_suite(square_cf(t)).require()
        emit(report.summary() + "\n")
    return 0


def _interval_row(interval, digits: int) -> List[str]:
    return [
        interval.kind,
        interval.path or "-",
        interval.lo.format_quadruple(),
        interval.hi.format_quadruple(),
        interval.lo.decimal(digits),
        interval.hi.decimal(digits),
        interval.length().decimal(digits),
    ]


def run_cantor(cfg: CantorConfig) -> int:
    digits = cfg.precision
    if cfg.action == "limit":
        point = limit_point(cfg.path, cfg.spectrum)
        mapping = {
            "path": point.path,
            "spectrum": point.spectrum,
            "value": str(point.value),
            "quadruple": point.value.format_quadruple(),
            "cf": format_periodic(point.expansion),
            "decimal": point.decimal(digits),
        }
        emit(render_mapping(mapping, cfg.format))
    elif cfg.action == "intervals":
        node = node_at(cfg.path)
        rows = [_interval_row(x, digits) for x in intervals(node, cfg.spectrum)]
        columns = ["kind", "path", "lo_exact", "hi_exact", "lo_dec", "hi_dec", "length"]
        emit(render_rows(rows, columns, cfg.format))
    elif cfg.action == "cover":
        rows = cover_rows(cfg.depth, cfg.spectrum, digits, cap=cfg.limits.cover_depth)
        emit(render_rows(rows, COVER_COLUMNS, cfg.format))
    elif cfg.action == "gapsum":
        if cfg.bound is not None:
            total = gap_sum_below(parse_bound(cfg.bound))
        else:
            total = gap_sum(cfg.depth)
        emit(total.decimal(digits) + "\n")
    elif cfg.action == "certificate":
        report = measure_certificate(cfg.depth, cfg.spectrum, progress=_progress())
        emit(report.summary() + "\n")
    elif cfg.action == "affine":
        emit(affine_map_check(cfg.depth).require().summary() + "\n")
    elif cfg.action == "dratios":
        word = cfg.path
        products = h_partial_products(word, cfg.exponent, dps=max(digits, 15))
        rows = []
        for i, product in enumerate(products):
            ratios = d_ratios(word[:i])
            prefix = word[:i] or "-"
            rows.append([prefix, ratios.left.decimal(digits), ratios.right.decimal(digits), str(product)])
        emit(render_rows(rows, ["prefix", "d_L", "d_R", f"h^{cfg.exponent}"], cfg.format))
    else:
        if cfg.path in ("", "-"):
            entries = root_spectrum(cfg.spectrum)
        else:
            entries = spectrum_pair(node_at(cfg.path), cfg.spectrum)
        rows = [
            [name, str(entry.value), entry.value.decimal(digits), format_display_period(entry.period)]
            for name, entry in zip(("left", "right-1"), entries)
        ]
        emit(render_rows(rows, ["limit", "value", "decimal", "period"], cfg.format))
    return 0


def run_census(cfg: CensusConfig) -> int:
    if cfg.table is not None:
        rows = [row.cells() for row in table_gen(cfg.table, cap=cfg.limits.table_rows)]
        emit(render_rows(rows, TABLE_COLUMNS, cfg.format), cfg.output)
        return 0
    if cfg.sweep:
        sweep = zagier_sweep(cfg.sweep, cfg.precision, cfg.threads, progress=_progress())
        emit(render_rows((row.cells() for row in sweep), SWEEP_COLUMNS, cfg.format), cfg.output)
        return 0

    bound = parse_bound(cfg.bound)
    k = power_of_ten(bound) if cfg.zagier else None
    log_utils.info(f"Enumerating Markoff numbers up to {cfg.bound} with {cfg.threads} worker(s)...")
    result = enumerate_markoff(
        bound,
        threads=cfg.threads,
        split_depth=cfg.split_depth,
        budget=cfg.limits.census_nodes,
        progress=_progress(),
    )
    log_utils.info(f"Found {result.count} Markoff numbers.")
    if not result.unique:
        raise VerificationError(f"numbers reached twice: {result.duplicates[:10]}")
    if k is not None:
        row = deviations(k, result.count, cfg.precision)
        emit(render_rows([row.cells()], SWEEP_COLUMNS, cfg.format), cfg.output)
    elif cfg.list_numbers:
        emit(render_rows(([m] for m in result.numbers), ["m"], cfg.format), cfg.output)
    else:
        mapping = {"bound": cfg.bound, "count": result.count, "duplicates": len(result.duplicates)}
        emit(render_mapping(mapping, cfg.format), cfg.output)
    return 0


def run_verify(cfg: VerifyConfig) -> int:
    settings = SuiteSettings(
        depth=cfg.depth,
        samples=cfg.samples,
        seed=cfg.seed,
        max_length=cfg.max_length,
        max_entry=cfg.max_entry,
        index_cap=cfg.limits.index_sets,
    )
    reports = run_suites(cfg.suites, settings, progress=_progress())
    for report in reports:
        emit(report.summary() + "\n")
        for check in report.failures[:10]:
            log_utils.error(f"{report.name}:{check.clause} {check.detail}")
    for report in reports:
        report.require()
    return 0


def run_regression(cfg: RegressionConfig) -> int:
    try:
        with open(cfg.csv_path, "r") as f:
            text = f.read()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.csv_path}: {exc}") from exc
    rows = rows_from_records(read_records(text, cfg.delimiter), cfg.precision)
    log_utils.info(f"Fitting {len(rows)} rows from {cfg.csv_path}...")
    emit(render_mapping(regression(rows).summary(), cfg.format))
    return 0


HANDLERS = {
    TreeConfig: run_tree,
    FrobeniusConfig: run_frobenius,
    TSingConfig: run_tsing,
    CantorConfig: run_cantor,
    CensusConfig: run_census,
    VerifyConfig: run_verify,
    RegressionConfig: run_regression,
}
