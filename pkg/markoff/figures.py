"""
Tables behind the figures the toolkit regenerates: decorated trees, Frobenius expansions with their
snakes, LEs and square expansions, the two periodic spectra, interval covers, the decorated number
table and the Zagier deviations.
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from markoff.arith.periodic import format_display_period
from markoff.cantor import COVER_COLUMNS, cover_rows, root_spectrum, spectrum_pair
from markoff.census import SWEEP_COLUMNS, TABLE_COLUMNS, table_gen, zagier_sweep
from markoff.errors import InputError
from markoff.frobenius import frobenius_cf, snake_diagram
from markoff.tree import iter_tree, tree_rows
from markoff.tree.node import DECORATIONS
from markoff.tree.stern_brocot import fraction_of_path
from markoff.tsing import TSingularity, hj_label, hj_of_tsing, le_from_pair, square_cf_tree
from markoff.utils.format_utils import format_digits, render_rows


@dataclass(frozen=True)
class FigureSettings:
    """
    Sizes of the regenerated figures.

    Attributes:
        depth (int): Deepest tree level of the tree-shaped figures.
        precision (int): Decimal digits of printed irrationals.
        ks (Tuple[int, ...]): Exponents of the deviation table.
        rows (int): Rows of the decorated number table.
        snakes (Tuple[Tuple[int, int], ...]): Indices mu/nu whose snakes are drawn.
    """

    depth: int = 3
    precision: int = 12
    ks: Tuple[int, ...] = (0, 10, 20, 50, 100)
    rows: int = 20
    snakes: Tuple[Tuple[int, int], ...] = ((5, 3), (3, 5))


@dataclass(frozen=True)
class FigureTable:
    name: str
    title: str
    columns: Tuple[str, ...]
    rows: List[List[str]]

    def render(self, fmt: str = "tsv") -> str:
        return render_rows(self.rows, self.columns, fmt)


def tree_figure(settings: FigureSettings) -> FigureTable:
    return FigureTable(
        "tree",
        "Decorated Markoff tree",
        ("path",) + DECORATIONS,
        list(tree_rows(settings.depth)),
    )


def frobenius_figure(settings: FigureSettings) -> FigureTable:
    rows = []
    for node in iter_tree(settings.depth):
        frac = fraction_of_path(node.path)
        cf = frobenius_cf(frac.mu, frac.nu)
        rows.append([node.path or "-", str(frac), format_digits(cf.digits), str(cf.markoff), str(cf.weight)])
    return FigureTable("frobenius", "Frobenius expansions m/r", ("path", "index", "cf", "m", "r"), rows)


def snake_figure(settings: FigureSettings) -> FigureTable:
    rows = []
    for mu, nu in settings.snakes:
        snake = snake_diagram(mu, nu)
        rows.append([f"{mu}/{nu}", format_digits(snake.digits()), snake.render()])
    return FigureTable("snake", "Snake diagrams", ("index", "reading", "diagram"), rows)


def le_figure(settings: FigureSettings) -> FigureTable:
    """LE, square expansion and HJ chain of the T-singularity (g, w_g) at every node."""
    squares = square_cf_tree(settings.depth)
    rows = []
    for node in iter_tree(settings.depth):
        t = TSingularity(node.g, node.w[1])
        hj = hj_of_tsing(t)
        rows.append(
            [
                node.path or "-",
                f"{t.n},{t.k}",
                format_digits(le_from_pair(t.normalized())),
                format_digits(squares[node.path].digits),
                hj_label(hj),
            ]
        )
    return FigureTable("les", "LEs and square expansions", ("path", "pair", "le", "square", "hj"), rows)


def _spectrum_figure(spectrum: str, settings: FigureSettings) -> FigureTable:
    digits = settings.precision
    rows = []
    entries = [("singular", root_spectrum(spectrum))]
    entries += [(node.path or "-", spectrum_pair(node, spectrum)) for node in iter_tree(settings.depth - 1)]
    for path, (left, right) in entries:
        rows.append(
            [
                path,
                left.value.decimal(digits),
                format_display_period(left.period),
                right.value.decimal(digits),
                format_display_period(right.period),
            ]
        )
    columns = ("path", "left", "left_period", "right-1", "right_period")
    title = "Periodic slopes r/m" if spectrum == "R" else "Periodic T-slopes w/m"
    return FigureTable(f"spectrum-{spectrum}", title, columns, rows)


def spectrum_r_figure(settings: FigureSettings) -> FigureTable:
    return _spectrum_figure("R", settings)


def spectrum_t_figure(settings: FigureSettings) -> FigureTable:
    return _spectrum_figure("T", settings)


def cover_figure(settings: FigureSettings) -> FigureTable:
    rows = []
    for depth in range(settings.depth + 1):
        rows.extend(cover_rows(depth, "R", settings.precision))
    return FigureTable("cover", "Interval covers of the slope Cantor set", COVER_COLUMNS, rows)


def table_figure(settings: FigureSettings) -> FigureTable:
    rows = [row.cells() for row in table_gen(settings.rows)]
    return FigureTable("table", "Smallest Markoff numbers with r, s, w, v", TABLE_COLUMNS, rows)


def zagier_figure(settings: FigureSettings) -> FigureTable:
    rows = [row.cells(settings.precision) for row in zagier_sweep(settings.ks)]
    return FigureTable("zagier", "Deviation of M(10^k) from the Zagier estimates", SWEEP_COLUMNS, rows)


FIGURES: Dict[str, Callable[[FigureSettings], FigureTable]] = {
    "tree": tree_figure,
    "frobenius": frobenius_figure,
    "snake": snake_figure,
    "les": le_figure,
    "spectrum-R": spectrum_r_figure,
    "spectrum-T": spectrum_t_figure,
    "cover": cover_figure,
    "table": table_figure,
    "zagier": zagier_figure,
}


def figure_tables(
    names: Optional[Sequence[str]] = None, settings: Optional[FigureSettings] = None
) -> List[FigureTable]:
    """
    Build the named figure tables, all of them by default.

    Args:
        names (Optional[Sequence[str]]): Keys of ``FIGURES``.
        settings (Optional[FigureSettings]): Figure sizes.

    Returns:
        List[FigureTable]: One table per name, in the order given.
    """

    settings = settings or FigureSettings()
    names = list(names) if names else list(FIGURES)
    unknown = [name for name in names if name not in FIGURES]
    if unknown:
        raise InputError(f"unknown figures {unknown}, choose from {list(FIGURES)}")
    return [FIGURES[name](settings) for name in names]
