"""
Dataclass for the figure script.
"""

from dataclasses import dataclass
from typing import Literal, Optional, Tuple


@dataclass
class FiguresConfig:
    names: Tuple[str, ...] = ()
    """Figures to print, among tree, frobenius, snake, les, spectrum-R, spectrum-T, cover, table, zagier; all when empty."""

    depth: int = 3
    """Deepest tree level of the tree-shaped figures."""

    precision: int = 12
    """Decimal digits of printed irrationals."""

    ks: Tuple[int, ...] = (0, 10, 20, 50, 100)
    """Exponents of the deviation table."""

    rows: int = 20
    """Rows of the decorated number table."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format of the tables."""

    output_dir: Optional[str] = None
    """Write one file per figure here instead of printing them."""

    quiet: bool = False
    """Suppress status lines."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""
