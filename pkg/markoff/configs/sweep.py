"""
Dataclass for the Zagier sweep script.
"""

from dataclasses import dataclass
from typing import Literal, Optional


@dataclass
class SweepConfig:
    start: int = 0
    """Smallest exponent k of the bounds 10^k."""

    stop: int = 300
    """Largest exponent k, included."""

    step: int = 10
    """Distance between consecutive exponents."""

    precision: int = 64
    """Decimal digits for the logarithms."""

    threads: int = 1
    """Worker processes for the enumeration."""

    output: str = "./zagier.csv"
    """Sweep file written with the columns k,M,dev_logn,dev_log3n."""

    format: Literal["csv", "tsv", "json"] = "csv"
    """Format of the sweep file."""

    fit: bool = True
    """Print the least-squares fit of the sweep; needs at least three exponents."""

    quiet: bool = False
    """Suppress status lines and progress bars."""

    yaml_path: Optional[str] = "./configs/zagier.yaml"
    """YAML file whose keys override these defaults; skipped when missing."""
