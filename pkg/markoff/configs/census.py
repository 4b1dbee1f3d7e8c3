"""
Dataclass for the census command.
"""

from dataclasses import dataclass, field
from typing import Literal, Optional, Tuple

from .limits import LimitsConfig


@dataclass
class CensusConfig:
    bound: str = "1e100"
    """Upper bound, written as 1e100, 10^100, 10**100 or digits."""

    zagier: bool = False
    """Print M(bound) with both deviations; the bound must be a power of ten."""

    sweep: Tuple[int, ...] = ()
    """Exponents k of a deviation sweep over the bounds 10^k."""

    table: Optional[int] = None
    """Print the decorated table of this many smallest Markoff numbers."""

    list_numbers: bool = False
    """Print every Markoff number up to the bound."""

    precision: int = 64
    """Decimal digits for the logarithms."""

    threads: int = 1
    """Worker processes for the enumeration."""

    split_depth: int = 8
    """Tree level whose nodes become the work items."""

    format: Literal["csv", "tsv", "json"] = "csv"
    """Output format."""

    output: Optional[str] = None
    """Write the rows to this file instead of standard output."""

    quiet: bool = False
    """Suppress status lines and progress bars."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
