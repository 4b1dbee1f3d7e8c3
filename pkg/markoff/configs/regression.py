"""
Dataclass for the regression command.
"""

from dataclasses import dataclass
from typing import Literal, Optional


@dataclass
class RegressionConfig:
    csv_path: str = "./zagier.csv"
    """Sweep file with the columns k,M,dev_logn,dev_log3n."""

    delimiter: Literal[",", "\t"] = ","
    """Column separator of the sweep file."""

    precision: int = 64
    """Decimal digits used when reading the deviations."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format."""

    quiet: bool = False
    """Suppress status lines."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""
