"""
Dataclass for the cantor command.
"""

from dataclasses import dataclass, field
from typing import Literal, Optional

from tyro.conf import Positional

from .limits import LimitsConfig

CantorAction = Literal[
    "limit", "intervals", "cover", "gapsum", "certificate", "dratios", "affine", "spectrum"
]


@dataclass
class CantorConfig:
    action: Positional[CantorAction] = "limit"
    """Which cantor operation to run."""

    path: str = "LR*"
    """Path over L and R; the limit action needs a tail marker such as LR*."""

    spectrum: Literal["R", "T"] = "R"
    """Slopes r/m (R) or T-slopes w/m (T)."""

    depth: int = 3
    """Tree level for cover, gapsum, certificate and affine."""

    bound: Optional[str] = None
    """Sum the gaps of all nodes with g <= bound instead of a level."""

    exponent: float = 0.5
    """Exponent s of the local Hausdorff products."""

    precision: int = 30
    """Decimal digits printed."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format."""

    quiet: bool = False
    """Suppress status lines and progress bars."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
