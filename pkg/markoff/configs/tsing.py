"""
Dataclass for the tsing command.
"""

from dataclasses import dataclass
from typing import Literal, Optional

from tyro.conf import Positional

TSingAction = Literal["le", "pair", "square", "hj", "cf", "related", "append8", "juxtapose"]


@dataclass
class TSingConfig:
    action: Positional[TSingAction] = "square"
    """Operation on T-singularities and square continued fractions."""

    le: Optional[str] = None
    """Length encoding c_1,...,c_m."""

    pair: Optional[str] = None
    """Pair n,k of the singularity 1/n^2 (1, nk - 1)."""

    triple: Optional[str] = None
    """Regular Markoff triple e,g,f; its largest element and T-weight give the pair."""

    path: Optional[str] = None
    """Tree path selecting the node instead of a triple."""

    left: Optional[str] = None
    """Square expansion of e for the juxtapose action."""

    right: Optional[str] = None
    """Square expansion of f for the juxtapose action."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format."""

    quiet: bool = False
    """Suppress status lines and warnings."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""
