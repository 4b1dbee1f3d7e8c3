"""
Dataclass for the tree command.
"""

from dataclasses import dataclass
from typing import Literal, Optional

from tyro.conf import Positional


@dataclass
class TreeConfig:
    action: Positional[Literal["dump", "node", "branch", "growth", "sequences"]] = "dump"
    """What to print: the decorated tree, one node, a branch node, growth data or the integer sequences."""

    depth: int = 3
    """Deepest tree level to print."""

    decorations: str = "all"
    """Comma-separated decorations among m, r, s, w, v, or all."""

    path: Optional[str] = None
    """Path over L and R selecting a node."""

    triple: Optional[str] = None
    """Regular Markoff triple e,g,f selecting a node."""

    branch: Literal["fibonacci", "pell"] = "fibonacci"
    """Branch used by the branch action."""

    n: int = 3
    """Index on the branch, or number of terms for growth and sequences."""

    side: Literal["E", "F"] = "E"
    """Side mutated repeatedly by the growth action."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format."""

    quiet: bool = False
    """Suppress status lines and progress bars."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""
