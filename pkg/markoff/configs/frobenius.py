"""
Dataclass for the frobenius command.
"""

from dataclasses import dataclass
from typing import Literal, Optional

from tyro.conf import Positional


@dataclass
class FrobeniusConfig:
    action: Positional[Literal["cf", "snake", "complement", "recursion", "reconstruct"]] = "cf"
    """Expansion of m/r, snake diagram, complementary expansion, recursion check or triple reconstruction."""

    fraction: str = "3/2"
    """Stern-Brocot index mu/nu."""

    m: Optional[int] = None
    """Markoff number for the reconstruct action."""

    r: Optional[int] = None
    """Weight for the reconstruct action."""

    format: Literal["tsv", "csv", "json"] = "tsv"
    """Output format."""

    quiet: bool = False
    """Suppress status lines."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""
