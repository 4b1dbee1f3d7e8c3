"""
Dataclass for the verify command.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .limits import LimitsConfig


@dataclass
class VerifyConfig:
    suites: Tuple[str, ...] = ()
    """Suites to run; all of them when empty."""

    depth: int = 12
    """Tree depth for the tree-wide suites."""

    samples: int = 200
    """Random cases for the sampled suites."""

    seed: int = 0
    """Seed of the random generator."""

    max_length: int = 4
    """Longest argument vector in the exhaustive T-continuant sweep."""

    max_entry: int = 6
    """Largest entry in that sweep."""

    quiet: bool = False
    """Suppress status lines and progress bars."""

    yaml_path: Optional[str] = None
    """YAML file whose keys override these defaults."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
