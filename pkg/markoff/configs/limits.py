"""
Dataclass for resource caps shared by the commands.
"""

from dataclasses import dataclass


@dataclass
class LimitsConfig:
    cover_depth: int = 16
    """Largest tree level whose interval cover is built."""

    index_sets: int = 25
    """Largest order m whose T-continuant index sets are built explicitly."""

    census_nodes: int = 5_000_000
    """Largest number of tree nodes visited by one census subtree."""

    table_rows: int = 100_000
    """Largest decorated table."""
