"""
Decorated tables of the smallest Markoff numbers.
"""

from dataclasses import dataclass
from typing import Dict, List

from markoff.errors import NotMarkoff, PreconditionViolation, ResourceLimit
from markoff.tree.node import iter_below, root

TABLE_COLUMNS = ("m", "r", "s", "w", "v")

MAX_TABLE = 100_000


@dataclass(frozen=True)
class TableRow:
    """
    A Markoff number with its weight r, coweight s, T-weight w and T-coweight v.

    For m > 2 the decorations are those at the node where m is the largest entry; 1 and 2 take the
    values they carry as the outer entries of the root (1, 5, 2).
    """

    m: int
    r: int
    s: int
    w: int
    v: int

    def cells(self) -> List[str]:
        return [str(getattr(self, name)) for name in TABLE_COLUMNS]

    def as_dict(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in TABLE_COLUMNS}


def singular_rows() -> List[TableRow]:
    top = root()
    return [
        TableRow(top.e, top.r[0], top.s[0], top.w[0], top.v[0]),
        TableRow(top.f, top.r[2], top.s[2], top.w[2], top.v[2]),
    ]


def table_gen(count: int, cap: int = MAX_TABLE) -> List[TableRow]:
    """
    The ``count`` smallest Markoff numbers in increasing order with their decorations.

    Args:
        count (int): Number of rows, >= 1.
        cap (int): Largest table built.

    Returns:
        List[TableRow]: Rows sorted by m.
    """

    if count < 1:
        raise PreconditionViolation(f"count must be >= 1, got {count}")
    if count > cap:
        raise ResourceLimit(f"a table of {count} rows exceeds the cap {cap}")
    rows = singular_rows()
    bound = 10
    while True:
        found = [TableRow(n.g, n.r[1], n.s[1], n.w[1], n.v[1]) for n in iter_below(bound)]
        if len(found) + len(rows) >= count:
            break
        bound *= bound
    # every number below the bound is present, so the smallest ``count`` are exact
    return sorted(rows + found, key=lambda row: row.m)[:count]


def table_row(m: int) -> TableRow:
    """The row of a single Markoff number."""
    for row in singular_rows():
        if row.m == m:
            return row
    for node in iter_below(m):
        if node.g == m:
            return TableRow(node.g, node.r[1], node.s[1], node.w[1], node.v[1])
    raise NotMarkoff(f"{m} is not a Markoff number")
