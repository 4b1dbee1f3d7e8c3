"""
Snake diagrams: the boxes along the diagonal of the (mu + nu) x nu grid.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

from markoff.frobenius.frobenius import segment_kappas

Box = Tuple[int, int, str]

CELL = 5


@dataclass
class SnakeDiagram:
    """
    Boxes touching the diagonal from (0, 0) to (mu + nu, nu).

    Row j holds one Fibonacci segment: a corner box with 2, kappa boxes with 1,1 and a closing box
    with 2. Each row starts in the column where the previous one ends.

    Attributes:
        mu (int): Numerator of the index.
        nu (int): Denominator of the index.
        boxes (List[Box]): (row, column, label) from bottom-left to top-right.
        degenerate (bool): Set when mu or nu is 1; such snakes follow the rule literally.
    """

    mu: int
    nu: int
    boxes: List[Box] = field(default_factory=list)
    degenerate: bool = False

    @property
    def columns(self) -> int:
        return self.mu + self.nu

    def digits(self) -> List[int]:
        digits: List[int] = []
        for _, _, label in self.boxes:
            digits += [int(part) for part in label.split(",")]
        return digits

    def render(self) -> str:
        cells = {(row, col): label for row, col, label in self.boxes}
        lines = []
        border = "+" + ("-" * CELL + "+") * self.columns
        for row in reversed(range(self.nu)):
            lines.append(border)
            parts = [cells.get((row, col), "").center(CELL) for col in range(self.columns)]
            lines.append("|" + "|".join(parts) + "|")
        lines.append(border)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def snake_diagram(mu: int, nu: int) -> SnakeDiagram:
    diagram = SnakeDiagram(mu, nu, degenerate=(mu == 1 or nu == 1))
    col = 0
    for row, k in enumerate(segment_kappas(mu, nu)):
        diagram.boxes.append((row, col, "2"))
        for _ in range(k):
            col += 1
            diagram.boxes.append((row, col, "1,1"))
        col += 1
        diagram.boxes.append((row, col, "2"))
    return diagram
