"""
Decorated Markoff triples and the binary tree of mutations.

A node (e, g, f) carries four decorations on each of its elements: the weights r, the coweights
s = (r^2 + 1)/x, the T-weights w = 3r - x and the T-coweights v = (w^2 + 9)/x.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from markoff.errors import NotCoprime, NotMarkoff, PreconditionViolation, UnsupportedPath
from markoff.report import CheckReport

Triple = Tuple[int, int, int]

DECORATIONS = ("m", "r", "s", "w", "v")


def check_path(path: str) -> str:
    path = path.strip().upper()
    if path in ("", "-", "()"):
        return ""
    if set(path) - {"L", "R"}:
        raise UnsupportedPath(f"path must be a word over L and R, got {path!r}")
    return path


def mirror(path: str) -> str:
    """Swap L and R."""
    return check_path(path).translate(str.maketrans("LR", "RL"))


def is_markoff(e: int, g: int, f: int) -> bool:
    return e * e + g * g + f * f == 3 * e * g * f


@dataclass(frozen=True)
class MarkoffNode:
    """
    Regular Markoff triple (e, g, f) with its decorations and tree path.

    Attributes:
        e (int): Left element.
        g (int): Largest element.
        f (int): Right element.
        r (Triple): Weights (r_e, r_g, r_f).
        s (Triple): Coweights.
        w (Triple): T-weights.
        v (Triple): T-coweights.
        path (str): Word over L and R from the root.
    """

    e: int
    g: int
    f: int
    r: Triple
    s: Triple
    w: Triple
    v: Triple
    path: str = ""

    @property
    def triple(self) -> Triple:
        return self.e, self.g, self.f

    @property
    def depth(self) -> int:
        return len(self.path)

    @property
    def big_g(self) -> int:
        """The other solution G = 3ef - g of the quadratic in g."""
        return 3 * self.e * self.f - self.g

    def decoration(self, name: str) -> Triple:
        if name == "m":
            return self.triple
        if name not in DECORATIONS:
            raise PreconditionViolation(f"unknown decoration {name!r}")
        return getattr(self, name)

    def slope(self) -> Fraction:
        return Fraction(self.r[1], self.g)

    def __str__(self) -> str:
        return f"({self.e},{self.g},{self.f})"


def root() -> MarkoffNode:
    return MarkoffNode(1, 5, 2, r=(0, 2, 1), s=(1, 1, 1), w=(-1, 1, 1), v=(10, 2, 5))


def _left(x: Triple, e: int) -> Triple:
    return x[0], 3 * e * x[1] - x[2], x[1]


def _right(x: Triple, f: int) -> Triple:
    return x[1], 3 * f * x[1] - x[0], x[2]


def mutate(node: MarkoffNode, direction: str) -> MarkoffNode:
    """
    Replace the triple by its left or right mutation.

    L gives (e, 3eg - f, g) and R gives (g, 3fg - e, f). Every decoration follows the same linear rule.

    Args:
        node (MarkoffNode): The node to mutate.
        direction (str): "L" or "R".

    Returns:
        MarkoffNode: The child.
    """

    if direction == "L":
        step, k = _left, node.e
    elif direction == "R":
        step, k = _right, node.f
    else:
        raise UnsupportedPath(f"mutation direction must be L or R, got {direction!r}")
    e, g, f = step(node.triple, k)
    return MarkoffNode(
        e,
        g,
        f,
        r=step(node.r, k),
        s=step(node.s, k),
        w=step(node.w, k),
        v=step(node.v, k),
        path=node.path + direction,
    )


def children(node: MarkoffNode) -> Tuple[MarkoffNode, MarkoffNode]:
    return mutate(node, "L"), mutate(node, "R")


def parent(node: MarkoffNode) -> MarkoffNode:
    """Undo the last mutation using g + G = 3ef."""
    if not node.path:
        raise PreconditionViolation("the root has no parent")
    last = node.path[-1]
    if last == "L":
        k = node.e

        def undo(x: Triple) -> Triple:
            return x[0], x[2], 3 * k * x[2] - x[1]

    else:
        k = node.f

        def undo(x: Triple) -> Triple:
            return 3 * k * x[0] - x[1], x[0], x[2]

    e, g, f = undo(node.triple)
    return MarkoffNode(
        e, g, f, r=undo(node.r), s=undo(node.s), w=undo(node.w), v=undo(node.v), path=node.path[:-1]
    )


def node_at(path: str) -> MarkoffNode:
    node = root()
    for letter in check_path(path):
        node = mutate(node, letter)
    return node


def iter_level(depth: int) -> Iterator[MarkoffNode]:
    """Nodes of one level, from left to right."""
    level: List[MarkoffNode] = [root()]
    for _ in range(depth):
        level = [child for node in level for child in children(node)]
    return iter(level)


def iter_tree(depth: int) -> Iterator[MarkoffNode]:
    """Every node up to ``depth``, level by level."""
    level: List[MarkoffNode] = [root()]
    for k in range(depth + 1):
        yield from level
        if k < depth:
            level = [child for node in level for child in children(node)]


def iter_below(bound: int) -> Iterator[MarkoffNode]:
    """Nodes with g <= bound, depth first; g grows along every path."""
    stack = [root()]
    while stack:
        node = stack.pop()
        if node.g > bound:
            continue
        yield node
        stack.extend(reversed(children(node)))


def iter_paths(depth: int) -> Iterator[str]:
    for k in range(depth + 1):
        for letters in product("LR", repeat=k):
            yield "".join(letters)


def _inverse(a: int, m: int) -> int:
    try:
        return pow(a, -1, m)
    except ValueError as exc:
        raise NotCoprime(f"{a} is not invertible modulo {m}") from exc


def decorations_direct(e: int, g: int, f: int) -> Dict[str, Triple]:
    """
    Decorations of a regular triple from modular inverses.

    r_g = e^-1 f mod g, r_f = g^-1 e mod f and r_e = f^-1 g mod e (0 for e = 1); the other
    decorations follow from s = (r^2 + 1)/x, w = 3r - x and v = (w^2 + 9)/x.

    Args:
        e (int): Left element.
        g (int): Largest element.
        f (int): Right element.

    Returns:
        Dict[str, Triple]: The triples keyed by "r", "s", "w" and "v".
    """

    if not is_markoff(e, g, f):
        raise NotMarkoff(f"({e},{g},{f}) is not a Markoff triple")
    if not (e < g and f < g):
        raise NotMarkoff(f"({e},{g},{f}) is not in regular order")

    r_e = 0 if e == 1 else _inverse(f, e) * g % e
    r_g = _inverse(e, g) * f % g
    r_f = 0 if f == 1 else _inverse(g, f) * e % f
    r = (r_e, r_g, r_f)
    xs = (e, g, f)
    s = tuple((ri * ri + 1) // x for ri, x in zip(r, xs))
    w = tuple(3 * ri - x for ri, x in zip(r, xs))
    v = tuple((wi * wi + 9) // x for wi, x in zip(w, xs))
    return {"r": r, "s": s, "w": w, "v": v}


def node_from_triple(e: int, g: int, f: int, path: str = "") -> MarkoffNode:
    decorations = decorations_direct(e, g, f)
    return MarkoffNode(e, g, f, path=path, **decorations)


def is_left_position(m1: int, m2: int, m3: int) -> bool:
    """
    Whether the sorted solution m1 < m2 < m3 occurs as a left mutation (m1, m3, m2).

    Decided by r' = m1^-1 m2 mod m3 < m3 - r'.
    """
    if not is_markoff(m1, m2, m3):
        raise NotMarkoff(f"({m1},{m2},{m3}) is not a Markoff triple")
    if not 2 < m1 < m2 < m3:
        raise PreconditionViolation(f"is_left_position needs 2 < m1 < m2 < m3, got ({m1},{m2},{m3})")
    r = _inverse(m1, m3) * m2 % m3
    return r < m3 - r


def node_checks(node: MarkoffNode) -> CheckReport:
    """Every invariant a decorated node must satisfy."""
    e, g, f = node.triple
    big_g = node.big_g
    report = CheckReport("node", payload=node.path or "-")
    report.add("markoff", is_markoff(e, g, f), str(node))
    for name, x, ri, si, wi, vi in zip("egf", node.triple, node.r, node.s, node.w, node.v):
        report.equal(f"coweight[{name}]", ri * ri + 1, si * x)
        report.equal(f"affine[{name}]", wi, 3 * ri - x)
        report.equal(f"t-coweight[{name}]", wi * wi + 9, vi * x)
    r_e, r_g, r_f = node.r
    w_e, w_g, w_f = node.w
    v_e, _, v_f = node.v
    report.add("slopes", Fraction(r_e, e) < Fraction(r_g, g) < Fraction(r_f, f), "r_e/e < r_g/g < r_f/f")
    report.equal("cofactor-f", g * r_f - f * r_g, e)
    report.equal("cofactor-e", e * r_g - g * r_e, f)
    report.equal("t-cofactor-e", g * w_f - f * w_g, 3 * e)
    report.equal("t-cofactor-f", e * w_g - g * w_e, 3 * f)
    report.equal("t-cofactor-G", e * w_f - f * w_e, 3 * big_g)
    report.equal("t-weight-sum", big_g * w_g, e * w_e + f * w_f)
    report.equal("t-coweight-e", f * v_e, w_e * w_f + 3 * (w_g - 3 * f * w_e))
    report.equal("t-coweight-f", e * v_f, w_e * w_f + 3 * (3 * e * w_f - w_g))
    return report


def tree_rows(depth: int, decorations: Sequence[str] = DECORATIONS) -> Iterator[List[str]]:
    """Rows path, e/g/f, r, s, w, v (or the chosen decorations) of every node up to ``depth``."""
    for node in iter_tree(depth):
        yield [node.path or "-"] + [",".join(str(x) for x in node.decoration(name)) for name in decorations]


def tree_dump(depth: int, decorations: Sequence[str] = DECORATIONS) -> str:
    return "\n".join("\t".join(row) for row in tree_rows(depth, decorations))
