"""
Enumeration of Markoff numbers below a bound.

Every Markoff number other than 1 and 2 is the largest entry g of exactly the regular triples (e, g, f)
found in the tree below (1, 5, 2), and g grows along every path, so a depth-first search that stops at
g > bound visits each candidate once. Large searches split the tree at a fixed level and hand the
subtree roots to worker processes through a managed queue.
"""

import multiprocessing as mp
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, List, Tuple

from tqdm import tqdm

from markoff.errors import PreconditionViolation, ResourceLimit

Triple = Tuple[int, int, int]

SINGULAR = (1, 2)

ROOT: Triple = (1, 5, 2)

MAX_NODES = 5_000_000


@dataclass
class CensusResult:
    """
    Outcome of one enumeration.

    Attributes:
        bound (int): Upper bound on the numbers.
        numbers (List[int]): Distinct Markoff numbers <= bound, increasing.
        duplicates (List[int]): Numbers reached at more than one node; expected empty.
    """

    bound: int
    numbers: List[int] = field(default_factory=list)
    duplicates: List[int] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.numbers)

    @property
    def unique(self) -> bool:
        return not self.duplicates


def _subtree(start: Triple, bound: int, budget: int) -> List[int]:
    """Largest entries of the nodes below ``start`` (inclusive) with g <= bound."""
    found = []
    stack = [start]
    while stack:
        e, g, f = stack.pop()
        if g > bound:
            continue
        found.append(g)
        if len(found) > budget:
            raise ResourceLimit(f"more than {budget} nodes below the bound {bound}")
        stack.append((g, 3 * f * g - e, f))
        stack.append((e, 3 * e * g - f, g))
    return found


def _split(bound: int, depth: int) -> Tuple[List[int], List[Triple]]:
    """Nodes above ``depth`` and the subtree roots at ``depth``, pruned at the bound."""
    above: List[int] = []
    level = [ROOT]
    for _ in range(depth):
        nxt = []
        for e, g, f in level:
            if g > bound:
                continue
            above.append(g)
            nxt.append((e, 3 * e * g - f, g))
            nxt.append((g, 3 * f * g - e, f))
        level = nxt
    return above, [t for t in level if t[1] <= bound]


def _worker(tasks, results, bound: int, budget: int) -> None:
    while True:
        item = tasks.get()
        if item is None:
            return
        index, start = item
        try:
            results[index] = _subtree(start, bound, budget)
        except ResourceLimit as e:
            results[index] = str(e)


def _collect(values: List[int], bound: int) -> CensusResult:
    values = values + [x for x in SINGULAR if x <= bound]
    counts = Counter(values)
    return CensusResult(
        bound=bound,
        numbers=sorted(counts),
        duplicates=sorted(x for x, c in counts.items() if c > 1),
    )


def enumerate_markoff(
    bound: int,
    threads: int = 1,
    split_depth: int = 8,
    budget: int = MAX_NODES,
    progress: bool = False,
) -> CensusResult:
    """
    All Markoff numbers <= bound.

    Args:
        bound (int): Upper bound, >= 1.
        threads (int): Worker processes; 1 runs in-process.
        split_depth (int): Tree level whose nodes become the work items.
        budget (int): Largest number of nodes visited in one subtree.
        progress (bool): Show a progress bar over the work items.

    Returns:
        CensusResult: Sorted distinct numbers and the duplicate list; the same for every thread count.
    """

    if bound < 1:
        raise PreconditionViolation(f"bound must be >= 1, got {bound}")
    if threads < 1:
        raise PreconditionViolation(f"threads must be >= 1, got {threads}")
    above, roots = _split(bound, split_depth)
    if len(above) > budget:
        raise ResourceLimit(f"more than {budget} nodes below the bound {bound}")

    if threads == 1 or len(roots) < 2:
        values = list(above)
        for start in tqdm(roots, desc="census", disable=not progress, leave=False):
            values.extend(_subtree(start, bound, budget))
        return _collect(values, bound)

    with mp.Manager() as manager:
        tasks = manager.Queue()
        results = manager.dict()
        for item in enumerate(roots):
            tasks.put(item)
        processes = []
        for _ in range(threads):
            tasks.put(None)
            p = mp.Process(target=_worker, args=(tasks, results, bound, budget), daemon=True)
            p.start()
            processes.append(p)
        for p in tqdm(processes, desc="census", disable=not progress, leave=False):
            p.join()
        collected = dict(results)

    values = list(above)
    for index in range(len(roots)):
        part = collected.get(index)
        if part is None:
            raise ResourceLimit(f"worker lost subtree {index}")
        if isinstance(part, str):
            raise ResourceLimit(part)
        values.extend(part)
    return _collect(values, bound)


def markoff_count(bound: int, threads: int = 1) -> int:
    """M(bound), the number of Markoff numbers <= bound."""
    return enumerate_markoff(bound, threads=threads).count


def uniqueness_check(bound: int, threads: int = 1, budget: int = MAX_NODES) -> CensusResult:
    """
    Enumerate and report numbers that occur as the largest entry of two regular triples.

    Raises:
        ResourceLimit: When the search exceeds the node budget.
    """

    return enumerate_markoff(bound, threads=threads, budget=budget)


def iter_triples(bound: int) -> Iterator[Triple]:
    """Regular triples (e, g, f) with g <= bound, depth first from the root."""
    stack = [ROOT]
    while stack:
        e, g, f = stack.pop()
        if g > bound:
            continue
        yield e, g, f
        stack.append((g, 3 * f * g - e, f))
        stack.append((e, 3 * e * g - f, g))
