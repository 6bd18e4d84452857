"""Exhaustive search: colorability, coloring counts and f-choosability.

These routines share nothing with the kernel-based algorithm and serve as its
independent check. Search order is lexicographic: vertices in declaration
order, colors in list order.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations, product

from .correspondence import CorrespondenceInstance
from .errors import ResourceLimitError
from .graph import Multigraph


@dataclass(frozen=True)
class SearchBudget:
    max_assignments: int = 10**7
    max_list_assignments: int = 10**6

    def __post_init__(self):
        if self.max_assignments <= 0 or self.max_list_assignments <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = SearchBudget()


def _check_budget(inst: CorrespondenceInstance, budget: SearchBudget) -> None:
    total = math.prod(len(inst.lists[v]) for v in inst.graph.vertices)
    if total > budget.max_assignments:
        raise ResourceLimitError(f"{total} assignments exceed the budget of {budget.max_assignments}")


def iter_colorings(inst: CorrespondenceInstance, budget: SearchBudget = DEFAULT_BUDGET) -> Iterator[dict[str, int]]:
    """Every (L,C)-coloring in lexicographic order.

    Backtracking that checks each edge as soon as both ends are colored; the
    pruning does not change which assignments are produced or their order.
    """
    _check_budget(inst, budget)
    verts = inst.graph.vertices
    pos = {v: i for i, v in enumerate(verts)}
    # edges checked at the later endpoint, as (earlier vertex, forbidden pairs
    # keyed by (color at later, color at earlier))
    back: list[list[tuple[str, frozenset]]] = [[] for _ in verts]
    for e in inst.graph.edges:
        first, last = sorted((e.u, e.v), key=pos.__getitem__)
        pairs = inst.matched_pairs_at(e.id, last)
        if pairs:
            back[pos[last]].append((first, frozenset(pairs)))

    chosen: dict[str, int] = {}

    def extend(i: int):
        if i == len(verts):
            yield dict(chosen)
            return
        v = verts[i]
        for c in inst.lists[v]:
            if any((c, chosen[w]) in pairs for w, pairs in back[i]):
                continue
            chosen[v] = c
            yield from extend(i + 1)
        chosen.pop(v, None)

    yield from extend(0)


def brute_force_color(inst: CorrespondenceInstance, budget: SearchBudget = DEFAULT_BUDGET) -> dict[str, int] | None:
    return next(iter_colorings(inst, budget), None)


def count_colorings(inst: CorrespondenceInstance, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in iter_colorings(inst, budget))


def is_f_choosable(
    graph: Multigraph,
    f: Mapping[str, int],
    universe: Iterable[int],
    budget: SearchBudget = DEFAULT_BUDGET,
) -> tuple[bool, dict[str, tuple[int, ...]] | None]:
    """Test every assignment of lists of size exactly f(v) drawn from ``universe``.

    Only a finite universe is searched, so True means "no counterexample among
    these colors". Returns the first uncolorable list assignment on failure.
    """
    universe = sorted(set(universe))
    total = math.prod(math.comb(len(universe), f[v]) for v in graph.vertices)
    if total > budget.max_list_assignments:
        raise ResourceLimitError(f"{total} list assignments exceed the budget of {budget.max_list_assignments}")
    options = [list(combinations(universe, f[v])) for v in graph.vertices]
    for choice in product(*options):
        lists = dict(zip(graph.vertices, choice))
        inst = CorrespondenceInstance.with_identity(graph, lists)
        if brute_force_color(inst, budget) is None:
            return False, lists
    return True, None
