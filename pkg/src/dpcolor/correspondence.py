"""Correspondence assignments: color lists plus a partial matching per edge.

Matching pairs are stored as ``(c_u, c_v)`` relative to the edge's stored
endpoint order. Use :meth:`CorrespondenceInstance.matched_pairs_at` to get
pairs oriented from a chosen endpoint.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .errors import MalformedInputError
from .graph import Biorientation, Multigraph

Pair = tuple[int, int]


class EdgeClass(enum.Enum):
    STRAIGHT = "straight"
    TWISTED = "twisted"
    EMPTY = "empty"


@dataclass(eq=True)
class CorrespondenceInstance:
    """The tuple (G, L, C, D); the orientation D is optional."""

    graph: Multigraph
    lists: dict[str, tuple[int, ...]]
    matchings: dict[str, tuple[Pair, ...]]
    orientation: Biorientation | None = None
    _classes: dict[str, EdgeClass] | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        lists = {v: tuple(c) for v, c in self.lists.items()}
        for v in self.graph.vertices:
            lists.setdefault(v, ())
        self.lists = lists
        self.matchings = {eid: tuple(tuple(p) for p in pairs) for eid, pairs in self.matchings.items()}
        for e in self.graph.edges:
            self.matchings.setdefault(e.id, ())
        if self.orientation is not None and self.orientation.base != self.graph:
            raise MalformedInputError("orientation is over a different graph")

    @classmethod
    def with_identity(
        cls,
        graph: Multigraph,
        lists: Mapping[str, Iterable[int]],
        orientation: Biorientation | None = None,
        matchings: Mapping[str, Iterable[Pair]] | None = None,
    ) -> CorrespondenceInstance:
        """Instance whose unspecified edges carry the identity matching (plain list coloring)."""
        lists = {v: tuple(lists[v]) for v in graph.vertices}
        given = dict(matchings or {})
        full = {}
        for e in graph.edges:
            if e.id in given:
                full[e.id] = tuple(given[e.id])
            else:
                other = set(lists[e.v])
                full[e.id] = tuple((c, c) for c in lists[e.u] if c in other)
        return cls(graph, lists, full, orientation)

    def edge_class(self, eid: str) -> EdgeClass:
        if self._classes is None:
            self._classes = {e.id: _classify(self.matchings[e.id]) for e in self.graph.edges}
        self.graph.edge(eid)
        return self._classes[eid]

    def matched_pairs_at(self, eid: str, endpoint: str) -> list[Pair]:
        """Pairs of edge ``eid`` as (color at ``endpoint``, color at the other end)."""
        e = self.graph.edge(eid)
        pairs = self.matchings[eid]
        if endpoint == e.u:
            return list(pairs)
        if endpoint == e.v:
            return [(b, a) for a, b in pairs]
        raise MalformedInputError(f"vertex {endpoint!r} is not an endpoint of edge {eid!r}")


def _classify(pairs: tuple[Pair, ...]) -> EdgeClass:
    if not pairs:
        return EdgeClass.EMPTY
    if all(a == b for a, b in pairs):
        return EdgeClass.STRAIGHT
    return EdgeClass.TWISTED


def classify_edge(inst: CorrespondenceInstance, eid: str) -> EdgeClass:
    return inst.edge_class(eid)


def edges_of_class(inst: CorrespondenceInstance, cls: EdgeClass) -> list[str]:
    return [e.id for e in inst.graph.edges if inst.edge_class(e.id) is cls]


def straight_subgraph(inst: CorrespondenceInstance) -> Multigraph:
    """G_S, spanning; edges with empty matchings are left out."""
    return inst.graph.edge_subgraph(edges_of_class(inst, EdgeClass.STRAIGHT))


def twisted_subgraph(inst: CorrespondenceInstance) -> Multigraph:
    """G_T, spanning."""
    return inst.graph.edge_subgraph(edges_of_class(inst, EdgeClass.TWISTED))


def is_partial_derangement(inst: CorrespondenceInstance, eid: str) -> bool:
    inst.graph.edge(eid)
    return all(a != b for a, b in inst.matchings[eid])


def is_derangement_assignment(inst: CorrespondenceInstance) -> tuple[bool, list[str]]:
    """Whether every twisted edge is fixed-point free; also returns the offending edges."""
    bad = [
        eid
        for eid in edges_of_class(inst, EdgeClass.TWISTED)
        if not is_partial_derangement(inst, eid)
    ]
    return not bad, bad


def identity_matching(inst: CorrespondenceInstance, eid: str) -> tuple[Pair, ...]:
    e = inst.graph.edge(eid)
    other = set(inst.lists[e.v])
    return tuple((c, c) for c in inst.lists[e.u] if c in other)


def restrict(
    inst: CorrespondenceInstance,
    deleted: Iterable[str] = (),
    removed_colors: Mapping[str, Iterable[int]] | None = None,
) -> CorrespondenceInstance:
    """Delete vertices and strip colors from the surviving lists.

    Every matching pair that mentions a removed color or a deleted endpoint
    disappears; the orientation, if any, is restricted along with the graph.
    """
    deleted = inst.graph.check_vertices(deleted)
    removed: dict[str, set[int]] = {}
    for v, cs in (removed_colors or {}).items():
        if v in deleted:
            continue
        if v not in inst.graph:
            raise MalformedInputError(f"unknown vertex {v!r}")
        cs = set(cs)
        if not cs:
            continue
        missing = cs.difference(inst.lists[v])
        if missing:
            raise MalformedInputError(f"colors {sorted(missing)} are not in the list of {v!r}")
        removed[v] = cs

    keep = [v for v in inst.graph.vertices if v not in deleted]
    graph = inst.graph.induced_subgraph(keep)
    lists = {
        v: tuple(c for c in inst.lists[v] if c not in removed[v]) if v in removed else inst.lists[v]
        for v in keep
    }
    matchings = {}
    for e in graph.edges:
        pairs = inst.matchings[e.id]
        ru, rv = removed.get(e.u), removed.get(e.v)
        if ru or rv:
            pairs = tuple(
                (a, b) for a, b in pairs if not (ru and a in ru) and not (rv and b in rv)
            )
        matchings[e.id] = pairs
    orientation = None
    if inst.orientation is not None:
        orientation = Biorientation(graph, {e.id: inst.orientation.direction[e.id] for e in graph.edges})
    return CorrespondenceInstance(graph, lists, matchings, orientation)


def validate_instance(inst: CorrespondenceInstance) -> list[str]:
    """Every structural problem found; an empty list means the instance is well formed."""
    problems = []
    g = inst.graph
    for v in inst.lists:
        if v not in g:
            problems.append(f"list given for unknown vertex {v!r}")
    for v in g.vertices:
        lst = inst.lists.get(v, ())
        if len(set(lst)) != len(lst):
            problems.append(f"duplicate color in list of {v!r}")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in lst):
            problems.append(f"non-integer color in list of {v!r}")
    for eid in inst.matchings:
        if not g.has_edge(eid):
            problems.append(f"matching given for unknown edge {eid!r}")
    for e in g.edges:
        pairs = inst.matchings.get(e.id)
        if pairs is None:
            problems.append(f"edge {e.id!r} has no matching")
            continue
        lu, lv = set(inst.lists.get(e.u, ())), set(inst.lists.get(e.v, ()))
        for a, b in pairs:
            if a not in lu:
                problems.append(f"edge {e.id!r}: color {a} not in list of {e.u!r}")
            if b not in lv:
                problems.append(f"edge {e.id!r}: color {b} not in list of {e.v!r}")
        left = [a for a, _ in pairs]
        right = [b for _, b in pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            problems.append(f"edge {e.id!r}: not a matching")
    if inst.orientation is not None:
        d = inst.orientation
        if d.base != g:
            problems.append("orientation does not cover the instance graph")
    return problems
