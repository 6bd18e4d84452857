"""Loopless multigraphs, biorientations and strongly connected components.

Vertices are string labels. Every graph keeps its vertices in declaration
order and its edges in insertion order, and all algorithms iterate in that
order, so results are reproducible.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import MalformedInputError


class Direction(enum.Enum):
    """Orientation tag of an edge relative to its stored endpoint order."""

    FORWARD = "uv"
    BACKWARD = "vu"
    BOTH = "both"


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise MalformedInputError(f"vertex {x!r} is not an endpoint of edge {self.id!r}")


class Multigraph:
    """A finite loopless multigraph with labelled vertices and edges."""

    __slots__ = ("vertices", "edges", "_index", "_edges_by_id", "_incident")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge | tuple[str, str, str]] = ()):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise MalformedInputError("duplicate vertex id")
        built = []
        by_id: dict[str, Edge] = {}
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            if e.u not in self._index or e.v not in self._index:
                raise MalformedInputError(f"edge {e.id!r} has an undeclared endpoint")
            if e.u == e.v:
                raise MalformedInputError(f"edge {e.id!r} is a loop at {e.u!r}")
            if e.id in by_id:
                raise MalformedInputError(f"duplicate edge id {e.id!r}")
            by_id[e.id] = e
            built.append(e)
        self.edges: tuple[Edge, ...] = tuple(built)
        self._edges_by_id = by_id
        self._incident: dict[str, list[Edge]] | None = None

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Multigraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __contains__(self, v: str) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise MalformedInputError(f"unknown vertex {v!r}") from None

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges_by_id[eid]
        except KeyError:
            raise MalformedInputError(f"unknown edge {eid!r}") from None

    def has_edge(self, eid: str) -> bool:
        return eid in self._edges_by_id

    def incident(self, v: str) -> list[Edge]:
        self.index(v)
        if self._incident is None:
            inc: dict[str, list[Edge]] = {x: [] for x in self.vertices}
            for e in self.edges:
                inc[e.u].append(e)
                inc[e.v].append(e)
            self._incident = inc
        return self._incident[v]

    def degree(self, v: str) -> int:
        return len(self.incident(v))

    def check_vertices(self, vs: Iterable[str]) -> set[str]:
        out = set(vs)
        for v in out:
            self.index(v)
        return out

    def induced_subgraph(self, keep: Iterable[str]) -> Multigraph:
        """G[A]: the vertices in ``keep`` and every edge with both ends among them."""
        keep = self.check_vertices(keep)
        return Multigraph(
            (v for v in self.vertices if v in keep),
            (e for e in self.edges if e.u in keep and e.v in keep),
        )

    def edge_subgraph(self, edge_ids: Iterable[str]) -> Multigraph:
        """Spanning subgraph on all vertices with only the listed edges."""
        ids = set(edge_ids)
        for eid in ids:
            self.edge(eid)
        return Multigraph(self.vertices, (e for e in self.edges if e.id in ids))


class Biorientation:
    """A multigraph whose edges each point one way or both ways.

    The digraph view has arc (u, v) for FORWARD or BOTH and arc (v, u) for
    BACKWARD or BOTH, where (u, v) is the edge's stored endpoint order.
    """

    __slots__ = ("base", "direction", "_out", "_in")

    def __init__(self, base: Multigraph, direction: Mapping[str, Direction | str]):
        tags = {}
        for eid, d in direction.items():
            if not base.has_edge(eid):
                raise MalformedInputError(f"orientation given for unknown edge {eid!r}")
            tags[eid] = d if isinstance(d, Direction) else Direction(d)
        missing = [e.id for e in base.edges if e.id not in tags]
        if missing:
            raise MalformedInputError(f"edges without orientation: {missing}")
        self.base = base
        self.direction: dict[str, Direction] = {e.id: tags[e.id] for e in base.edges}
        self._out: dict[str, list[tuple[str, str]]] | None = None
        self._in: dict[str, list[tuple[str, str]]] | None = None

    @classmethod
    def uniform(cls, base: Multigraph, tag: Direction = Direction.FORWARD) -> Biorientation:
        return cls(base, {e.id: tag for e in base.edges})

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.base.vertices

    def __eq__(self, other):
        if not isinstance(other, Biorientation):
            return NotImplemented
        return self.base == other.base and self.direction == other.direction

    def __repr__(self):
        return f"Biorientation(|V|={len(self.base.vertices)}, arcs={len(self.arcs())})"

    def arcs(self) -> list[tuple[str, str, str]]:
        """Arcs of the digraph view as (tail, head, edge id)."""
        out = []
        for e in self.base.edges:
            d = self.direction[e.id]
            if d is not Direction.BACKWARD:
                out.append((e.u, e.v, e.id))
            if d is not Direction.FORWARD:
                out.append((e.v, e.u, e.id))
        return out

    def _adjacency(self):
        if self._out is None:
            out: dict[str, list[tuple[str, str]]] = {v: [] for v in self.base.vertices}
            inn: dict[str, list[tuple[str, str]]] = {v: [] for v in self.base.vertices}
            for tail, head, eid in self.arcs():
                out[tail].append((head, eid))
                inn[head].append((tail, eid))
            self._out, self._in = out, inn
        return self._out, self._in

    def out_arcs(self, v: str) -> list[tuple[str, str]]:
        """(head, edge id) for every arc leaving ``v``."""
        self.base.index(v)
        return self._adjacency()[0][v]

    def in_arcs(self, v: str) -> list[tuple[str, str]]:
        """(tail, edge id) for every arc entering ``v``."""
        self.base.index(v)
        return self._adjacency()[1][v]

    def successors(self, v: str) -> list[str]:
        return [h for h, _ in self.out_arcs(v)]

    def predecessors(self, v: str) -> list[str]:
        return [t for t, _ in self.in_arcs(v)]

    def out_degree(self, v: str) -> int:
        return len(self.out_arcs(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_arcs(v))

    def has_arc(self, tail: str, head: str) -> bool:
        return any(h == head for h, _ in self.out_arcs(tail))

    def bidirected_edges(self) -> frozenset[str]:
        """E_D2: edges oriented in both directions."""
        return frozenset(eid for eid, d in self.direction.items() if d is Direction.BOTH)

    def induced(self, keep: Iterable[str]) -> Biorientation:
        sub = self.base.induced_subgraph(keep)
        return Biorientation(sub, {e.id: self.direction[e.id] for e in sub.edges})

    def delete_vertices(self, removed: Iterable[str]) -> Biorientation:
        """D - U, keeping the tags of surviving edges."""
        removed = self.base.check_vertices(removed)
        return self.induced(v for v in self.base.vertices if v not in removed)

    def restrict_edges(self, edge_ids: Iterable[str]) -> Biorientation:
        """The biorientation induced on the spanning subgraph with the given edges."""
        sub = self.base.edge_subgraph(edge_ids)
        return Biorientation(sub, {e.id: self.direction[e.id] for e in sub.edges})


def induced_subgraph(graph: Multigraph, keep: Iterable[str]) -> Multigraph:
    return graph.induced_subgraph(keep)


def out_degree(digraph: Biorientation, v: str) -> int:
    return digraph.out_degree(v)


def bidirected_edges(digraph: Biorientation) -> frozenset[str]:
    return digraph.bidirected_edges()


def delete_vertices(digraph: Biorientation, removed: Iterable[str]) -> Biorientation:
    return digraph.delete_vertices(removed)


def strongly_connected_components(digraph: Biorientation) -> list[list[str]]:
    """Strong components, terminal components first.

    Iterative Tarjan started from vertices in declaration order. Tarjan
    completes a component only after every component reachable from it, so
    the emission order is a reverse topological order of the condensation.
    Vertices inside a component are listed in declaration order.
    """
    succ = {v: digraph.successors(v) for v in digraph.vertices}
    order = digraph.base._index
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    result: list[list[str]] = []
    counter = 0

    for root in digraph.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
                if nxt in on_stack and index[nxt] < low[node]:
                    low[node] = index[nxt]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                comp.sort(key=order.__getitem__)
                result.append(comp)
    return result
