"""Seeded random instances that satisfy the coloring hypotheses by construction."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import Mode, check_hypotheses
from .correspondence import CorrespondenceInstance
from .graph import Biorientation, Direction, Edge, Multigraph
from .kernels import find_odd_directed_cycle
from .signed import SignedGraph, check_signed_hypotheses


@dataclass(frozen=True)
class GenParams:
    n: int
    straight_edge_prob: float = 0.3
    twisted_edge_prob: float = 0.2
    extra_colors: int = 0
    seed: int = 0
    # "dag": straight part oriented along a random vertex order;
    # "bipartite": straight arcs cross a random bipartition in any direction,
    # which also produces even directed cycles
    straight_mode: str = "dag"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        for p in (self.straight_edge_prob, self.twisted_edge_prob):
            if not 0 <= p <= 1:
                raise ValueError("probabilities must lie in [0, 1]")
        if self.extra_colors < 0:
            raise ValueError("extra_colors must be nonnegative")
        if self.straight_mode not in ("dag", "bipartite"):
            raise ValueError(f"unknown straight_mode {self.straight_mode!r}")


def _names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def _straight_part(p: GenParams, rng: random.Random, names: list[str], prob: float):
    """Edges (u, v, direction) whose orientation has no odd directed cycle."""
    out = []
    if p.straight_mode == "dag":
        order = names[:]
        rng.shuffle(order)
        for i in range(len(order)):
            for j in range(i + 1, len(order)):
                if rng.random() < prob:
                    out.append((order[i], order[j], Direction.FORWARD))
    else:
        side = {v: rng.random() < 0.5 for v in names}
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                u, v = names[i], names[j]
                if side[u] != side[v] and rng.random() < prob:
                    out.append((u, v, rng.choice(list(Direction))))
    return out


def _random_derangement(rng: random.Random, left: tuple[int, ...], right: tuple[int, ...]):
    m = rng.randint(0, min(len(left), len(right)))
    a = rng.sample(left, m)
    b = rng.sample(right, m)
    return tuple((x, y) for x, y in zip(a, b) if x != y)


def _palette(rng: random.Random, size: int) -> tuple[int, ...]:
    # a small shared universe keeps lists overlapping
    universe = list(range(1, size + rng.randint(0, 2) + 1))
    return tuple(sorted(rng.sample(universe, size)))


def gen_certified_instance(p: GenParams) -> CorrespondenceInstance:
    rng = random.Random(p.seed)
    names = _names(p.n)
    edges: list[Edge] = []
    tags: dict[str, Direction] = {}
    for u, v, d in _straight_part(p, rng, names, p.straight_edge_prob):
        eid = f"s{len(edges)}"
        edges.append(Edge(eid, u, v))
        tags[eid] = d
    twisted = []
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if rng.random() < p.twisted_edge_prob:
                eid = f"t{len(edges)}"
                edges.append(Edge(eid, names[i], names[j]))
                tags[eid] = Direction.BOTH
                twisted.append(eid)
    graph = Multigraph(names, edges)
    orientation = Biorientation(graph, tags)
    lists = {v: _palette(rng, orientation.out_degree(v) + 1 + p.extra_colors) for v in names}
    matchings = {}
    for e in edges:
        if e.id in twisted:
            matchings[e.id] = _random_derangement(rng, lists[e.u], lists[e.v])
        else:
            other = set(lists[e.v])
            matchings[e.id] = tuple((c, c) for c in lists[e.u] if c in other)
    inst = CorrespondenceInstance(graph, lists, matchings, orientation)
    assert check_hypotheses(inst, Mode.CERTIFIED).certified_richardson
    return inst


def gen_certified_signed(p: GenParams) -> tuple[SignedGraph, dict[str, tuple[int, ...]], Biorientation]:
    """Positive edges take the straight role, negative edges the twisted one."""
    rng = random.Random(p.seed)
    names = _names(p.n)
    edges: list[Edge] = []
    tags: dict[str, Direction] = {}
    sign: dict[str, int] = {}
    for u, v, d in _straight_part(p, rng, names, p.straight_edge_prob):
        eid = f"p{len(edges)}"
        edges.append(Edge(eid, u, v))
        tags[eid], sign[eid] = d, 1
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if rng.random() < p.twisted_edge_prob:
                eid = f"n{len(edges)}"
                edges.append(Edge(eid, names[i], names[j]))
                tags[eid], sign[eid] = Direction.BOTH, -1
    graph = Multigraph(names, edges)
    orientation = Biorientation(graph, tags)

    lists: dict[str, tuple[int, ...]] = {}
    for v in names:
        size = orientation.out_degree(v) + 1 + p.extra_colors
        chosen: list[int] = []
        for e in graph.incident(v):
            w = e.other(v)
            for c in lists.get(w, ()):
                if -c not in chosen and len(chosen) < size and rng.random() < 0.5:
                    chosen.append(-c)
        magnitude = size + 1
        pool = [c for k in range(1, magnitude + 1) for c in (k, -k) if c not in chosen]
        chosen.extend(rng.sample(pool, size - len(chosen)))
        lists[v] = tuple(chosen)
    signed = SignedGraph(graph, sign)
    assert check_signed_hypotheses(signed, lists, orientation).certified_richardson
    return signed, lists, orientation


def gen_no_odd_cycle_digraph(n: int, arc_prob: float, seed: int) -> Biorientation:
    """Arcs only across a random bipartition, so every directed cycle is even."""
    rng = random.Random(seed)
    names = _names(n)
    side = {v: rng.random() < 0.5 for v in names}
    edges, tags = [], {}
    for i in range(n):
        for j in range(i + 1, n):
            u, v = names[i], names[j]
            if side[u] == side[v]:
                continue
            forward = rng.random() < arc_prob
            backward = rng.random() < arc_prob
            if forward or backward:
                eid = f"e{len(edges)}"
                edges.append(Edge(eid, u, v))
                tags[eid] = (
                    Direction.BOTH if forward and backward else Direction.FORWARD if forward else Direction.BACKWARD
                )
    digraph = Biorientation(Multigraph(names, edges), tags)
    assert find_odd_directed_cycle(digraph) is None
    return digraph


def gen_digraph_with_odd_cycle(n: int, arc_prob: float, seed: int) -> Biorientation:
    """Random orientation with a planted directed cycle of odd length (n >= 3)."""
    if n < 3:
        raise ValueError("an odd directed cycle needs at least 3 vertices")
    rng = random.Random(seed)
    names = _names(n)
    length = rng.choice([k for k in range(3, n + 1, 2)])
    cycle = rng.sample(names, length)
    edges, tags = [], {}
    for i in range(length):
        eid = f"c{i}"
        edges.append(Edge(eid, cycle[i], cycle[(i + 1) % length]))
        tags[eid] = Direction.FORWARD
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < arc_prob:
                eid = f"e{len(edges)}"
                edges.append(Edge(eid, names[i], names[j]))
                tags[eid] = rng.choice(list(Direction))
    return Biorientation(Multigraph(names, edges), tags)

