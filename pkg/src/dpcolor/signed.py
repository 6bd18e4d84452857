"""Signed graphs and zero-free signed list coloring.

A signed coloring ``psi`` must satisfy ``psi(v) != sign(e) * psi(w)`` on every
edge. Matching ``c`` with ``c`` on positive edges and ``c`` with ``-c`` on
negative edges turns this into a correspondence coloring problem; without
color 0 the negative matchings have no fixed point, so the result is a
derangement assignment and :func:`dpcolor.coloring.dp_color` applies.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .coloring import HypothesisReport, Mode, _report_parts, dp_color
from .correspondence import CorrespondenceInstance, is_derangement_assignment
from .errors import HypothesisViolationError, MalformedInputError
from .graph import Biorientation, Multigraph


@dataclass
class SignedGraph:
    graph: Multigraph
    sign: dict[str, int]

    def __post_init__(self):
        for e in self.graph.edges:
            if self.sign.get(e.id) not in (1, -1):
                raise MalformedInputError(f"edge {e.id!r} needs sign +1 or -1")
        unknown = [eid for eid in self.sign if not self.graph.has_edge(eid)]
        if unknown:
            raise MalformedInputError(f"signs given for unknown edges {unknown}")

    def edges_with_sign(self, s: int) -> list[str]:
        return [e.id for e in self.graph.edges if self.sign[e.id] == s]


def positive_subgraph(signed: SignedGraph) -> Multigraph:
    return signed.graph.edge_subgraph(signed.edges_with_sign(1))


def negative_subgraph(signed: SignedGraph) -> Multigraph:
    return signed.graph.edge_subgraph(signed.edges_with_sign(-1))


def _check_lists(signed: SignedGraph, lists: Mapping[str, Iterable[int]]) -> dict[str, tuple[int, ...]]:
    out = {}
    for v in signed.graph.vertices:
        if v not in lists:
            raise MalformedInputError(f"no list for vertex {v!r}")
        lst = tuple(lists[v])
        if 0 in lst:
            raise MalformedInputError(f"list of {v!r} contains 0")
        if len(set(lst)) != len(lst):
            raise MalformedInputError(f"duplicate color in list of {v!r}")
        out[v] = lst
    return out


def reduce_to_correspondence(
    signed: SignedGraph,
    lists: Mapping[str, Iterable[int]],
    orientation: Biorientation | None = None,
) -> CorrespondenceInstance:
    lists = _check_lists(signed, lists)
    matchings = {}
    for e in signed.graph.edges:
        other = set(lists[e.v])
        if signed.sign[e.id] == 1:
            matchings[e.id] = tuple((c, c) for c in lists[e.u] if c in other)
        else:
            matchings[e.id] = tuple((c, -c) for c in lists[e.u] if -c in other)
    return CorrespondenceInstance(signed.graph, lists, matchings, orientation)


def verify_signed_coloring(
    signed: SignedGraph, lists: Mapping[str, Iterable[int]], psi: Mapping[str, int]
) -> list[str]:
    missing = [v for v in signed.graph.vertices if v not in psi]
    if missing:
        raise MalformedInputError(f"coloring misses vertices {missing}")
    problems = []
    for v in signed.graph.vertices:
        if psi[v] == 0:
            problems.append(f"vertex {v!r}: color 0 is not allowed")
        if psi[v] not in set(lists[v]):
            problems.append(f"vertex {v!r}: color {psi[v]} not in its list")
    for e in signed.graph.edges:
        if psi[e.u] == signed.sign[e.id] * psi[e.v]:
            problems.append(f"edge {e.id!r}: {psi[e.u]} = {signed.sign[e.id]} * {psi[e.v]}")
    return problems


def check_signed_hypotheses(
    signed: SignedGraph, lists: Mapping[str, Iterable[int]], orientation: Biorientation
) -> HypothesisReport:
    """Every negative edge bidirected, the positive part free of odd directed
    cycles, and ``|L(v)| >= outdeg(v) + 1``."""
    if orientation.base != signed.graph:
        raise MalformedInputError("orientation is over a different graph")
    inst = reduce_to_correspondence(signed, lists, orientation)
    _, bad = is_derangement_assignment(inst)
    return _report_parts(
        inst.lists,
        orientation,
        bad,
        signed.edges_with_sign(-1),
        orientation.restrict_edges(signed.edges_with_sign(1)),
        Mode.CERTIFIED,
        0,
    )


def color_signed(
    signed: SignedGraph, lists: Mapping[str, Iterable[int]], orientation: Biorientation
) -> dict[str, int]:
    report = check_signed_hypotheses(signed, lists, orientation)
    if not report.certified_richardson:
        raise HypothesisViolationError("signed instance does not satisfy the hypotheses", report=report)
    psi = dp_color(reduce_to_correspondence(signed, lists, orientation), Mode.CERTIFIED)
    bad = verify_signed_coloring(signed, lists, psi)
    if bad:
        raise AssertionError(f"signed coloring failed verification: {bad}")
    return psi
