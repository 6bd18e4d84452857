"""Hypothesis checking and the kernel-driven DP-coloring algorithm.

The coloring procedure repeats one step until every vertex is colored:

1. pick the smallest color ``a`` still present in some list and let ``V_a``
   be the vertices whose lists contain it;
2. find a kernel ``U`` of the straight part of the orientation induced on
   ``V_a`` and color all of ``U`` with ``a``;
3. at every remaining vertex ``w`` drop the colors ``B(w)`` that are matched
   to ``a`` at a neighbor in ``U``, then delete ``U``.

On a derangement assignment whose twisted edges are all bidirected, with a
kernel-perfect straight part and ``|L(v)| >= outdeg(v) + 1``, each vertex
loses at most as many colors as it loses out-arcs, so the list bound holds
again for the smaller instance and the loop always finishes.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass, field

from .correspondence import (
    CorrespondenceInstance,
    EdgeClass,
    edges_of_class,
    is_derangement_assignment,
    restrict,
    validate_instance,
)
from .errors import HypothesisViolationError, MalformedInputError, OddCycleError
from .graph import Biorientation, Direction, Multigraph
from .kernels import (
    KERNEL_PERFECT_MAX_N,
    brute_force_kernel,
    find_odd_directed_cycle,
    is_kernel_perfect,
    richardson_kernel,
)

Coloring = dict[str, int]


class Mode(enum.Enum):
    CERTIFIED = "certified"
    GENERAL_SMALL = "general"


class Certificate(enum.Enum):
    NO_ODD_CYCLE = "no-odd-cycle"
    KERNEL_PERFECT_VERIFIED = "kernel-perfect-verified"
    UNVERIFIED = "unverified"


@dataclass
class HypothesisReport:
    derangement_ok: bool
    derangement_violations: list[str]
    twisted_bidirected_ok: bool
    twisted_not_bidirected: list[str]
    list_sizes_ok: bool
    # (vertex, |L(v)|, out-degree)
    short_lists: list[tuple[str, int, int]]
    certificate: Certificate
    odd_cycle: list[str] | None = None
    kernelless_subgraph: list[str] | None = None

    @property
    def basic_ok(self) -> bool:
        return self.derangement_ok and self.twisted_bidirected_ok and self.list_sizes_ok

    @property
    def certified_richardson(self) -> bool:
        """All hypotheses hold and the straight part has no odd directed cycle."""
        return self.basic_ok and self.certificate is Certificate.NO_ODD_CYCLE

    @property
    def certified_kernel_perfect(self) -> bool:
        return self.basic_ok and self.certificate is not Certificate.UNVERIFIED

    def certified(self, mode: Mode) -> bool:
        if mode is Mode.CERTIFIED:
            return self.certified_richardson
        return self.certified_kernel_perfect

    def to_dict(self) -> dict:
        return {
            "derangement_ok": self.derangement_ok,
            "derangement_violations": self.derangement_violations,
            "twisted_bidirected_ok": self.twisted_bidirected_ok,
            "twisted_not_bidirected": self.twisted_not_bidirected,
            "list_sizes_ok": self.list_sizes_ok,
            "short_lists": [
                {"vertex": v, "list_size": size, "out_degree": d} for v, size, d in self.short_lists
            ],
            "straight_part_certificate": self.certificate.value,
            "odd_cycle": self.odd_cycle,
            "kernelless_subgraph": self.kernelless_subgraph,
            "certified_richardson": self.certified_richardson,
            "certified_kernel_perfect": self.certified_kernel_perfect,
        }


def straight_orientation(inst: CorrespondenceInstance) -> Biorientation:
    """The biorientation D induces on the straight subgraph G_S."""
    if inst.orientation is None:
        raise MalformedInputError("instance has no orientation")
    return inst.orientation.restrict_edges(edges_of_class(inst, EdgeClass.STRAIGHT))


def _report_parts(
    lists: Mapping[str, tuple[int, ...]],
    orientation: Biorientation,
    derangement_bad: list[str],
    must_be_both: list[str],
    straight: Biorientation,
    mode: Mode,
    max_n: int,
) -> HypothesisReport:
    not_both = [eid for eid in must_be_both if orientation.direction[eid] is not Direction.BOTH]
    short = []
    for v in orientation.vertices:
        d = orientation.out_degree(v)
        if len(lists[v]) < d + 1:
            short.append((v, len(lists[v]), d))
    witness = find_odd_directed_cycle(straight)
    certificate = Certificate.NO_ODD_CYCLE
    failing = None
    if witness is not None:
        certificate = Certificate.UNVERIFIED
        if mode is Mode.GENERAL_SMALL:
            perfect, sub = is_kernel_perfect(straight, max_n=max_n)
            if perfect:
                certificate = Certificate.KERNEL_PERFECT_VERIFIED
            else:
                failing = list(sub.vertices)
    return HypothesisReport(
        derangement_ok=not derangement_bad,
        derangement_violations=derangement_bad,
        twisted_bidirected_ok=not not_both,
        twisted_not_bidirected=not_both,
        list_sizes_ok=not short,
        short_lists=short,
        certificate=certificate,
        odd_cycle=witness,
        kernelless_subgraph=failing,
    )


def check_hypotheses(
    inst: CorrespondenceInstance, mode: Mode = Mode.CERTIFIED, max_n: int = KERNEL_PERFECT_MAX_N
) -> HypothesisReport:
    """Evaluate the preconditions of :func:`dp_color`.

    Derangement property, twisted edges bidirected and list sizes are always
    checked. The straight part is first searched for an odd directed cycle;
    only if one exists does GENERAL_SMALL mode fall back to the exhaustive
    kernel-perfectness check (a digraph with no odd cycle is kernel-perfect).
    """
    if inst.orientation is None:
        raise MalformedInputError("instance has no orientation")
    problems = validate_instance(inst)
    if problems:
        raise MalformedInputError("; ".join(problems))
    _, bad = is_derangement_assignment(inst)
    return _report_parts(
        inst.lists,
        inst.orientation,
        bad,
        edges_of_class(inst, EdgeClass.TWISTED),
        straight_orientation(inst),
        mode,
        max_n,
    )


@dataclass
class Round:
    """One pass of the coloring loop, kept for tracing."""

    color: int
    candidates: list[str]
    kernel: list[str]
    removed: dict[str, list[int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"a": self.color, "V_a": self.candidates, "U": self.kernel, "B": self.removed}


def dp_color(
    inst: CorrespondenceInstance,
    mode: Mode = Mode.CERTIFIED,
    *,
    override: bool = False,
    trace: list[Round] | None = None,
    max_n: int = KERNEL_PERFECT_MAX_N,
) -> Coloring:
    """Color ``inst`` by repeated kernel extraction.

    Unless ``override`` is set the hypotheses are checked first and a
    :class:`HypothesisViolationError` carrying the report is raised if they
    fail. With ``override`` the loop runs anyway and stops with the same
    error at the first step where the counting argument breaks down.
    Appends one :class:`Round` per iteration to ``trace`` if given.
    """
    if inst.orientation is None:
        raise MalformedInputError("instance has no orientation")
    if not override:
        report = check_hypotheses(inst, mode, max_n=max_n)
        if not report.certified(mode):
            raise HypothesisViolationError("instance does not satisfy the hypotheses", report=report)

    # The kernel digraph always uses the edges that were straight at the
    # start: originally straight edges stay in it even once their matching
    # empties, so it remains an induced subdigraph of the original straight part.
    kernel_edges = set(edges_of_class(inst, EdgeClass.STRAIGHT))
    coloring: Coloring = {}
    order = {v: i for i, v in enumerate(inst.graph.vertices)}
    current = inst
    while current.graph.vertices:
        for v in current.graph.vertices:
            if not current.lists[v]:
                raise HypothesisViolationError(f"list of {v!r} became empty", vertex=v)
        a = min(c for v in current.graph.vertices for c in current.lists[v])
        v_a = [v for v in current.graph.vertices if a in current.lists[v]]

        orient = current.orientation
        h = orient.induced(v_a)
        h = h.restrict_edges(e.id for e in h.base.edges if e.id in kernel_edges)
        if mode is Mode.CERTIFIED:
            try:
                kernel = richardson_kernel(h)
            except OddCycleError as exc:
                raise HypothesisViolationError(
                    f"straight part has an odd directed cycle {exc.witness}"
                ) from exc
        else:
            kernel = brute_force_kernel(h)
            if kernel is None:
                raise HypothesisViolationError(f"no kernel on the vertices holding color {a}")

        u_set = set(kernel)
        for e in current.graph.edges:
            if e.u in u_set and e.v in u_set and (a, a) in current.matchings[e.id]:
                raise HypothesisViolationError(
                    f"edge {e.id!r} matches color {a} to itself inside the kernel", vertex=e.u
                )
        for u in kernel:
            coloring[u] = a

        blocked: dict[str, set[int]] = {}
        for u in kernel:
            for e in current.graph.incident(u):
                w = e.other(u)
                if w in u_set:
                    continue
                for cw, cu in current.matched_pairs_at(e.id, w):
                    if cu == a:
                        blocked.setdefault(w, set()).add(cw)

        if trace is not None:
            trace.append(
                Round(
                    a,
                    v_a,
                    sorted(kernel, key=order.__getitem__),
                    {w: sorted(bs) for w, bs in sorted(blocked.items(), key=lambda kv: order[kv[0]])},
                )
            )

        current = restrict(current, u_set, blocked)
        for w in current.graph.vertices:
            need = current.orientation.out_degree(w) + 1
            if len(current.lists[w]) < need:
                raise HypothesisViolationError(
                    f"vertex {w!r} keeps {len(current.lists[w])} colors but needs {need}", vertex=w
                )
    return {v: coloring[v] for v in inst.graph.vertices}


def verify_coloring(inst: CorrespondenceInstance, coloring: Mapping[str, int]) -> list[str]:
    """Violations of ``coloring``; an empty list means it is an (L,C)-coloring."""
    missing = [v for v in inst.graph.vertices if v not in coloring]
    if missing:
        raise MalformedInputError(f"coloring misses vertices {missing}")
    extra = [v for v in coloring if v not in inst.graph]
    if extra:
        raise MalformedInputError(f"coloring names unknown vertices {extra}")
    problems = []
    for v in inst.graph.vertices:
        if coloring[v] not in inst.lists[v]:
            problems.append(f"vertex {v!r}: color {coloring[v]} not in its list")
    for e in inst.graph.edges:
        pair = (coloring[e.u], coloring[e.v])
        if pair in inst.matchings[e.id]:
            problems.append(f"edge {e.id!r}: colors {pair} are matched")
    return problems


def build_split_biorientation(straight: Biorientation, twisted: Multigraph) -> Biorientation:
    """Orient the straight part as given and every twisted edge both ways.

    The out-degree of the result is the straight out-degree plus the twisted
    degree at each vertex.
    """
    if straight.vertices != twisted.vertices:
        raise MalformedInputError("straight and twisted parts must share the vertex list")
    overlap = {e.id for e in straight.base.edges} & {e.id for e in twisted.edges}
    if overlap:
        raise MalformedInputError(f"edge ids used in both parts: {sorted(overlap)}")
    graph = Multigraph(straight.vertices, straight.base.edges + twisted.edges)
    tags = dict(straight.direction)
    tags.update({e.id: Direction.BOTH for e in twisted.edges})
    return Biorientation(graph, tags)
