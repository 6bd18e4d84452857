"""JSON documents for instances, signed instances, digraphs and colorings.

Instance::

    {"vertices": ["a", "b"],
     "lists": {"a": [1, 2], "b": [1, 2]},
     "edges": [{"id": "e0", "u": "a", "v": "b",
                "matching": [[1, 2], [2, 1]] | "identity",
                "orientation": "uv" | "vu" | "both"}]}

Signed instances replace ``matching`` by ``"sign": 1 | -1``. A bare digraph
is an instance without ``lists`` and ``matching``. ``orientation`` is
optional, but must then be absent on every edge. A graph without edges
always carries the (empty) orientation.
"""

from __future__ import annotations

import json
from collections.abc import Mapping

from .correspondence import CorrespondenceInstance, identity_matching, validate_instance
from .errors import MalformedInputError
from .graph import Biorientation, Direction, Edge, Multigraph
from .signed import SignedGraph, _check_lists

_DIRECTIONS = {d.value: d for d in Direction}


def _require(obj, key: str, kind, path: str):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInputError(f"{path}: missing key {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedInputError(f"{path}.{key}: expected {getattr(kind, '__name__', kind)}")
    return value


def _int(x, path: str) -> int:
    if not isinstance(x, int) or isinstance(x, bool):
        raise MalformedInputError(f"{path}: expected an integer, got {x!r}")
    return x


def _graph_part(doc) -> tuple[Multigraph, list[dict], Biorientation | None]:
    if not isinstance(doc, dict):
        raise MalformedInputError("$: expected a JSON object")
    vertices = _require(doc, "vertices", list, "$")
    for i, v in enumerate(vertices):
        if not isinstance(v, str):
            raise MalformedInputError(f"$.vertices[{i}]: expected a string")
    raw_edges = _require(doc, "edges", list, "$")
    edges = []
    tags = {}
    for i, e in enumerate(raw_edges):
        path = f"$.edges[{i}]"
        eid = _require(e, "id", str, path)
        u = _require(e, "u", str, path)
        v = _require(e, "v", str, path)
        edges.append(Edge(eid, u, v))
        if "orientation" in e:
            tag = e["orientation"]
            if tag not in _DIRECTIONS:
                raise MalformedInputError(f"{path}.orientation: expected 'uv', 'vu' or 'both'")
            tags[eid] = _DIRECTIONS[tag]
    try:
        graph = Multigraph(vertices, edges)
    except MalformedInputError as exc:
        raise MalformedInputError(f"$.edges: {exc}") from None
    orientation = None
    if not edges:
        orientation = Biorientation(graph, {})
    elif tags:
        if len(tags) != len(edges):
            raise MalformedInputError("$.edges: orientation must be given on every edge or on none")
        orientation = Biorientation(graph, tags)
    return graph, raw_edges, orientation


def _lists(doc, graph: Multigraph) -> dict[str, tuple[int, ...]]:
    raw = _require(doc, "lists", dict, "$")
    lists = {}
    for v in graph.vertices:
        if v not in raw:
            raise MalformedInputError(f"$.lists: no list for vertex {v!r}")
        if not isinstance(raw[v], list):
            raise MalformedInputError(f"$.lists.{v}: expected an array")
        lists[v] = tuple(_int(c, f"$.lists.{v}[{j}]") for j, c in enumerate(raw[v]))
    for v in raw:
        if v not in graph:
            raise MalformedInputError(f"$.lists.{v}: unknown vertex")
    return lists


def instance_from_dict(doc) -> CorrespondenceInstance:
    graph, raw_edges, orientation = _graph_part(doc)
    lists = _lists(doc, graph)
    matchings = {}
    identity = []
    for i, (e, raw) in enumerate(zip(graph.edges, raw_edges)):
        path = f"$.edges[{i}].matching"
        if "matching" not in raw:
            raise MalformedInputError(f"{path}: missing")
        m = raw["matching"]
        if m == "identity":
            identity.append(e.id)
            continue
        if not isinstance(m, list):
            raise MalformedInputError(f"{path}: expected an array of pairs or 'identity'")
        pairs = []
        for j, pair in enumerate(m):
            if not isinstance(pair, list) or len(pair) != 2:
                raise MalformedInputError(f"{path}[{j}]: expected a pair [c_u, c_v]")
            pairs.append((_int(pair[0], f"{path}[{j}][0]"), _int(pair[1], f"{path}[{j}][1]")))
        matchings[e.id] = tuple(pairs)
    inst = CorrespondenceInstance(graph, lists, matchings, orientation)
    for eid in identity:
        inst.matchings[eid] = identity_matching(inst, eid)
    problems = validate_instance(inst)
    if problems:
        raise MalformedInputError("; ".join(problems))
    return inst


def instance_to_dict(inst: CorrespondenceInstance) -> dict:
    edges = []
    for e in inst.graph.edges:
        pairs = inst.matchings[e.id]
        entry = {
            "id": e.id,
            "u": e.u,
            "v": e.v,
            "matching": "identity" if pairs and pairs == identity_matching(inst, e.id) else [list(p) for p in pairs],
        }
        if inst.orientation is not None:
            entry["orientation"] = inst.orientation.direction[e.id].value
        edges.append(entry)
    return {
        "vertices": list(inst.graph.vertices),
        "lists": {v: list(inst.lists[v]) for v in inst.graph.vertices},
        "edges": edges,
    }


def signed_from_dict(doc) -> tuple[SignedGraph, dict[str, tuple[int, ...]], Biorientation | None]:
    graph, raw_edges, orientation = _graph_part(doc)
    lists = _lists(doc, graph)
    sign = {}
    for i, (e, raw) in enumerate(zip(graph.edges, raw_edges)):
        s = raw.get("sign")
        if s not in (1, -1) or isinstance(s, bool):
            raise MalformedInputError(f"$.edges[{i}].sign: expected 1 or -1")
        sign[e.id] = s
    signed = SignedGraph(graph, sign)
    _check_lists(signed, lists)
    return signed, lists, orientation


def signed_to_dict(
    signed: SignedGraph, lists: Mapping[str, tuple[int, ...]], orientation: Biorientation | None = None
) -> dict:
    edges = []
    for e in signed.graph.edges:
        entry = {"id": e.id, "u": e.u, "v": e.v, "sign": signed.sign[e.id]}
        if orientation is not None:
            entry["orientation"] = orientation.direction[e.id].value
        edges.append(entry)
    return {
        "vertices": list(signed.graph.vertices),
        "lists": {v: list(lists[v]) for v in signed.graph.vertices},
        "edges": edges,
    }


def digraph_from_dict(doc) -> Biorientation:
    graph, _, orientation = _graph_part(doc)
    if orientation is None:
        raise MalformedInputError("$.edges: a digraph needs an orientation on every edge")
    return orientation


def digraph_to_dict(digraph: Biorientation) -> dict:
    return {
        "vertices": list(digraph.vertices),
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "orientation": digraph.direction[e.id].value}
            for e in digraph.base.edges
        ],
    }


def coloring_from_dict(doc) -> dict[str, int]:
    if not isinstance(doc, dict):
        raise MalformedInputError("$: expected a JSON object mapping vertex to color")
    return {v: _int(c, f"$.{v}") for v, c in doc.items()}


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise MalformedInputError(f"{path}: {exc.strerror}") from None
