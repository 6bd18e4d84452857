import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from builders import complete, cycle, cyclic, digraph
from dpcolor import Biorientation, Direction, MalformedInputError, Multigraph, strongly_connected_components
from dpcolor.graph import bidirected_edges, delete_vertices, induced_subgraph, out_degree


def test_loops_rejected():
    with pytest.raises(MalformedInputError):
        Multigraph(["a"], [("e", "a", "a")])


def test_unknown_endpoint_and_duplicates_rejected():
    with pytest.raises(MalformedInputError):
        Multigraph(["a"], [("e", "a", "b")])
    with pytest.raises(MalformedInputError):
        Multigraph(["a", "a"])
    with pytest.raises(MalformedInputError):
        Multigraph(["a", "b"], [("e", "a", "b"), ("e", "b", "a")])


def test_parallel_edges_are_distinct():
    g = Multigraph(["a", "b"], [("e1", "a", "b"), ("e2", "b", "a")])
    assert g.degree("a") == 2
    d = Biorientation(g, {"e1": "uv", "e2": "uv"})
    assert d.out_degree("a") == 1 and d.out_degree("b") == 1


class TestInducedSubgraph:
    def test_triangle_pair(self):
        g = complete(3, start=1)
        sub = induced_subgraph(g, {"v1", "v2"})
        assert sub.vertices == ("v1", "v2")
        assert [e.id for e in sub.edges] == ["v1v2"]

    def test_whole_vertex_set_is_identity(self):
        g = cycle(4)
        assert induced_subgraph(g, g.vertices) == g

    def test_k4_to_triangle_keeps_edge_ids(self):
        g = complete(4, start=1)
        keep = {"v1", "v2", "v3"}
        expected = [e.id for e in g.edges if e.u in keep and e.v in keep]
        assert expected == ["v1v2", "v1v3", "v2v3"]
        assert [e.id for e in induced_subgraph(g, keep).edges] == expected

    def test_unknown_vertex(self):
        with pytest.raises(MalformedInputError):
            induced_subgraph(cycle(3), {"zz"})


class TestOutDegree:
    def test_cyclic_c4(self):
        d = cyclic(4)
        assert [out_degree(d, v) for v in d.vertices] == [1, 1, 1, 1]

    def test_isolated(self):
        d = Biorientation(Multigraph(["x"]), {})
        assert out_degree(d, "x") == 0

    def test_k4_split_orientation(self):
        g = Multigraph(
            ["a", "b", "c", "d"],
            [("ab", "a", "b"), ("bc", "b", "c"), ("cd", "c", "d"), ("da", "d", "a"), ("ac", "a", "c"), ("bd", "b", "d")],
        )
        tags = {e.id: Direction.FORWARD for e in g.edges} | {"ac": Direction.BOTH, "bd": Direction.BOTH}
        d = Biorientation(g, tags)
        assert [d.out_degree(v) for v in g.vertices] == [2, 2, 2, 2]
        assert bidirected_edges(d) == {"ac", "bd"}

    def test_unknown_vertex(self):
        with pytest.raises(MalformedInputError):
            out_degree(cyclic(3), "nope")


def test_bidirected_edges_simple_cases():
    assert bidirected_edges(cyclic(5)) == frozenset()
    g = Multigraph(["a", "b"], [("e", "a", "b")])
    assert bidirected_edges(Biorientation(g, {"e": "both"})) == {"e"}


class TestDeleteVertices:
    def test_empty_deletion(self):
        d = cyclic(4)
        assert delete_vertices(d, set()) == d

    def test_cyclic_c4_minus_one_is_path(self):
        d = delete_vertices(cyclic(4, start=1), {"v1"})
        assert d.vertices == ("v2", "v3", "v4")
        assert sorted((t, h) for t, h, _ in d.arcs()) == [("v2", "v3"), ("v3", "v4")]

    def test_delete_everything(self):
        d = delete_vertices(cyclic(4), {"v0", "v1", "v2", "v3"})
        assert d.vertices == () and d.arcs() == []


class TestSCC:
    def test_dag_gives_singletons_sinks_first(self):
        d = digraph(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert strongly_connected_components(d) == [["c"], ["b"], ["a"]]

    def test_directed_four_cycle(self):
        assert strongly_connected_components(cyclic(4)) == [["v0", "v1", "v2", "v3"]]

    def test_two_triangles_joined_by_an_arc(self):
        arcs = [("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x"), ("a", "x")]
        d = digraph(["a", "b", "c", "x", "y", "z"], arcs)
        assert strongly_connected_components(d) == [["x", "y", "z"], ["a", "b", "c"]]


_random_digraphs = st.integers(1, 9).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.sampled_from(list(Direction))),
            max_size=3 * n,
        ),
    )
)


def _build(shape):
    n, raw = shape
    names = [f"v{i}" for i in range(n)]
    edges, tags = [], {}
    for k, (i, j, d) in enumerate(raw):
        if i != j:
            edges.append((f"e{k}", names[i], names[j]))
            tags[f"e{k}"] = d
    return Biorientation(Multigraph(names, edges), tags)


@settings(max_examples=150, deadline=None)
@given(_random_digraphs)
def test_out_degree_sum(shape):
    d = _build(shape)
    counts = {t: 0 for t in Direction}
    for tag in d.direction.values():
        counts[tag] += 1
    total = counts[Direction.FORWARD] + counts[Direction.BACKWARD] + 2 * counts[Direction.BOTH]
    assert sum(d.out_degree(v) for v in d.vertices) == total


@settings(max_examples=150, deadline=None)
@given(_random_digraphs, st.data())
def test_induced_subgraph_composes(shape, data):
    g = _build(shape).base
    a = data.draw(st.sets(st.sampled_from(g.vertices)))
    b = data.draw(st.sets(st.sampled_from(sorted(a)))) if a else set()
    assert g.induced_subgraph(a).induced_subgraph(b) == g.induced_subgraph(b)


@settings(max_examples=150, deadline=None)
@given(_random_digraphs, st.data())
def test_bidirected_after_deletion(shape, data):
    d = _build(shape)
    removed = data.draw(st.sets(st.sampled_from(d.vertices)))
    expected = {
        e.id for e in d.base.edges if e.id in d.bidirected_edges() and e.u not in removed and e.v not in removed
    }
    assert d.delete_vertices(removed).bidirected_edges() == expected


@settings(max_examples=200, deadline=None)
@given(_random_digraphs)
def test_scc_matches_networkx_and_is_terminal_first(shape):
    d = _build(shape)
    comps = strongly_connected_components(d)
    ref = nx.DiGraph()
    ref.add_nodes_from(d.vertices)
    ref.add_edges_from((t, h) for t, h, _ in d.arcs())
    assert {frozenset(c) for c in comps} == {frozenset(c) for c in nx.strongly_connected_components(ref)}
    position = {v: i for i, comp in enumerate(comps) for v in comp}
    for t, h, _ in d.arcs():
        assert position[h] <= position[t]
    assert strongly_connected_components(d) == comps


def test_scc_members_mutually_reachable():
    d = digraph(["a", "b", "c", "d"], [("a", "b"), ("b", "a"), ("b", "c"), ("c", "d"), ("d", "c")])
    comps = strongly_connected_components(d)
    closure = nx.transitive_closure(nx.DiGraph([(t, h) for t, h, _ in d.arcs()]))
    for comp in comps:
        for x, y in itertools.permutations(comp, 2):
            assert closure.has_edge(x, y)
