import itertools
import random

import pytest

from builders import cycle, cyclic
from dpcolor import (
    Biorientation,
    HypothesisViolationError,
    MalformedInputError,
    Multigraph,
    SignedGraph,
    color_signed,
    is_derangement_assignment,
    negative_subgraph,
    positive_subgraph,
    reduce_to_correspondence,
    validate_instance,
    verify_signed_coloring,
)
from dpcolor.generator import GenParams, gen_certified_signed
from dpcolor.oracle import iter_colorings


def triangle(signs):
    g = Multigraph(["a", "b", "c"], [("ab", "a", "b"), ("bc", "b", "c"), ("ca", "c", "a")])
    return SignedGraph(g, dict(zip(["ab", "bc", "ca"], signs)))


def edge(sign):
    return SignedGraph(Multigraph(["u", "v"], [("e", "u", "v")]), {"e": sign})


class TestParts:
    def test_all_positive(self):
        s = triangle([1, 1, 1])
        assert positive_subgraph(s) == s.graph
        assert negative_subgraph(s).edges == ()

    def test_one_negative(self):
        s = triangle([1, -1, 1])
        assert [e.id for e in positive_subgraph(s).edges] == ["ab", "ca"]
        assert [e.id for e in negative_subgraph(s).edges] == ["bc"]

    def test_all_negative(self):
        s = triangle([-1, -1, -1])
        assert negative_subgraph(s) == s.graph


class TestReduce:
    def test_negative_edge(self):
        inst = reduce_to_correspondence(edge(-1), {"u": (1, -1), "v": (1, -1)})
        assert inst.matchings["e"] == ((1, -1), (-1, 1))

    def test_positive_edge(self):
        inst = reduce_to_correspondence(edge(1), {"u": (1, 2), "v": (1, 2)})
        assert inst.matchings["e"] == ((1, 1), (2, 2))

    def test_negative_edge_disjoint(self):
        inst = reduce_to_correspondence(edge(-1), {"u": (1, 2), "v": (3, 4)})
        assert inst.matchings["e"] == ()

    def test_zero_rejected(self):
        with pytest.raises(MalformedInputError):
            reduce_to_correspondence(edge(1), {"u": (0, 1), "v": (1,)})

    def test_always_derangement(self):
        s = triangle([1, -1, -1])
        colors = [1, -1, 2, -2]
        for la, lb, lc in itertools.product(
            [c for r in (1, 2) for c in itertools.combinations(colors, r)], repeat=3
        ):
            inst = reduce_to_correspondence(s, {"a": la, "b": lb, "c": lc})
            assert validate_instance(inst) == []
            assert is_derangement_assignment(inst)[0]


class TestVerifySigned:
    def test_negative_equal_colors_ok(self):
        assert verify_signed_coloring(edge(-1), {"u": (1,), "v": (1,)}, {"u": 1, "v": 1}) == []

    def test_positive_equal_colors_bad(self):
        assert verify_signed_coloring(edge(1), {"u": (1,), "v": (1,)}, {"u": 1, "v": 1})

    def test_negative_opposite_colors_bad(self):
        assert verify_signed_coloring(edge(-1), {"u": (1,), "v": (-1,)}, {"u": 1, "v": -1})

    def test_missing_vertex(self):
        with pytest.raises(MalformedInputError):
            verify_signed_coloring(edge(1), {"u": (1,), "v": (1,)}, {"u": 1})


def signed_brute_force(s, lists):
    verts = s.graph.vertices
    out = []
    for psi in itertools.product(*(lists[v] for v in verts)):
        col = dict(zip(verts, psi))
        if all(col[e.u] != s.sign[e.id] * col[e.v] for e in s.graph.edges):
            out.append(col)
    return out


class TestColorSigned:
    def test_single_negative_edge(self):
        s = edge(-1)
        lists = {"u": (1, -1), "v": (1, -1)}
        d = Biorientation(s.graph, {"e": "both"})
        assert len(signed_brute_force(s, lists)) == 2
        psi = color_signed(s, lists, d)
        assert verify_signed_coloring(s, lists, psi) == []

    def test_positive_c4(self):
        d = cyclic(4)
        s = SignedGraph(d.base, {e.id: 1 for e in d.base.edges})
        lists = {"v0": (1, -1), "v1": (1, 2), "v2": (-1, 2), "v3": (1, -2)}
        assert signed_brute_force(s, lists)
        psi = color_signed(s, lists, d)
        assert psi in signed_brute_force(s, lists)

    def test_unbalanced_triangle(self):
        s = triangle([1, 1, -1])
        d = Biorientation(s.graph, {"ab": "uv", "bc": "uv", "ca": "both"})
        # out-degrees: a 2 (ab, ac), b 1, c 1
        lists = {"a": (1, -1, 2), "b": (1, -1), "c": (1, -1)}
        assert signed_brute_force(s, lists)
        psi = color_signed(s, lists, d)
        assert verify_signed_coloring(s, lists, psi) == []

    def test_negative_edge_must_be_bidirected(self):
        s = edge(-1)
        d = Biorientation(s.graph, {"e": "uv"})
        with pytest.raises(HypothesisViolationError) as info:
            color_signed(s, {"u": (1, -1), "v": (1,)}, d)
        assert info.value.report.twisted_not_bidirected == ["e"]

    def test_positive_odd_cycle_rejected(self):
        d = cyclic(3)
        s = SignedGraph(d.base, {e.id: 1 for e in d.base.edges})
        with pytest.raises(HypothesisViolationError):
            color_signed(s, {v: (1, 2) for v in d.vertices}, d)

    @pytest.mark.parametrize("seed", range(30))
    def test_generated(self, seed):
        s, lists, d = gen_certified_signed(GenParams(3 + seed % 6, 0.4, 0.4, seed % 2, seed))
        psi = color_signed(s, lists, d)
        assert verify_signed_coloring(s, lists, psi) == []


@pytest.mark.parametrize("seed", range(40))
def test_reduction_faithful_small(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    names = [f"x{i}" for i in range(n)]
    edges = [(f"e{k}", *rng.sample(names, 2)) for k in range(rng.randint(0, 5))] if n > 1 else []
    g = Multigraph(names, edges)
    s = SignedGraph(g, {e.id: rng.choice([1, -1]) for e in g.edges})
    lists = {v: tuple(rng.sample([1, -1, 2, -2], rng.randint(1, 4))) for v in names}
    inst = reduce_to_correspondence(s, lists)
    assert list(iter_colorings(inst)) == signed_brute_force(s, lists)


def test_c4_signed_file_roundtrip_shape():
    s = SignedGraph(cycle(4), {f"e{i}": (-1) ** i for i in range(4)})
    assert [e.id for e in negative_subgraph(s).edges] == ["e1", "e3"]
