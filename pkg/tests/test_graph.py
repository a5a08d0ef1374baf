import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from l1cycles.graph import (
    Graph,
    Graph6Error,
    GraphError,
    VertexSequence,
    ball,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    distance,
    edge_count_between,
    parse_graph6,
    to_dot,
    to_graph6,
)

from conftest import to_nx


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph.from_adjacency([[1], []])
    g = Graph(3, [(0, 1), (1, 0)])
    assert g.num_edges() == 1 and 0 in g.adj[1]


class TestGraph6:
    def test_k4(self):
        # n=4 -> 'C'; six upper-triangle bits all set -> 63 + 63 = '~'
        g = parse_graph6("C~")
        assert g.n == 4 and g.num_edges() == 6
        assert g == complete_graph(4)

    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and g.num_edges() == 0

    def test_header_and_whitespace(self):
        assert parse_graph6(">>graph6<<C~\n") == complete_graph(4)

    def test_matches_networkx_encoder(self):
        rng = random.Random(3)
        for _ in range(50):
            n = rng.randint(1, 30)
            h = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**6))
            ref = nx.to_graph6_bytes(h, header=False).decode().strip()
            g = Graph(n, h.edges())
            assert to_graph6(g) == ref
            assert parse_graph6(ref) == g

    def test_round_trip_random(self):
        rng = random.Random(0)
        for _ in range(200):
            n = rng.randint(1, 12)
            text = to_graph6(Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]))
            assert to_graph6(parse_graph6(text)) == text

    def test_large_size_field(self):
        g = cycle_graph(70)
        text = to_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g

    @pytest.mark.parametrize(
        "text, offset",
        [("C", 1), ("C~~", 2), ("C }", 1), ("", 0), ("~?@", 3)],
    )
    def test_errors_name_offset(self, text, offset):
        with pytest.raises(Graph6Error) as info:
            parse_graph6(text)
        assert info.value.offset == offset
        assert f"byte offset {offset}" in str(info.value)

    @given(graphs(max_n=62))
    @settings(max_examples=100, deadline=None)
    def test_round_trip_property(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestMetric:
    def test_cycle_opposite(self):
        assert distance(cycle_graph(6), 0, 3) == 3

    def test_bipartite_same_side(self):
        assert distance(complete_bipartite(3, 3), 0, 1) == 2

    def test_disconnected(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert distance(g, 0, 3) is None
        assert distance(g, 2, 2) == 0

    def test_invalid_vertex(self):
        with pytest.raises(GraphError):
            distance(cycle_graph(4), 0, 9)
        with pytest.raises(GraphError):
            ball(cycle_graph(4), -1, 1)

    @given(graphs(max_n=10))
    @settings(max_examples=80, deadline=None)
    def test_metric_axioms_against_networkx(self, g):
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.n):
            for v in range(g.n):
                d = distance(g, u, v)
                assert d == ref[u].get(v)
                assert d == distance(g, v, u)
                if d is None:
                    continue
                for w in range(g.n):
                    duw, dwv = distance(g, u, w), distance(g, w, v)
                    if duw is not None and dwv is not None:
                        assert d <= duw + dwv


class TestBall:
    def test_radius_zero(self):
        assert ball(complete_graph(5), 2, 0) == {2}

    def test_c6_radius_two(self):
        # BFS from 0 on the 6-cycle reaches 1,5 then 2,4; only 3 is farther
        assert ball(cycle_graph(6), 0, 2) == {0, 1, 2, 4, 5}

    def test_beyond_diameter(self):
        g = cycle_graph(7)
        assert ball(g, 3, 3) == set(range(7))

    @given(graphs(max_n=10), st.integers(0, 5))
    @settings(max_examples=60, deadline=None)
    def test_monotone(self, g, r):
        for v in range(g.n):
            assert ball(g, v, r) <= ball(g, v, r + 1)


class TestEdgeCount:
    def test_complete_bipartite(self):
        assert edge_count_between(complete_bipartite(2, 3), {0, 1}, {2, 3, 4}) == 6

    def test_empty_side(self):
        assert edge_count_between(cycle_graph(5), {0, 1}, set()) == 0

    def test_alternating_classes(self):
        assert edge_count_between(cycle_graph(6), {0, 2, 4}, {1, 3, 5}) == 6

    def test_overlap_rejected(self):
        with pytest.raises(GraphError):
            edge_count_between(cycle_graph(6), {0, 1}, {1, 2})

    @given(graphs(max_n=10), st.randoms())
    @settings(max_examples=60, deadline=None)
    def test_symmetric_and_sum(self, g, rnd):
        labels = [rnd.randint(0, 2) for _ in range(g.n)]
        xs = {v for v in range(g.n) if labels[v] == 0}
        ys = {v for v in range(g.n) if labels[v] == 1}
        count = edge_count_between(g, xs, ys)
        assert count == edge_count_between(g, ys, xs)
        assert count == sum(len(g.adj[x] & ys) for x in xs)
        assert count == sum(1 for u, v in to_nx(g).edges() if (u in xs and v in ys) or (u in ys and v in xs))


class TestVertexSequence:
    def test_successor_predecessor(self):
        c = VertexSequence.cycle([0, 1, 2, 3])
        assert c.successor(3) == 0 and c.predecessor(0) == 3
        p = VertexSequence.path([0, 1, 2])
        assert p.successor(2) is None and p.predecessor(0) is None

    def test_validation(self):
        g = cycle_graph(5)
        assert VertexSequence.cycle([0, 1, 2, 3, 4]).is_valid(g)
        assert not VertexSequence.cycle([0, 1, 2]).is_valid(g)
        assert not VertexSequence.cycle([0, 1]).is_valid(complete_graph(3))
        assert not VertexSequence.path([0, 1, 0]).is_valid(g)
        assert VertexSequence.path([3]).is_valid(g)
        with pytest.raises(GraphError, match="not an edge"):
            VertexSequence.path([0, 2]).validate(g)


class TestDot:
    def test_plain(self):
        text = to_dot(complete_graph(3))
        assert text.startswith("graph G {") and text.rstrip().endswith("}")
        assert text.count(" -- ") == 3
        assert sum(1 for line in text.splitlines() if line.strip().rstrip(";").isdigit()) == 3

    def test_highlight(self):
        text = to_dot(complete_graph(3), VertexSequence.cycle([0, 1, 2]))
        assert text.count('color="red"') == 3

    def test_empty(self):
        text = to_dot(Graph(0))
        assert " -- " not in text and text.count(";") == 0

    def test_parses_with_networkx_pydot_free_reader(self):
        # node and edge statements are all of the simple form "a -- b [attrs];"
        text = to_dot(cycle_graph(4), VertexSequence.path([0, 1, 2]))
        edges = {tuple(sorted(map(int, line.split("[")[0].strip(" ;").split(" -- ")))) for line in text.splitlines() if " -- " in line}
        assert edges == {(0, 1), (1, 2), (2, 3), (0, 3)}
