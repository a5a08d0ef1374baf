import random

import networkx as nx
import pytest

from l1cycles import oracle
from l1cycles.generators import fig3_counterexamples, nonpancyclic_a, nonpancyclic_b, random_graph
from l1cycles.graph import (
    Graph,
    GraphError,
    SizeLimitError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)

from conftest import to_nx

LAYERED10 = nonpancyclic_a(2)


def nx_spectrum(g):
    lengths, per_vertex = set(), {v: set() for v in range(g.n)}
    for c in nx.simple_cycles(to_nx(g)):
        if len(c) >= 3:
            lengths.add(len(c))
            for v in c:
                per_vertex[v].add(len(c))
    return lengths, per_vertex


def random_graphs(count, max_n, seed):
    rng = random.Random(seed)
    return [random_graph(rng.randint(3, max_n), rng.choice((0.3, 0.5, 0.7)), rng) for _ in range(count)]


class TestSpectrum:
    def test_ten_vertex_layered(self):
        rep = oracle.cycle_spectrum(LAYERED10)
        assert 9 not in rep.lengths and 10 in rep.lengths
        assert rep.lengths == frozenset({3, 4, 5, 6, 7, 8, 10})

    def test_fourteen_vertex_layered(self):
        rep = oracle.cycle_spectrum(nonpancyclic_b(2))
        assert 11 not in rep.lengths and 13 not in rep.lengths and 14 in rep.lengths

    def test_c6(self):
        rep = oracle.cycle_spectrum(cycle_graph(6))
        assert rep.lengths == {6}
        assert all(ls == {6} for ls in rep.per_vertex.values())

    def test_tree(self):
        assert oracle.cycle_spectrum(path_graph(5)).lengths == frozenset()

    def test_against_networkx(self):
        for g in random_graphs(80, 9, 3):
            rep = oracle.cycle_spectrum(g)
            lengths, per_vertex = nx_spectrum(g)
            assert rep.lengths == lengths
            assert {v: set(s) for v, s in rep.per_vertex.items()} == per_vertex

    def test_union_invariant(self):
        for g in random_graphs(30, 10, 4):
            rep = oracle.cycle_spectrum(g)
            assert rep.lengths == frozenset().union(*rep.per_vertex.values())
            assert all(3 <= k <= g.n for k in rep.lengths)

    def test_size_cap(self):
        with pytest.raises(SizeLimitError):
            oracle.cycle_spectrum(complete_graph(8), limit=7)


class TestPaths:
    def test_k33_adjacent(self):
        assert oracle.path_vertex_counts(complete_bipartite(3, 3), 0, 3) == {2, 4, 6}

    def test_ten_vertex_end_and_neighbour(self):
        # an end vertex and one of its two neighbours: adjacent, no common neighbour
        assert oracle.path_vertex_counts(LAYERED10, 0, 1) == {2, 4, 5, 6, 7, 8, 10}

    def test_ten_vertex_two_ends_have_nine(self):
        assert 9 in oracle.path_vertex_counts(LAYERED10, 0, 9)

    def test_fourteen_vertex_end_and_neighbour(self):
        counts = oracle.path_vertex_counts(nonpancyclic_b(2), 0, 1)
        assert not {11, 13} & counts and 14 in counts

    def test_p4(self):
        assert oracle.path_vertex_counts(path_graph(4), 0, 3) == {4}

    def test_same_vertex(self):
        with pytest.raises(GraphError):
            oracle.path_vertex_counts(LAYERED10, 1, 1)

    def test_against_networkx(self):
        for g in random_graphs(60, 8, 5):
            h = to_nx(g)
            for x, y in [(0, g.n - 1), (0, 1)]:
                want = {len(p) for p in nx.all_simple_paths(h, x, y)}
                assert oracle.path_vertex_counts(g, x, y) == want

    def test_iter_paths_against_networkx(self):
        for g in random_graphs(30, 7, 6):
            got = sorted(list(p.vertices) for p in oracle.iter_paths(g, 0, g.n - 1))
            want = sorted(nx.all_simple_paths(to_nx(g), 0, g.n - 1))
            assert got == want

    def test_find_path(self):
        p = oracle.find_path(LAYERED10, 0, 1, 8)
        assert p is not None and len(p) == 8 and p.is_valid(LAYERED10)
        assert oracle.find_path(LAYERED10, 0, 1, 9) is None


class TestCycles:
    def test_iter_cycles_count(self):
        for g in random_graphs(40, 8, 7):
            cycles = list(oracle.iter_cycles(g))
            assert len(cycles) == len({frozenset(c.edge_list()) for c in cycles})
            assert len(cycles) == sum(1 for c in nx.simple_cycles(to_nx(g)) if len(c) >= 3)
            assert all(c.is_valid(g) for c in cycles)

    def test_find_cycle(self):
        c = oracle.find_cycle(LAYERED10, 10)
        assert c is not None and c.is_valid(LAYERED10) and len(c) == 10
        assert oracle.find_cycle(LAYERED10, 9) is None
        assert 5 in oracle.find_cycle(LAYERED10, 4, through=5).vertices


class TestHamiltonian:
    def test_k23(self):
        assert oracle.is_hamiltonian_oracle(complete_bipartite(2, 3)) is None

    def test_c5(self):
        c = oracle.is_hamiltonian_oracle(cycle_graph(5))
        assert c is not None and c.is_valid(cycle_graph(5)) and len(c) == 5

    def test_petersen(self):
        assert oracle.is_hamiltonian_oracle(petersen_graph()) is None

    def test_against_spectrum(self):
        for g in random_graphs(60, 9, 8):
            assert (oracle.is_hamiltonian_oracle(g) is not None) == (g.n in nx_spectrum(g)[0])


class TestMatching:
    def test_k33(self):
        assert oracle.has_perfect_matching_oracle(complete_bipartite(3, 3))

    def test_claw(self):
        assert not oracle.has_perfect_matching_oracle(complete_bipartite(1, 3))

    def test_odd(self):
        assert not oracle.has_perfect_matching_oracle(complete_graph(5))

    def test_against_networkx(self):
        for g in random_graphs(100, 10, 9):
            m = nx.max_weight_matching(to_nx(g), maxcardinality=True)
            assert oracle.has_perfect_matching_oracle(g) == (2 * len(m) == g.n)


class TestExtensionSearch:
    def test_common_neighbour_witnesses(self):
        for g in fig3_counterexamples():
            found = oracle.find_unextendable_path(g)
            assert found is not None
            x, y, p = found
            assert g.adj[x] & g.adj[y]
            assert p.is_valid(g) and len(p) < g.n
            assert not oracle.short_extension_exists(g, p)

    def test_short_extension(self):
        g = complete_graph(5)
        assert oracle.short_extension_exists(g, oracle.find_cycle(g, 3))
        # in C6 a path between neighbours can only grow into the whole cycle
        c6 = cycle_graph(6)
        p = oracle.find_path(c6, 0, 1, 2)
        assert not oracle.short_extension_exists(c6, p)

