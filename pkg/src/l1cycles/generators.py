"""Constructors for the named graph families and the random test corpus."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .conditions import hypotheses_ok
from .graph import (
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
)


@dataclass(frozen=True)
class LayerSpec:
    kind: str  # "complete" or "empty"
    size: int

    def __post_init__(self):
        if self.kind not in ("complete", "empty"):
            raise GraphError(f"layer kind must be 'complete' or 'empty', got {self.kind!r}")
        if self.size < 1:
            raise GraphError(f"layer size must be at least 1, got {self.size}")


def K(size: int) -> LayerSpec:
    return LayerSpec("complete", size)


def E(size: int) -> LayerSpec:
    return LayerSpec("empty", size)


def layered_join(layers: Iterable[LayerSpec]) -> Graph:
    """Disjoint union of the layers plus every edge between consecutive layers.

    Vertices are numbered layer by layer.
    """
    layers = list(layers)
    if not layers:
        raise GraphError("layered_join needs at least one layer")
    blocks = []
    start = 0
    for spec in layers:
        blocks.append(range(start, start + spec.size))
        start += spec.size
    edges = []
    for spec, block in zip(layers, blocks):
        if spec.kind == "complete":
            edges.extend(combinations(block, 2))
    for left, right in zip(blocks, blocks[1:]):
        edges.extend((u, v) for u in left for v in right)
    return Graph(start, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Binary join: disjoint union of ``g`` and ``h`` (h shifted by g.n) plus all cross edges."""
    shift = g.n
    edges = list(g.edges())
    edges += [(u + shift, v + shift) for u, v in h.edges()]
    edges += [(u, shift + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    shift = 0
    for g in graphs:
        edges += [(u + shift, v + shift) for u, v in g.edges()]
        shift += g.n
    return Graph(shift, edges)


def nonpancyclic_a(m: int) -> Graph:
    """K1 v co-K2 v (K2)^m v co-K2 v K1, on 2m + 6 vertices; it has no (|V|-1)-cycle."""
    if m < 2:
        raise GraphError(f"need at least two K2 layers, got m={m}")
    return layered_join([K(1), E(2)] + [K(2)] * m + [E(2), K(1)])


def nonpancyclic_b(m: int) -> Graph:
    """K1 v co-K2 v co-K2 v (K2)^m v co-K2 v co-K2 v K1, on 2m + 10 vertices."""
    if m < 2:
        raise GraphError(f"need at least two K2 layers, got m={m}")
    return layered_join([K(1), E(2), E(2)] + [K(2)] * m + [E(2), E(2), K(1)])


def family_k(p: int, a_edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """A graph of the exception family: A = {0..p-1} carrying ``a_edges``,
    independent B = {p..2p}, and every A-B edge."""
    if p < 2:
        raise GraphError(f"p must be at least 2, got {p}")
    a_edges = list(a_edges)
    for u, v in a_edges:
        if not (0 <= u < p and 0 <= v < p):
            raise GraphError(f"edge ({u}, {v}) is not inside the A side 0..{p - 1}")
    cross = [(a, b) for a in range(p) for b in range(p, 2 * p + 1)]
    return Graph(2 * p + 1, cross + a_edges)


KNN_VARIANTS = ("full", "minus_vertex", "minus_edge", "minus_perfect_matching")


def knn_variant(n: int, variant: str) -> Graph:
    """K_{n,n} (sides 0..n-1 and n..2n-1), optionally minus a vertex, an edge or the matching i -- n+i."""
    if variant not in KNN_VARIANTS:
        raise GraphError(f"unknown variant {variant!r}; expected one of {KNN_VARIANTS}")
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if variant == "full":
        return complete_bipartite(n, n)
    if variant == "minus_vertex":
        return complete_bipartite(n, n - 1) if n >= 2 else Graph(1)
    if n < 2 or (variant == "minus_perfect_matching" and n < 3):
        raise GraphError(f"K_({n},{n}) {variant.replace('_', ' ')} is disconnected")
    if variant == "minus_edge":
        drop = {(0, n)}
    else:
        drop = {(i, n + i) for i in range(n)}
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if (i, n + j) not in drop])


def fig3_counterexamples() -> tuple[Graph, Graph]:
    """K2 v K2 v K2 v K2 v K2 (consecutive joins) and P3 v 3K2."""
    first = layered_join([K(2)] * 5)
    second = join(path_graph(3), disjoint_union(*[complete_graph(2)] * 3))
    return first, second


DENSITIES = (0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_satisfying(n: int, seed: int, max_tries: int = 10000) -> Optional[Graph]:
    """Rejection-sample a graph on ``n`` vertices that meets the extension hypotheses.

    Edge density cycles through 0.3..0.9 across attempts. Deterministic in the
    arguments; returns None when ``max_tries`` attempts all fail.
    """
    if n < 3:
        raise GraphError(f"n must be at least 3, got {n}")
    rng = random.Random(seed)
    for attempt in range(max_tries):
        g = random_graph(n, DENSITIES[attempt % len(DENSITIES)], rng)
        if hypotheses_ok(g):
            return g
    return None


def random_layered(rng: random.Random, max_n: int) -> Graph:
    """A random consecutive-layer join with 2-6 layers of size 1-3, capped at ``max_n`` vertices."""
    layers = []
    total = 0
    for _ in range(rng.randint(2, 6)):
        size = rng.randint(1, 3)
        if total + size > max_n:
            break
        layers.append(LayerSpec(rng.choice(("complete", "empty")), size))
        total += size
    return layered_join(layers or [K(1)])


def named_candidates() -> list[tuple[str, Graph]]:
    """Hand-picked small graphs: cliques, bipartite variants, wheels, blow-ups and the exception family."""
    out = [(f"K{n}", complete_graph(n)) for n in range(3, 8)]
    out += [("C4", cycle_graph(4))]
    out += [(f"K{a},{b}", complete_bipartite(a, b)) for a, b in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (4, 5)]]
    for n in (3, 4, 5):
        for variant in KNN_VARIANTS:
            try:
                out.append((f"K{n},{n}-{variant}", knn_variant(n, variant)))
            except GraphError:
                pass
    out += [("nonpancyclic_a(2)", nonpancyclic_a(2)), ("nonpancyclic_a(3)", nonpancyclic_a(3))]
    fig3a, fig3b = fig3_counterexamples()
    out += [("fig3_K2^5", fig3a), ("fig3_P3vee3K2", fig3b)]
    out += [
        ("family_k(2,{})", family_k(2)),
        ("family_k(2,{01})", family_k(2, [(0, 1)])),
        ("family_k(3,{})", family_k(3)),
        ("family_k(3,{01})", family_k(3, [(0, 1)])),
        ("family_k(3,{01,12,02})", family_k(3, [(0, 1), (1, 2), (0, 2)])),
        ("family_k(4,{01,23})", family_k(4, [(0, 1), (2, 3)])),
        ("family_k(5,{})", family_k(5)),
    ]
    wheel = lambda k: join(complete_graph(1), cycle_graph(k))  # noqa: E731
    out += [(f"W{k}", wheel(k)) for k in (4, 5, 6, 8)]
    out += [("C5[K2]", _lexicographic_cycle(5, 2)), ("C4[K2]", _lexicographic_cycle(4, 2))]
    out += [("prism", Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]))]
    return out


def _lexicographic_cycle(k: int, t: int) -> Graph:
    """C_k with every vertex blown up into a K_t and consecutive blobs completely joined."""
    inside = [e for i in range(k) for e in combinations(range(i * t, (i + 1) * t), 2)]
    across = [(i * t + a, ((i + 1) % k) * t + b) for i in range(k) for a in range(t) for b in range(t)]
    return Graph(k * t, inside + across)


def corpus(max_n: int = 12, seed: int = 2019, random_count: int = 300, layered_count: int = 400) -> list[tuple[str, Graph]]:
    """Deduplicated list of (name, graph) meeting the extension hypotheses with at most ``max_n`` vertices.

    Combines the named families, random consecutive-layer joins and
    ``random_satisfying`` draws with sizes spread over 4..max_n.
    """
    rng = random.Random(seed)
    pool = named_candidates()
    for i in range(layered_count):
        pool.append((f"layered#{i}", random_layered(rng, max_n)))
    sizes = list(range(4, max_n + 1))
    for i in range(random_count):
        n = sizes[i % len(sizes)]
        g = random_satisfying(n, seed=seed * 100003 + i, max_tries=2000)
        if g is not None:
            pool.append((f"random(n={n},#{i})", g))
    seen = set()
    out = []
    for name, g in pool:
        if g.n > max_n or g in seen or not is_connected(g) or not hypotheses_ok(g):
            continue
        seen.add(g)
        out.append((name, g))
    return out


def iter_connected_bipartite(max_n: int):
    """Every connected bipartite graph on 2..max_n vertices, as labelled graphs with sides
    ``0..a-1`` and ``a..a+b-1`` (a <= b); isomorphic copies are not removed."""
    for total in range(2, max_n + 1):
        for a in range(1, total // 2 + 1):
            b = total - a
            pairs = [(i, a + j) for i in range(a) for j in range(b)]
            for mask in range(1 << len(pairs)):
                edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
                if len(edges) < total - 1:
                    continue
                g = Graph(total, edges)
                if is_connected(g):
                    yield g


def general_corpus(seed: int = 7, count: int = 600, max_n: int = 10) -> list[Graph]:
    """Random connected graphs of mixed density, with no hypothesis filtering."""
    rng = random.Random(seed)
    out = [g for _, g in named_candidates() if g.n <= max_n]
    out += [cycle_graph(k) for k in range(3, max_n + 1)] + [path_graph(k) for k in range(3, max_n + 1)]
    while len(out) < count:
        n = rng.randint(3, max_n)
        g = random_graph(n, rng.choice((0.2, 0.3) + DENSITIES), rng)
        if is_connected(g):
            out.append(g)
    return out
