"""Brute-force ground truth: cycle and path spectra, Hamiltonicity, perfect matchings.

Only the graph container is shared with the extension code; every search here
is a plain backtracking over bitmasks so that it can serve as an independent
check on the constructive algorithms.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, GraphError, SizeLimitError, VertexSequence, bfs_distances

SPECTRUM_LIMIT = int(os.environ.get("L1CYCLES_SPECTRUM_LIMIT", 16))


def _cap(operation: str, g: Graph, limit: Optional[int]) -> None:
    limit = SPECTRUM_LIMIT if limit is None else limit
    if g.n > limit:
        raise SizeLimitError(operation, g.n, limit)


@dataclass(frozen=True)
class SpectrumReport:
    lengths: frozenset[int]
    per_vertex: dict[int, frozenset[int]]

    def to_dict(self) -> dict:
        return {
            "lengths": sorted(self.lengths),
            "per_vertex": {str(v): sorted(ls) for v, ls in sorted(self.per_vertex.items())},
        }


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycle_through(g: Graph, start: int, length: int, allowed: int) -> Optional[list[int]]:
    """A cycle of exactly ``length`` vertices through ``start`` using only ``allowed`` vertices."""
    masks = g.masks
    dist = [d if d is not None else g.n + 1 for d in bfs_distances(g, start)]
    start_bit = 1 << start
    path = [start]

    def dfs(cur: int, used: int) -> bool:
        k = len(path)
        if k == length:
            return bool(masks[cur] & start_bit)
        for w in _bits(masks[cur] & allowed & ~used):
            # w becomes vertex k+1; it must still reach start within the remaining edges
            if dist[w] > length - k:
                continue
            path.append(w)
            if dfs(w, used | (1 << w)):
                return True
            path.pop()
        return False

    if length < 3 or not allowed & start_bit:
        return None
    return list(path) if dfs(start, start_bit) else None


def cycle_spectrum(g: Graph, limit: Optional[int] = None) -> SpectrumReport:
    """Exact set of cycle lengths, overall and through each vertex."""
    _cap("cycle_spectrum", g, limit)
    n = g.n
    full = (1 << n) - 1
    lengths = set()
    for length in range(3, n + 1):
        for s in range(n):
            # canonical: s is the smallest vertex of the cycle
            allowed = full & ~((1 << s) - 1)
            if _cycle_through(g, s, length, allowed) is not None:
                lengths.add(length)
                break
    per_vertex: dict[int, set[int]] = {v: set() for v in range(n)}
    for length in sorted(lengths):
        for x in range(n):
            if length in per_vertex[x]:
                continue
            cyc = _cycle_through(g, x, length, full)
            if cyc is not None:
                for v in cyc:
                    per_vertex[v].add(length)
    return SpectrumReport(frozenset(lengths), {v: frozenset(s) for v, s in per_vertex.items()})


def _path_between(g: Graph, x: int, y: int, count: int) -> Optional[list[int]]:
    masks = g.masks
    dist = [d if d is not None else g.n + 1 for d in bfs_distances(g, y)]
    path = [x]

    def dfs(cur: int, used: int) -> bool:
        k = len(path)
        if k == count:
            return cur == y
        for w in _bits(masks[cur] & ~used):
            # after adding w there are count-k-1 vertices left, so that many edges to y
            if dist[w] > count - k - 1 or (w == y and k + 1 != count):
                continue
            path.append(w)
            if dfs(w, used | (1 << w)):
                return True
            path.pop()
        return False

    if count < 2:
        return None
    return list(path) if dfs(x, 1 << x) else None


def path_vertex_counts(g: Graph, x: int, y: int, limit: Optional[int] = None) -> frozenset[int]:
    """Exact set of vertex counts of x-y paths."""
    _cap("path_vertex_counts", g, limit)
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise GraphError("path_vertex_counts needs two distinct vertices")
    return frozenset(k for k in range(2, g.n + 1) if _path_between(g, x, y, k) is not None)


def find_path(g: Graph, x: int, y: int, count: int) -> Optional[VertexSequence]:
    found = _path_between(g, x, y, count)
    return None if found is None else VertexSequence.path(found)


def find_cycle(g: Graph, length: int, through: Optional[int] = None) -> Optional[VertexSequence]:
    full = (1 << g.n) - 1
    starts = range(g.n) if through is None else [through]
    for s in starts:
        found = _cycle_through(g, s, length, full)
        if found is not None:
            return VertexSequence.cycle(found)
    return None


def is_hamiltonian_oracle(g: Graph, limit: Optional[int] = None) -> Optional[VertexSequence]:
    """A Hamilton cycle, or None."""
    _cap("is_hamiltonian_oracle", g, limit)
    if g.n < 3:
        return None
    found = _cycle_through(g, 0, g.n, (1 << g.n) - 1)
    return None if found is None else VertexSequence.cycle(found)


def has_perfect_matching_oracle(g: Graph, limit: Optional[int] = None) -> bool:
    _cap("has_perfect_matching_oracle", g, limit)
    if g.n % 2:
        return False
    masks = g.masks

    def match(free: int) -> bool:
        if not free:
            return True
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        return any(match(rest & ~(1 << w)) for w in _bits(masks[v] & rest))

    return match((1 << g.n) - 1)


def iter_cycles(g: Graph, limit: Optional[int] = None) -> Iterator[VertexSequence]:
    """Every cycle exactly once: smallest vertex first, second vertex below the last."""
    _cap("iter_cycles", g, limit)
    masks = g.masks
    for s in range(g.n):
        allowed = ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(cur: int, used: int) -> Iterator[VertexSequence]:
            if len(path) >= 3 and masks[cur] >> s & 1 and path[1] < cur:
                yield VertexSequence.cycle(path)
            for w in _bits(masks[cur] & allowed & ~used):
                path.append(w)
                yield from walk(w, used | (1 << w))
                path.pop()

        yield from walk(s, 1 << s)


def iter_paths(g: Graph, x: int, y: int, limit: Optional[int] = None) -> Iterator[VertexSequence]:
    """Every x-y path, directed from x to y."""
    _cap("iter_paths", g, limit)
    masks = g.masks
    path = [x]

    def walk(cur: int, used: int) -> Iterator[VertexSequence]:
        if cur == y:
            yield VertexSequence.path(path)
            return
        for w in _bits(masks[cur] & ~used):
            path.append(w)
            yield from walk(w, used | (1 << w))
            path.pop()

    yield from walk(x, 1 << x)


def _spans(g: Graph, verts: frozenset[int], seq: VertexSequence) -> bool:
    sub, labels = g.induced_subgraph(verts)
    index = {v: i for i, v in enumerate(labels)}
    if seq.closed:
        return _cycle_through(sub, index[seq.vertices[0]], sub.n, (1 << sub.n) - 1) is not None
    return _path_between(sub, index[seq.vertices[0]], index[seq.vertices[-1]], sub.n) is not None


def short_extension_exists(g: Graph, seq: VertexSequence) -> bool:
    """Is there a cycle (or path with the same ends) on ``V(seq)`` plus one or two more vertices?"""
    on = seq.vertex_set()
    outside = [v for v in range(g.n) if v not in on]
    for size in (1, 2):
        for extra in combinations(outside, size):
            if _spans(g, on | frozenset(extra), seq):
                return True
    return False


def find_unextendable_path(
    g: Graph, common_neighbours: bool = True, limit: Optional[int] = None
) -> Optional[tuple[int, int, VertexSequence]]:
    """First non-spanning x-y path that no x-y path on one or two more vertices contains.

    With ``common_neighbours`` only pairs sharing a neighbour are scanned.
    """
    _cap("find_unextendable_path", g, limit)
    for x, y in combinations(range(g.n), 2):
        if bool(g.adj[x] & g.adj[y]) != common_neighbours:
            continue
        for p in iter_paths(g, x, y, limit):
            if len(p) < g.n and not short_extension_exists(g, p):
                return x, y, p
    return None
