"""Immutable simple graphs, vertex sequences and the graph6/DOT formats.

Vertices are the dense integers ``0..n-1``. Everything downstream (the
condition predicates, the extension procedures and the brute-force oracle)
works on :class:`Graph` values and never mutates them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Invalid argument for a graph operation."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SizeLimitError(RuntimeError):
    """An exponential routine was asked to run above its configured size cap."""

    def __init__(self, operation: str, n: int, limit: int):
        super().__init__(
            f"{operation}: graph has {n} vertices, above the limit of {limit}; "
            f"pass a larger limit to run it anyway"
        )
        self.operation = operation
        self.n = n
        self.limit = limit


class Graph:
    """Simple undirected graph stored as one frozenset of neighbours per vertex."""

    __slots__ = ("n", "adj", "_masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._masks: Optional[tuple[int, ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from a neighbour list, checking symmetry."""
        n = len(adj)
        edges = []
        for u, nb in enumerate(adj):
            for v in nb:
                if not 0 <= v < n:
                    raise GraphError(f"neighbour {v} of {u} outside 0..{n - 1}")
                if u not in adj[v]:
                    raise GraphError(f"asymmetric adjacency: {v} in adj[{u}] but not vice versa")
                edges.append((u, v))
        return cls(n, edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self) -> int:
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as integer bitmasks; bit ``v`` of ``masks[u]`` is set iff uv is an edge."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in nb) for nb in self.adj)
        return self._masks

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex {v!r} for a graph on {self.n} vertices")

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph (relabelled ``0..k-1``) and the old labels in order."""
        labels = sorted(set(keep))
        index = {v: i for i, v in enumerate(labels)}
        edges = [
            (index[u], index[v])
            for u in labels
            for v in self.adj[u]
            if v in index and u < v
        ]
        return Graph(len(labels), edges), labels

    def without(self, removed: Iterable[int]) -> "Graph":
        """Same vertex labels, all edges touching ``removed`` dropped."""
        gone = set(removed)
        return Graph(self.n, [(u, v) for u, v in self.edges() if u not in gone and v not in gone])


@dataclass(frozen=True)
class VertexSequence:
    """An ordered list of distinct vertices: a cycle when ``closed``, else a path.

    The stored order fixes the direction used for successors and predecessors.
    """

    vertices: tuple[int, ...]
    closed: bool

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @classmethod
    def cycle(cls, vertices: Iterable[int]) -> "VertexSequence":
        return cls(tuple(vertices), True)

    @classmethod
    def path(cls, vertices: Iterable[int]) -> "VertexSequence":
        return cls(tuple(vertices), False)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def successor(self, x: int) -> Optional[int]:
        i = self.vertices.index(x)
        if i + 1 < len(self.vertices):
            return self.vertices[i + 1]
        return self.vertices[0] if self.closed else None

    def predecessor(self, x: int) -> Optional[int]:
        i = self.vertices.index(x)
        if i > 0:
            return self.vertices[i - 1]
        return self.vertices[-1] if self.closed else None

    def reversed(self) -> "VertexSequence":
        return VertexSequence(self.vertices[::-1], self.closed)

    def edge_list(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.closed and len(vs) >= 3:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def problems(self, g: Graph) -> list[str]:
        """Every way in which this sequence fails to be a cycle/path of ``g``."""
        out = []
        vs = self.vertices
        if self.closed and len(vs) < 3:
            out.append(f"a cycle needs at least 3 vertices, got {len(vs)}")
        if not self.closed and len(vs) < 1:
            out.append("a path needs at least 1 vertex")
        bad = [v for v in vs if not (isinstance(v, int) and 0 <= v < g.n)]
        if bad:
            out.append(f"vertices {bad} are not in the graph")
            return out
        if len(set(vs)) != len(vs):
            out.append("repeated vertices")
        for u, v in self.edge_list():
            if not g.has_edge(u, v):
                out.append(f"{u}-{v} is not an edge")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)

    def validate(self, g: Graph) -> None:
        probs = self.problems(g)
        if probs:
            kind = "cycle" if self.closed else "path"
            raise GraphError(f"invalid {kind} {list(self.vertices)}: " + "; ".join(probs))


# ---------------------------------------------------------------------------
# metric and neighbourhood queries


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    g.check_vertex(source)
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path length between ``u`` and ``v``, or None if they are disconnected."""
    g.check_vertex(v)
    return bfs_distances(g, u)[v]


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    """Closed ball ``{u : d(v, u) <= r}``."""
    if r < 0:
        raise GraphError(f"radius must be non-negative, got {r}")
    return frozenset(u for u, d in enumerate(bfs_distances(g, v)) if d is not None and d <= r)


def edge_count_between(g: Graph, x_set: Iterable[int], y_set: Iterable[int]) -> int:
    """Number of edges with one end in ``x_set`` and the other in ``y_set`` (disjoint sets)."""
    xs, ys = set(x_set), set(y_set)
    for v in xs | ys:
        g.check_vertex(v)
    common = xs & ys
    if common:
        raise GraphError(f"vertex sets must be disjoint, both contain {sorted(common)}")
    return sum(len(g.adj[x] & ys) for x in xs)


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_bipartite(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A 2-colouring as (side of the lowest vertex of each component, other side), or None."""
    colour: list[Optional[int]] = [None] * g.n
    for s in range(g.n):
        if colour[s] is not None:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if colour[w] is None:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    return (
        frozenset(v for v in range(g.n) if colour[v] == 0),
        frozenset(v for v in range(g.n) if colour[v] == 1),
    )


# ---------------------------------------------------------------------------
# graph6


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError(f"graph6 size field only supports n <= 258047, got {n}")


def to_graph6(g: Graph) -> str:
    """graph6 text (no header, no newline). Bits run over the upper triangle column by column."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    if len(s) <= start:
        raise Graph6Error("empty graph6 string", start)
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"character {s[i]!r} outside the graph6 range 63..126", i)
    pos = start
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    else:
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6Error("8-byte size fields (n > 258047) are not supported", pos)
        if len(s) < pos + 4:
            raise Graph6Error("truncated size field", len(s))
        n = 0
        for c in s[pos + 1:pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        pos += 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise Graph6Error(f"bit vector truncated: expected {need} bytes, found {len(body)}", len(s))
    if len(body) > need:
        raise Graph6Error(f"{len(body) - need} trailing bytes after the bit vector", pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", pos + need - 1)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# DOT


def to_dot(g: Graph, highlight: Optional[VertexSequence] = None, name: str = "G") -> str:
    """DOT text for ``g``; edges of ``highlight`` are drawn bold and red."""
    marked: set[frozenset[int]] = set()
    if highlight is not None:
        highlight.validate(g)
        marked = {frozenset(e) for e in highlight.edge_list()}
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        style = ' [color="red", penwidth=3]' if frozenset((u, v)) in marked else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# small named graphs used all over the tests


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
