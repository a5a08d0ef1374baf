"""Hypothesis predicates and structural classifications.

The central objects are the *distance-2 triples* ``(u, v, w)``: ``u`` and ``v``
are non-adjacent, distinct and ``w`` is a common neighbour, so ``d(u, v) = 2``.
A graph is an L_i-graph when every such triple has

    |N(u) | N(v) | N(w)| - d(u) - d(v) <= i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterator, Optional

from .graph import (
    Graph,
    GraphError,
    SizeLimitError,
    VertexSequence,
    components,
    is_bipartite,
    is_connected,
)

TOUGHNESS_LIMIT = 20


@dataclass(frozen=True)
class FamilyKWitness:
    """Certificate that ``K_{p,p+1} <= G <= K_p v co-K_{p+1}``."""

    p: int
    a_side: frozenset[int]
    b_side: frozenset[int]

    def problems(self, g: Graph) -> list[str]:
        out = []
        if self.p < 2:
            out.append(f"p must be at least 2, got {self.p}")
        if len(self.a_side) != self.p:
            out.append(f"|A| = {len(self.a_side)} but p = {self.p}")
        if len(self.b_side) != self.p + 1:
            out.append(f"|B| = {len(self.b_side)} but p + 1 = {self.p + 1}")
        if self.a_side & self.b_side or (self.a_side | self.b_side) != set(g.vertices):
            out.append("A and B do not partition V(G)")
            return out
        for b1, b2 in combinations(sorted(self.b_side), 2):
            if g.has_edge(b1, b2):
                out.append(f"B is not independent: {b1}-{b2}")
        for a in sorted(self.a_side):
            missing = self.b_side - g.adj[a]
            if missing:
                out.append(f"{a} in A misses {sorted(missing)} in B")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "a_side": sorted(self.a_side), "b_side": sorted(self.b_side)}


@dataclass(frozen=True)
class ConditionReport:
    n: int
    connected: bool
    two_connected: bool
    max_l_deficit: Optional[int]
    min_common_d2: Optional[int]
    claw_free: bool
    one_tough: Optional[bool]
    family_k: Optional[FamilyKWitness]

    @property
    def ok(self) -> bool:
        """Connected, n >= 3, L_1, and two common neighbours for every distance-2 pair."""
        return (
            self.connected
            and self.n >= 3
            and (self.max_l_deficit is None or self.max_l_deficit <= 1)
            and (self.min_common_d2 is None or self.min_common_d2 >= 2)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "ok": self.ok,
            "connected": self.connected,
            "two_connected": self.two_connected,
            "max_l_deficit": self.max_l_deficit,
            "min_common_d2": self.min_common_d2,
            "claw_free": self.claw_free,
            "one_tough": self.one_tough,
            "family_k": None if self.family_k is None else self.family_k.to_dict(),
        }


def distance2_triples(g: Graph) -> Iterator[tuple[int, int, int]]:
    """All ``(u, v, w)`` with ``u < v`` non-adjacent and ``w`` a common neighbour."""
    for w in range(g.n):
        for u, v in combinations(sorted(g.adj[w]), 2):
            if not g.has_edge(u, v):
                yield u, v, w


def distance2_pairs(g: Graph) -> Iterator[tuple[int, int]]:
    seen = set()
    for u, v, _ in distance2_triples(g):
        if (u, v) not in seen:
            seen.add((u, v))
            yield u, v


def _check_triple(g: Graph, u: int, v: int, w: int) -> None:
    for x in (u, v, w):
        g.check_vertex(x)
    if u == v or g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not a pair at distance 2")
    if not (g.has_edge(u, w) and g.has_edge(v, w)):
        raise GraphError(f"{w} is not a common neighbour of {u} and {v}")


def l_deficit(g: Graph, u: int, v: int, w: int) -> int:
    """``|N(u) | N(v) | N(w)| - d(u) - d(v)`` for a distance-2 triple."""
    _check_triple(g, u, v, w)
    return _deficit(g, u, v, w)


def _deficit(g: Graph, u: int, v: int, w: int) -> int:
    a = g.adj
    return len(a[u] | a[v] | a[w]) - len(a[u]) - len(a[v])


def max_l_deficit(g: Graph) -> Optional[int]:
    return max((_deficit(g, u, v, w) for u, v, w in distance2_triples(g)), default=None)


def is_l_graph(g: Graph, i: int) -> bool:
    worst = max_l_deficit(g)
    return worst is None or worst <= i


def min_common_d2(g: Graph) -> Optional[int]:
    """Fewest common neighbours over pairs at distance 2 (None if there are none)."""
    return min((len(g.adj[u] & g.adj[v]) for u, v in distance2_pairs(g)), default=None)


def is_claw_free(g: Graph) -> bool:
    for c in range(g.n):
        for a, b, d in combinations(sorted(g.adj[c]), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return False
    return True


def _count_components(masks: tuple[int, ...], alive: int) -> int:
    count = 0
    while alive:
        low = alive & -alive
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= masks[b.bit_length() - 1]
                frontier ^= b
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        alive &= ~comp
        count += 1
    return count


def is_one_tough(g: Graph, limit: int = TOUGHNESS_LIMIT) -> bool:
    """True iff ``c(G - S) <= |S|`` for every non-empty proper vertex set S.

    Scans all subsets, so graphs above ``limit`` vertices are refused.
    """
    if g.n > limit:
        raise SizeLimitError("is_one_tough", g.n, limit)
    if g.n == 0 or not is_connected(g):
        return False
    masks = g.masks
    full = (1 << g.n) - 1
    # c(G - S) <= n - |S|, so only |S| < n/2 can violate the bound.
    for size in range(1, (g.n + 1) // 2):
        for s in combinations(range(g.n), size):
            removed = 0
            for v in s:
                removed |= 1 << v
            if _count_components(masks, full & ~removed) > size:
                return False
    return True


def is_two_connected(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return all(len(components(g, removed=(v,))) == 1 for v in range(g.n))


def family_k_witness(g: Graph) -> Optional[FamilyKWitness]:
    """A certificate that ``g`` lies in the exception family K, or None.

    If (A, B) is a witness then every b in B has N(b) = A exactly (B is
    independent and completely joined to A), so trying A = N(v) for every
    vertex v finds a witness whenever one exists.
    """
    n = g.n
    if n < 5 or n % 2 == 0:
        return None
    p = (n - 1) // 2
    tried = set()
    for v in range(n):
        a_side = g.adj[v]
        if len(a_side) != p or a_side in tried:
            continue
        tried.add(a_side)
        w = FamilyKWitness(p, a_side, frozenset(range(n)) - a_side)
        if w.is_valid(g):
            return w
    return None


def remark3_holds(g: Graph) -> bool:
    """Check that the two forms of the L_1 inequality agree on every distance-2 triple.

    ``d(u)+d(v) >= |N(u)|N(v)|N(w)| - 1`` iff ``|N(u)&N(v)| >= |N(w) - (N(u)|N(v))| - 1``.
    """
    a = g.adj
    for u, v, w in distance2_triples(g):
        union_form = len(a[u]) + len(a[v]) >= len(a[u] | a[v] | a[w]) - 1
        common_form = len(a[u] & a[v]) >= len(a[w] - (a[u] | a[v])) - 1
        if union_form != common_form:
            return False
    return True


@lru_cache(maxsize=4096)
def hypotheses_ok(g: Graph) -> bool:
    """Fast form of ``satisfies_hypotheses(g).ok`` (no toughness, no K search)."""
    if g.n < 3 or not is_connected(g):
        return False
    for u, v, w in distance2_triples(g):
        if _deficit(g, u, v, w) > 1 or len(g.adj[u] & g.adj[v]) < 2:
            return False
    return True


def satisfies_hypotheses(g: Graph, toughness_limit: int = 12) -> ConditionReport:
    """Full condition report; toughness is skipped (None) above ``toughness_limit`` vertices."""
    return ConditionReport(
        n=g.n,
        connected=is_connected(g),
        two_connected=is_two_connected(g),
        max_l_deficit=max_l_deficit(g),
        min_common_d2=min_common_d2(g),
        claw_free=is_claw_free(g),
        one_tough=is_one_tough(g, limit=toughness_limit) if g.n <= toughness_limit else None,
        family_k=family_k_witness(g),
    )


# ---------------------------------------------------------------------------
# bipartite L_1-graphs

BIPARTITE_TAGS = (
    "complete_balanced",
    "minus_vertex",
    "minus_edge",
    "minus_perfect_matching",
    "even_cycle",
    "path",
    "not_bipartite_l1",
)


@dataclass(frozen=True)
class BipartiteClass:
    """Result of :func:`classify_bipartite_l1`.

    ``param`` is the n of K_{n,n} for the four dense families and the vertex
    count for cycles and paths. ``witness`` holds what is needed to rebuild the
    graph: the two sides, plus the missing edge or matching, or the cycle/path.
    """

    tag: str
    param: int
    witness: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"tag": self.tag, "param": self.param}
        wit = {}
        for k, val in self.witness.items():
            if isinstance(val, VertexSequence):
                wit[k] = list(val.vertices)
            elif isinstance(val, (frozenset, set)):
                wit[k] = sorted(val)
            elif isinstance(val, tuple) and val and isinstance(val[0], tuple):
                wit[k] = [list(e) for e in val]
            else:
                wit[k] = list(val) if isinstance(val, tuple) else val
        out["witness"] = wit
        return out


class UnclassifiedBipartiteError(RuntimeError):
    """A connected bipartite L_1-graph with maximum degree > 2 matched no known family."""


def _as_cycle(g: Graph) -> VertexSequence:
    order = [0]
    prev, cur = None, 0
    while True:
        nxt = min(w for w in g.adj[cur] if w != prev)
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return VertexSequence.cycle(order)


def _as_path(g: Graph) -> VertexSequence:
    if g.n == 1:
        return VertexSequence.path([0])
    start = min(v for v in range(g.n) if len(g.adj[v]) == 1)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in g.adj[cur] if w != prev]
        if not nxt:
            break
        order.append(nxt[0])
        prev, cur = cur, nxt[0]
    return VertexSequence.path(order)


def classify_bipartite_l1(g: Graph) -> BipartiteClass:
    """Place a connected graph into the bipartite L_1 families.

    Graphs that are not bipartite or not L_1 get ``not_bipartite_l1``. A
    bipartite L_1-graph of maximum degree > 2 outside the four K_{n,n} families
    would contradict the classification and raises UnclassifiedBipartiteError.
    """
    if not is_connected(g):
        raise GraphError("classify_bipartite_l1 needs a connected graph")
    sides = is_bipartite(g)
    if sides is None or not is_l_graph(g, 1):
        return BipartiteClass("not_bipartite_l1", g.n)
    x, y = sorted(sides, key=lambda s: (len(s), min(s, default=g.n)))
    m = g.num_edges()
    if g.max_degree() <= 2:
        if m == g.n:
            return BipartiteClass("even_cycle", g.n, {"cycle": _as_cycle(g)})
        return BipartiteClass("path", g.n, {"path": _as_path(g)})

    wit: dict[str, Any] = {"sides": (tuple(sorted(x)), tuple(sorted(y)))}
    a, b = len(x), len(y)
    if a == b and m == a * b:
        return BipartiteClass("complete_balanced", a, wit)
    if b == a + 1 and m == a * b:
        return BipartiteClass("minus_vertex", b, wit)
    missing = tuple((u, v) for u in sorted(x) for v in sorted(y) if not g.has_edge(u, v))
    if a == b and len(missing) == 1:
        return BipartiteClass("minus_edge", a, {**wit, "missing_edge": missing[0]})
    if a == b and len(missing) == a and len({v for _, v in missing}) == a and len({u for u, _ in missing}) == a:
        return BipartiteClass("minus_perfect_matching", a, {**wit, "missing_matching": missing})
    raise UnclassifiedBipartiteError(
        f"bipartite L_1-graph with sides {a}, {b}, {m} edges and max degree "
        f"{g.max_degree()} fits none of the K_(n,n) families"
    )


def rebuild_bipartite_class(cls: BipartiteClass) -> Graph:
    """Reconstruct the graph described by a classification witness."""
    if cls.tag in ("even_cycle", "path"):
        seq = cls.witness["cycle" if cls.tag == "even_cycle" else "path"]
        return Graph(cls.param, seq.edge_list())
    x, y = cls.witness["sides"]
    missing: set[frozenset[int]] = set()
    if cls.tag == "minus_edge":
        missing = {frozenset(cls.witness["missing_edge"])}
    elif cls.tag == "minus_perfect_matching":
        missing = {frozenset(e) for e in cls.witness["missing_matching"]}
    edges = [(u, v) for u in x for v in y if frozenset((u, v)) not in missing]
    return Graph(len(x) + len(y), edges)


def validate_bipartite_class(g: Graph, cls: BipartiteClass) -> list[str]:
    """Problems with ``cls`` as a description of ``g`` (empty list when it checks out)."""
    out = []
    if cls.tag == "not_bipartite_l1":
        if is_bipartite(g) is not None and is_l_graph(g, 1):
            out.append("graph is a bipartite L_1-graph")
        return out
    if rebuild_bipartite_class(cls) != g:
        out.append("witness does not rebuild the graph")
    if cls.tag in ("complete_balanced", "minus_edge", "minus_perfect_matching"):
        x, y = cls.witness["sides"]
        if not len(x) == len(y) == cls.param:
            out.append("sides are not both of size param")
        if cls.tag == "minus_perfect_matching":
            ms = cls.witness["missing_matching"]
            if len({u for u, _ in ms}) != cls.param or len({v for _, v in ms}) != cls.param:
                out.append("missing edges are not a perfect matching")
    elif cls.tag == "minus_vertex":
        x, y = cls.witness["sides"]
        if not (len(y) == cls.param and len(x) == cls.param - 1):
            out.append("sides are not of sizes param-1 and param")
    elif cls.tag == "even_cycle" and cls.param % 2:
        out.append("odd cycle")
    return out
