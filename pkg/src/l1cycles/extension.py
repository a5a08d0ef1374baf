"""Certified extension of cycles and paths by one or two vertices.

Given a non-spanning cycle ``C`` in a graph meeting the hypotheses (connected,
L_1, and every pair at distance two has at least two common neighbours), a
cycle on ``V(C)`` plus one or two more vertices always exists unless
``|C| = n - 1`` and the graph lies in the exception family K. The same holds
for x-y paths whose ends have no common neighbour.

The search first tries the cheap insertion patterns around an anchor vertex
``v`` outside the cycle, then falls back to an exhaustive Hamilton-cycle
search on ``V(C) | X`` for every admissible one- or two-vertex set ``X``.
Every returned sequence is re-validated against the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Iterator, Optional

from .conditions import FamilyKWitness, family_k_witness, hypotheses_ok
from .graph import Graph, GraphError, VertexSequence, bfs_distances

EXTENDED = "extended"
EXCEPTION_FAMILY = "exception_family"
NOT_APPLICABLE = "not_applicable"


class HypothesisError(GraphError):
    """The graph does not meet the extension hypotheses."""


class CommonNeighborError(GraphError):
    """The path ends share a neighbour, so path extension is not guaranteed."""

    def __init__(self, x: int, y: int, common: int):
        super().__init__(f"endpoints {x} and {y} have the common neighbour {common}")
        self.common = common


class ExceptionFamilyError(GraphError):
    """The request cannot be met because the graph lies in the exception family."""

    def __init__(self, message: str, witness: FamilyKWitness):
        super().__init__(message)
        self.witness = witness


class InvariantViolation(RuntimeError):
    """No extension was found where one must exist: a bug, not a property of the input."""


@dataclass(frozen=True)
class ExtensionTrace:
    anchor_vertex: Optional[int]
    w_set: tuple[int, ...]
    w_plus: tuple[int, ...]
    pattern_used: str
    t: Optional[int] = None
    audit_confirmed: Optional[bool] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "anchor_vertex": self.anchor_vertex,
            "w_set": list(self.w_set),
            "w_plus": list(self.w_plus),
            "pattern_used": self.pattern_used,
            "t": self.t,
            "audit_confirmed": self.audit_confirmed,
        }


@dataclass(frozen=True)
class ExtensionResult:
    """Outcome of one extension step, or of an iterated build.

    For the iterated builders ``history`` lists every intermediate sequence
    (seed first) and ``ell``/``inserted``/``trace`` describe the last step.
    """

    outcome: str
    old_sequence: Optional[VertexSequence]
    new_sequence: Optional[VertexSequence] = None
    ell: Optional[int] = None
    inserted: frozenset[int] = frozenset()
    witness: Optional[FamilyKWitness] = None
    trace: ExtensionTrace = ExtensionTrace(None, (), (), "none")
    history: tuple[VertexSequence, ...] = field(default=())

    def problems(self, g: Graph) -> list[str]:
        """Re-check the result's invariants against ``g``."""
        out = []
        if self.outcome == EXTENDED:
            new = self.new_sequence
            if new is None:
                return ["extended result without a sequence"]
            out += new.problems(g)
            old = self.old_sequence
            if old is not None and not self.history:
                if new.closed != old.closed:
                    out.append("sequence kind changed")
                if not old.vertex_set() < new.vertex_set():
                    out.append("old vertices are not a proper subset of the new ones")
                if self.ell not in (1, 2) or len(new) - len(old) != self.ell:
                    out.append(f"ell={self.ell} but the length grew by {len(new) - len(old)}")
                if self.inserted != new.vertex_set() - old.vertex_set():
                    out.append("inserted set is not the difference of the vertex sets")
                if not new.closed and (new.vertices[0], new.vertices[-1]) != (old.vertices[0], old.vertices[-1]):
                    out.append("path endpoints changed")
            for a, b in zip(self.history, self.history[1:]):
                if not a.vertex_set() < b.vertex_set() or not 1 <= len(b) - len(a) <= 2:
                    out.append(f"history step {len(a)} -> {len(b)} is not an extension by 1 or 2")
            for seq in self.history:
                out += seq.problems(g)
        elif self.outcome == EXCEPTION_FAMILY:
            if self.witness is None:
                return ["exception verdict without a witness"]
            out += self.witness.problems(g)
            seq = self.new_sequence or self.old_sequence
            if seq is None or len(seq) != g.n - 1:
                out.append("exception verdict on a sequence that does not miss exactly one vertex")
        return out

    def to_dict(self) -> dict[str, Any]:
        seq = lambda s: None if s is None else list(s.vertices)  # noqa: E731
        return {
            "outcome": self.outcome,
            "old_sequence": seq(self.old_sequence),
            "new_sequence": seq(self.new_sequence),
            "closed": None if self.old_sequence is None else self.old_sequence.closed,
            "ell": self.ell,
            "inserted": sorted(self.inserted),
            "witness": None if self.witness is None else self.witness.to_dict(),
            "trace": self.trace.to_dict(),
            "history": [list(s.vertices) for s in self.history],
        }


# ---------------------------------------------------------------------------
# helpers


def _require_hypotheses(g: Graph) -> None:
    if not hypotheses_ok(g):
        raise HypothesisError(
            "graph must be connected, have at least 3 vertices, be an L_1-graph and give every "
            "pair at distance 2 at least two common neighbours"
        )


def _pick_anchor(g: Graph, on: frozenset[int], candidates: Optional[Iterable[int]] = None) -> Optional[int]:
    """Outside vertex with the most neighbours in ``on``; ties go to the lowest index."""
    pool = range(g.n) if candidates is None else candidates
    best, best_count = None, 0
    for v in sorted(pool):
        if v in on:
            continue
        k = len(g.adj[v] & on)
        if k > best_count:
            best, best_count = v, k
    return best


def _w_sets(g: Graph, seq: list[int], v: int, closed: bool) -> tuple[tuple[int, ...], tuple[int, ...]]:
    w = tuple(x for x in seq if x in g.adj[v])
    L = len(seq)
    pos = {x: i for i, x in enumerate(seq)}
    plus = []
    for x in w:
        j = pos[x] + 1
        if j < L:
            plus.append(seq[j])
        elif closed:
            plus.append(seq[0])
    return w, tuple(plus)


def _hamilton_cycle(g: Graph, verts: frozenset[int]) -> Optional[list[int]]:
    """Backtracking Hamilton-cycle search in the subgraph induced by ``verts``."""
    k = len(verts)
    if k < 3:
        return None
    adj = {v: g.adj[v] & verts for v in verts}
    if any(len(nb) < 2 for nb in adj.values()):
        return None
    start = min(verts, key=lambda v: (len(adj[v]), v))
    path = [start]
    used = {start}

    def dfs(cur: int) -> bool:
        if len(path) == k:
            return start in adj[cur]
        for w in sorted(adj[cur] - used, key=lambda u: len(adj[u] - used)):
            used.add(w)
            path.append(w)
            if _feasible(adj, used, start, w) and dfs(w):
                return True
            path.pop()
            used.discard(w)
        return False

    return path if dfs(start) else None


def _feasible(adj: dict[int, frozenset[int]], used: set[int], start: int, cur: int) -> bool:
    # each unvisited vertex needs two usable neighbours among unvisited | {cur, start}
    ends = {cur, start}
    for u, nb in adj.items():
        if u in used:
            continue
        free = sum(1 for w in nb if w not in used or w in ends)
        if free < 2:
            return False
    return True


def _hamilton_path(g: Graph, verts: frozenset[int], x: int, y: int) -> Optional[list[int]]:
    """Backtracking Hamilton x-y path search in the subgraph induced by ``verts``."""
    k = len(verts)
    adj = {v: g.adj[v] & verts for v in verts}
    if any(len(nb) < (1 if v in (x, y) else 2) for v, nb in adj.items()):
        return None
    path = [x]
    used = {x}

    def dfs(cur: int) -> bool:
        if len(path) == k:
            return cur == y
        for w in sorted(adj[cur] - used, key=lambda u: len(adj[u] - used)):
            if w == y and len(path) + 1 != k:
                continue
            used.add(w)
            path.append(w)
            if dfs(w):
                return True
            path.pop()
            used.discard(w)
        return False

    return path if dfs(x) else None


def _outside_sets(g: Graph, on: frozenset[int], must_hit: Optional[frozenset[int]]) -> Iterator[frozenset[int]]:
    """Candidate sets X of one, then two, outside vertices that could join a longer sequence."""
    touching = [v for v in range(g.n) if v not in on and g.adj[v] & on]
    for v in touching:
        if len(g.adj[v] & on) >= 2 and (must_hit is None or v in must_hit):
            yield frozenset((v,))
    seen = set()
    for v in touching:
        for u in sorted(g.adj[v]):
            if u in on or u == v:
                continue
            pair = frozenset((u, v))
            if pair in seen:
                continue
            seen.add(pair)
            if must_hit is not None and not pair & must_hit:
                continue
            if all(len(g.adj[z] & (on | pair)) >= 2 for z in pair):
                yield pair
    for u, v in combinations(touching, 2):
        pair = frozenset((u, v))
        if pair in seen or g.has_edge(u, v):
            continue
        # non-adjacent pair: each needs two neighbours on the sequence
        if must_hit is not None and not pair & must_hit:
            continue
        if len(g.adj[u] & on) >= 2 and len(g.adj[v] & on) >= 2:
            yield pair


# ---------------------------------------------------------------------------
# cycle patterns


def _rot(c: list[int], i: int) -> list[int]:
    return c[i:] + c[:i]


def _cycle_patterns(g: Graph, c: list[int], v: int) -> Iterator[tuple[str, list[int]]]:
    """Candidate longer cycles built around the anchor ``v`` for one orientation of ``c``.

    Each candidate still has to be validated by the caller.
    """
    L = len(c)
    on = set(c)
    adj = g.adj
    W = [i for i in range(L) if c[i] in adj[v]]
    at = lambda i: c[i % L]  # noqa: E731
    outside_nv = sorted(u for u in adj[v] if u not in on)

    # v joins two consecutive cycle vertices
    for i in W:
        if at(i + 1) in adj[v]:
            yield "single_insertion", _rot(c, i + 1) + [v]
    # w_i v w_j <-C w_i^+ w_j^+ ->C w_i, closed by the chord w_i^+ w_j^+
    for i in W:
        for j in W:
            if i != j and at(j + 1) in adj[at(i + 1)]:
                back = [at(j - k) for k in range((j - i) % L)]
                fwd = [at(j + 1 + k) for k in range((i - j - 1) % L)]
                yield "chord_reroute", [at(i), v] + back + fwd
    # w_i v u w_i^+ for an outside common neighbour u of v and w_i^+
    for i in W:
        for u in outside_nv:
            if at(i + 1) in adj[u]:
                yield "double_insertion", _rot(c, i + 1) + [v, u]
    # chord under w_j: w_j^- w_j^+ w_j v w_j'... when v also sees w_j^{++}
    for j in W:
        if at(j + 1) in adj[at(j - 1)] and at(j + 2) in adj[v]:
            rest = [at(j + 2 + k) for k in range(L - 3)]
            yield "under_chord", [at(j - 1), at(j + 1), at(j), v] + rest
    # w_i v w_j w_i^+ ->C w_j^- w_j^+ ->C w_i
    for i in W:
        for j in W:
            if i != j and at(i + 1) in adj[at(j)] and at(j + 1) in adj[at(j - 1)]:
                mid = [at(i + 1 + k) for k in range((j - i - 1) % L)]
                tail = [at(j + 1 + k) for k in range((i - j - 1) % L)]
                yield "under_chord_pair", [at(i), v, at(j)] + mid + tail
    # w_i v w_{i+1} w_i^+ u w_{i+1}^+ ->C w_i with w_i^+ = w_{i+1}^-
    for i in W:
        if at(i + 2) in adj[v] and L >= 4:
            for u in sorted(adj[at(i + 1)] & adj[at(i + 3)]):
                if u not in on and u != v:
                    rest = [at(i + 3 + k) for k in range(L - 3)]
                    yield "two_outside", [at(i), v, at(i + 2), at(i + 1), u] + rest


def _accept(g: Graph, old: VertexSequence, cand: list[int]) -> Optional[VertexSequence]:
    new = VertexSequence(tuple(cand), old.closed)
    if len(cand) - len(old) not in (1, 2) or not old.vertex_set() < new.vertex_set():
        return None
    if not old.closed and (cand[0], cand[-1]) != (old.vertices[0], old.vertices[-1]):
        return None
    return new if new.is_valid(g) else None


def _extended(old: VertexSequence, new: VertexSequence, trace: ExtensionTrace) -> ExtensionResult:
    return ExtensionResult(
        outcome=EXTENDED,
        old_sequence=old,
        new_sequence=new,
        ell=len(new) - len(old),
        inserted=new.vertex_set() - old.vertex_set(),
        trace=trace,
    )


def _exhaustive_cycle(g: Graph, c: VertexSequence, must_hit: Optional[frozenset[int]] = None) -> Optional[VertexSequence]:
    on = c.vertex_set()
    for xs in _outside_sets(g, on, must_hit):
        found = _hamilton_cycle(g, on | xs)
        if found is not None:
            return VertexSequence.cycle(found)
    return None


def _extend_cycle(
    g: Graph,
    c: VertexSequence,
    anchor: Optional[int] = None,
    must_hit: Optional[frozenset[int]] = None,
    audit: bool = False,
) -> ExtensionResult:
    on = c.vertex_set()
    v = anchor if anchor is not None else _pick_anchor(g, on)
    if v is None or v in on or not g.adj[v] & on:
        raise GraphError(f"anchor {v} is not an outside vertex with a neighbour on the cycle")
    w_set, w_plus = _w_sets(g, list(c.vertices), v, True)
    for orient in (list(c.vertices), list(c.vertices[::-1])):
        for name, cand in _cycle_patterns(g, orient, v):
            new = _accept(g, c, cand)
            if new is None or (must_hit is not None and not (new.vertex_set() - on) & must_hit):
                continue
            confirmed = None
            if audit:
                confirmed = _exhaustive_cycle(g, c, must_hit) is not None
            return _extended(c, new, ExtensionTrace(v, w_set, w_plus, name, audit_confirmed=confirmed))
    new = _exhaustive_cycle(g, c, must_hit)
    if new is not None:
        return _extended(c, new, ExtensionTrace(v, w_set, w_plus, "exhaustive"))
    trace = ExtensionTrace(v, w_set, w_plus, "exhaustive")
    if len(c) == g.n - 1 and must_hit is None:
        witness = family_k_witness(g)
        if witness is not None:
            return ExtensionResult(EXCEPTION_FAMILY, c, witness=witness, trace=trace)
    if must_hit is not None:
        return ExtensionResult(NOT_APPLICABLE, c, trace=trace)
    raise InvariantViolation(
        f"no cycle extends {list(c.vertices)} by one or two vertices although the hypotheses hold"
    )


def extend_cycle(g: Graph, c: VertexSequence, anchor: Optional[int] = None, audit: bool = False) -> ExtensionResult:
    """Extend a non-spanning cycle by one or two vertices.

    Returns an ``extended`` result, an ``exception_family`` verdict (only for
    ``|c| = n - 1`` in the family K), or ``not_applicable`` when ``c`` already
    spans the graph. ``anchor`` fixes the outside vertex the patterns are built
    around; ``audit`` additionally runs the exhaustive search whenever a
    pattern fires and records whether it agreed.
    """
    _require_hypotheses(g)
    if not c.closed:
        raise GraphError("extend_cycle needs a closed sequence")
    c.validate(g)
    if len(c) == g.n:
        return ExtensionResult(NOT_APPLICABLE, c)
    return _extend_cycle(g, c, anchor=anchor, audit=audit)


# ---------------------------------------------------------------------------
# paths


def _path_patterns(g: Graph, p: list[int], v: int) -> Iterator[tuple[str, list[int]]]:
    L = len(p)
    on = set(p)
    adj = g.adj
    W = [i for i in range(L) if p[i] in adj[v]]
    outside_nv = sorted(u for u in adj[v] if u not in on)

    for i in W:
        if i + 1 < L and p[i + 1] in adj[v]:
            yield "single_insertion", p[: i + 1] + [v] + p[i + 1:]
    for i in W:
        for j in W:
            if i < j < L - 1 and p[j + 1] in adj[p[i + 1]]:
                yield "chord_reroute", p[: i + 1] + [v] + p[i + 1: j + 1][::-1] + p[j + 1:]
    for i in W:
        if i + 1 < L:
            for u in outside_nv:
                if p[i + 1] in adj[u]:
                    yield "double_insertion", p[: i + 1] + [v, u] + p[i + 1:]
    for i in W:
        for j in W:
            if i < j < L - 1 and p[j] in adj[p[i + 1]] and j - 1 > i and p[j + 1] in adj[p[j - 1]]:
                # x ->P w_i v w_j w_i^+ ->P w_j^- w_j^+ ->P y
                yield "under_chord_pair", p[: i + 1] + [v, p[j]] + p[i + 1: j] + p[j + 1:]
            if 0 < j < i < L - 1 and p[j + 1] in adj[p[j - 1]] and p[i + 1] in adj[p[j]]:
                # x ->P w_j^- w_j^+ ->P w_i v w_j w_i^+ ->P y
                yield "under_chord_pair", p[:j] + p[j + 1: i + 1] + [v, p[j]] + p[i + 1:]
    for i in W:
        if i + 3 < L and p[i + 2] in adj[v]:
            for u in sorted(adj[p[i + 1]] & adj[p[i + 3]]):
                if u not in on and u != v:
                    yield "two_outside", p[: i + 1] + [v, p[i + 2], p[i + 1], u] + p[i + 3:]


def _exhaustive_path(g: Graph, p: VertexSequence) -> Optional[VertexSequence]:
    on = p.vertex_set()
    x, y = p.vertices[0], p.vertices[-1]
    for xs in _outside_sets(g, on, None):
        found = _hamilton_path(g, on | xs, x, y)
        if found is not None:
            return VertexSequence.path(found)
    return None


def _check_ends(g: Graph, p: VertexSequence) -> tuple[int, int]:
    if p.closed:
        raise GraphError("extend_path needs an open sequence")
    p.validate(g)
    if len(p) < 2:
        raise GraphError("a path with distinct ends needs at least 2 vertices")
    x, y = p.vertices[0], p.vertices[-1]
    common = g.adj[x] & g.adj[y]
    if common:
        raise CommonNeighborError(x, y, min(common))
    return x, y


def _extend_path(g: Graph, p: VertexSequence, audit: bool = False) -> ExtensionResult:
    x, y = p.vertices[0], p.vertices[-1]
    on = p.vertex_set()
    v = _pick_anchor(g, on)
    w_set, w_plus = _w_sets(g, list(p.vertices), v, False)
    t = len(g.adj[w_plus[0]] & set(w_set)) if w_plus else None
    for orient, flip in ((list(p.vertices), False), (list(p.vertices[::-1]), True)):
        for name, cand in _path_patterns(g, orient, v):
            cand = cand[::-1] if flip else cand
            new = _accept(g, p, cand)
            if new is None:
                continue
            confirmed = _exhaustive_path(g, p) is not None if audit else None
            return _extended(p, new, ExtensionTrace(v, w_set, w_plus, name, t, confirmed))
    trace = ExtensionTrace(v, w_set, w_plus, "exhaustive", t)
    new = _exhaustive_path(g, p)
    if new is not None:
        return _extended(p, new, trace)
    if g.has_edge(x, y) and len(p) == g.n - 1:
        witness = family_k_witness(g)
        if witness is not None:
            return ExtensionResult(EXCEPTION_FAMILY, p, witness=witness, trace=trace)
    raise InvariantViolation(
        f"no x-y path extends {list(p.vertices)} by one or two vertices although the hypotheses hold"
    )


def extend_path(g: Graph, p: VertexSequence, audit: bool = False) -> ExtensionResult:
    """Extend a non-spanning x-y path (ends without common neighbours) by one or two vertices.

    The ends stay fixed. ``exception_family`` is returned only for adjacent ends,
    ``|p| = n - 1`` and a graph in the family K.
    """
    _require_hypotheses(g)
    _check_ends(g, p)
    if len(p) == g.n:
        return ExtensionResult(NOT_APPLICABLE, p)
    return _extend_path(g, p, audit=audit)


# ---------------------------------------------------------------------------
# iterated construction


def seed_cycle_through(g: Graph, x: int) -> VertexSequence:
    """A triangle through ``x`` if there is one, otherwise a 4-cycle through ``x``."""
    _require_hypotheses(g)
    g.check_vertex(x)
    nbrs = sorted(g.adj[x])
    for a, b in combinations(nbrs, 2):
        if g.has_edge(a, b):
            return VertexSequence.cycle((x, a, b))
    for w in nbrs:
        others = sorted(g.adj[w] - {x})
        if others:
            z = others[0]
            # no triangle on x, so d(x, z) = 2 and a second common neighbour exists
            w2 = min(g.adj[x] & g.adj[z] - {w})
            return VertexSequence.cycle((x, w, z, w2))
    raise InvariantViolation(f"no short cycle through {x} although the hypotheses hold")


def build_hamiltonian(g: Graph, x: int = 0) -> ExtensionResult:
    """Grow a short cycle through ``x`` into a Hamilton cycle, one extension at a time.

    In the family K the chain stops at an (n-1)-cycle with an exception verdict.
    """
    seq = seed_cycle_through(g, x)
    history = [seq]
    last: Optional[ExtensionResult] = None
    for _ in range(g.n):
        if len(seq) == g.n:
            break
        step = _extend_cycle(g, seq)
        if step.outcome != EXTENDED:
            return ExtensionResult(
                step.outcome, seq, seq, witness=step.witness, trace=step.trace, history=tuple(history)
            )
        seq = step.new_sequence
        history.append(seq)
        last = step
    if len(seq) != g.n:
        raise InvariantViolation("cycle growth did not reach a Hamilton cycle within n steps")
    return ExtensionResult(
        EXTENDED,
        history[0],
        seq,
        ell=None if last is None else last.ell,
        inserted=frozenset() if last is None else last.inserted,
        trace=ExtensionTrace(None, (), (), "none") if last is None else last.trace,
        history=tuple(history),
    )


def shortest_path(g: Graph, x: int, y: int) -> Optional[VertexSequence]:
    g.check_vertex(y)
    dist = bfs_distances(g, y)
    if dist[x] is None:
        return None
    path = [x]
    while path[-1] != y:
        cur = path[-1]
        path.append(min(w for w in g.adj[cur] if dist[w] == dist[cur] - 1))
    return VertexSequence.path(path)


def build_spanning_path(g: Graph, x: int, y: int) -> ExtensionResult:
    """Grow a shortest x-y path into a Hamilton x-y path (or an (n-1)-vertex one in K)."""
    _require_hypotheses(g)
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise GraphError("build_spanning_path needs distinct ends")
    seq = shortest_path(g, x, y)
    if seq is None:
        raise GraphError(f"no path between {x} and {y}")
    _check_ends(g, seq)
    history = [seq]
    last: Optional[ExtensionResult] = None
    for _ in range(g.n):
        if len(seq) == g.n:
            break
        step = _extend_path(g, seq)
        if step.outcome != EXTENDED:
            return ExtensionResult(
                step.outcome, seq, seq, witness=step.witness, trace=step.trace, history=tuple(history)
            )
        seq = step.new_sequence
        history.append(seq)
        last = step
    return ExtensionResult(
        EXTENDED,
        history[0],
        seq,
        ell=None if last is None else last.ell,
        inserted=frozenset() if last is None else last.inserted,
        trace=ExtensionTrace(None, (), (), "none") if last is None else last.trace,
        history=tuple(history),
    )


def _family_k_cycle(witness: FamilyKWitness, s: frozenset[int]) -> Optional[VertexSequence]:
    """In K, a cycle alternates A and B, so it can cover s iff s misses some vertex of B."""
    free_b = sorted(witness.b_side - s)
    if not free_b:
        return None
    a_side = sorted(witness.a_side)
    b_side = sorted(witness.b_side & s) + free_b
    order = []
    for a, b in zip(a_side, b_side[: len(a_side)]):
        order += [a, b]
    return VertexSequence.cycle(order)


def cycle_through_set(g: Graph, s: Iterable[int]) -> VertexSequence:
    """A cycle containing every vertex of ``s``.

    Grows a cycle through the lowest vertex ``a`` of ``s``; each step extends it
    at a vertex of the ball around ``a`` that already holds ``s``, and must add
    a vertex of the ball three steps wider.
    """
    _require_hypotheses(g)
    targets = frozenset(s)
    if not targets:
        raise GraphError("cycle_through_set needs a non-empty vertex set")
    for v in targets:
        g.check_vertex(v)
    witness = family_k_witness(g)
    if witness is not None:
        found = _family_k_cycle(witness, targets)
        if found is None:
            raise ExceptionFamilyError(
                f"{sorted(targets)} contains the whole independent side of a K_(p,p+1) sandwich; "
                "no cycle passes through all of it",
                witness,
            )
        return found
    a = min(targets)
    dist = bfs_distances(g, a)
    r = max(dist[v] for v in targets)
    inner = frozenset(v for v, d in enumerate(dist) if d is not None and d <= r)
    outer = frozenset(v for v, d in enumerate(dist) if d is not None and d <= r + 3)
    cycle = seed_cycle_through(g, a)
    for _ in range(g.n):
        on = cycle.vertex_set()
        if targets <= on:
            return cycle
        step = None
        order = sorted((v for v in inner - on if g.adj[v] & on), key=lambda v: (-len(g.adj[v] & on), v))
        for v in order:
            res = _extend_cycle(g, cycle, anchor=v, must_hit=outer)
            if res.outcome == EXTENDED:
                step = res
                break
        if step is None:
            raise InvariantViolation(
                f"cycle {list(cycle.vertices)} cannot gain a vertex near {a} although the hypotheses hold"
            )
        cycle = step.new_sequence
    if targets <= cycle.vertex_set():
        return cycle
    raise InvariantViolation("cycle growth stalled before covering the target set")
