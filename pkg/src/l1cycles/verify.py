"""Corpus-wide property checks pitting the constructive code against the oracle.

Each ``check_*`` function returns ``(checked, violations)``: how many instances
were examined and a human-readable line per failure. An empty violation list
means the property held on every instance.
"""

from __future__ import annotations

import random
from itertools import combinations, islice
from typing import Callable, Iterable, Optional

from . import oracle
from .conditions import (
    classify_bipartite_l1,
    distance2_pairs,
    family_k_witness,
    is_claw_free,
    is_l_graph,
    is_one_tough,
    is_two_connected,
    l_deficit,
    distance2_triples,
    min_common_d2,
    remark3_holds,
    validate_bipartite_class,
)
from .extension import (
    EXCEPTION_FAMILY,
    EXTENDED,
    build_hamiltonian,
    cycle_through_set,
    extend_cycle,
    extend_path,
)
from .generators import corpus, general_corpus, iter_connected_bipartite
from .graph import Graph, bfs_distances, is_connected, to_graph6

Named = list[tuple[str, Graph]]
Outcome = tuple[int, list[str]]

CYCLE_BUDGET = 20000


def _label(name: str, g: Graph) -> str:
    return f"{name} [{to_graph6(g)}]"


def extension_corpus(max_n: int = 12, budget: int = CYCLE_BUDGET) -> Named:
    """Corpus graphs outside K whose cycles number at most ``budget``."""
    out = []
    for name, g in corpus(max_n=max_n):
        if family_k_witness(g) is not None:
            continue
        if sum(1 for _ in islice(oracle.iter_cycles(g), budget + 1)) <= budget:
            out.append((name, g))
    return out


def check_cycle_extension(graphs: Named, audit: bool = False) -> Outcome:
    """Every non-spanning cycle of every graph extends by one or two vertices."""
    checked, bad = 0, []
    for name, g in graphs:
        for c in oracle.iter_cycles(g):
            if len(c) == g.n:
                continue
            checked += 1
            try:
                res = extend_cycle(g, c, audit=audit)
            except Exception as exc:  # noqa: BLE001 - any failure is a violation
                bad.append(f"{_label(name, g)} cycle {list(c)}: {type(exc).__name__}: {exc}")
                continue
            probs = res.problems(g)
            if res.outcome != EXTENDED or probs:
                bad.append(f"{_label(name, g)} cycle {list(c)}: {res.outcome} {probs}")
            elif audit and res.trace.audit_confirmed is False:
                bad.append(f"{_label(name, g)} cycle {list(c)}: exhaustive search disagrees with pattern")
    return checked, bad


def check_exception_tightness(graphs: Iterable[Graph]) -> Outcome:
    """In K: (n-1)-cycles give the exception verdict, shorter ones extend, Hamilton build stops."""
    checked, bad = 0, []
    for g in graphs:
        label = to_graph6(g)
        if family_k_witness(g) is None:
            bad.append(f"{label}: not recognised as a member of K")
            continue
        if is_one_tough(g):
            bad.append(f"{label}: 1-tough")
        for c in oracle.iter_cycles(g):
            checked += 1
            res = extend_cycle(g, c)
            want = EXCEPTION_FAMILY if len(c) == g.n - 1 else EXTENDED
            if res.outcome != want or res.problems(g):
                bad.append(f"{label} cycle {list(c)}: got {res.outcome}, want {want}")
        ham = build_hamiltonian(g)
        checked += 1
        if ham.outcome != EXCEPTION_FAMILY or ham.problems(g):
            bad.append(f"{label}: build_hamiltonian gave {ham.outcome}")
    return checked, bad


def no_common_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(x, y) for x, y in combinations(range(g.n), 2) if not g.adj[x] & g.adj[y]]


def check_path_extension(graphs: Named) -> Outcome:
    """Every non-spanning x-y path with N(x) & N(y) empty extends, bar the documented exception."""
    checked, bad = 0, []
    for name, g in graphs:
        for x, y in no_common_pairs(g):
            for p in oracle.iter_paths(g, x, y):
                if len(p) == g.n:
                    continue
                checked += 1
                try:
                    res = extend_path(g, p)
                except Exception as exc:  # noqa: BLE001
                    bad.append(f"{_label(name, g)} path {list(p)}: {type(exc).__name__}: {exc}")
                    continue
                if res.problems(g):
                    bad.append(f"{_label(name, g)} path {list(p)}: {res.problems(g)}")
                elif res.outcome == EXCEPTION_FAMILY:
                    if not (g.has_edge(x, y) and len(p) == g.n - 1):
                        bad.append(f"{_label(name, g)} path {list(p)}: exception outside the allowed case")
                elif res.outcome != EXTENDED:
                    bad.append(f"{_label(name, g)} path {list(p)}: {res.outcome}")
    return checked, bad


def check_cycle_coverage(graphs: Named) -> Outcome:
    """Each vertex lies on a cycle of length m or m-1 for every m in 4..n (graphs outside K)."""
    checked, bad = 0, []
    for name, g in graphs:
        if family_k_witness(g) is not None:
            continue
        spectrum = oracle.cycle_spectrum(g)
        for x in range(g.n):
            for m in range(4, g.n + 1):
                checked += 1
                if not {m, m - 1} & spectrum.per_vertex[x]:
                    bad.append(f"{_label(name, g)}: vertex {x} has no cycle of length {m} or {m - 1}")
    return checked, bad


def check_path_coverage(graphs: Named) -> Outcome:
    """x-y paths with m or m-1 vertices for every m in d(x,y)+1..n, ends without common neighbours."""
    checked, bad = 0, []
    for name, g in graphs:
        if family_k_witness(g) is not None:
            continue
        for x, y in no_common_pairs(g):
            counts = oracle.path_vertex_counts(g, x, y)
            d = bfs_distances(g, x)[y]
            for m in range(d + 1, g.n + 1):
                checked += 1
                if not {m, m - 1} & counts:
                    bad.append(f"{_label(name, g)}: no {x}-{y} path with {m} or {m - 1} vertices")
    return checked, bad


def check_hamilton_agreement(graphs: Named) -> Outcome:
    """The oracle finds a Hamilton cycle exactly when the iterated extension does."""
    checked, bad = 0, []
    for name, g in graphs:
        checked += 1
        res = build_hamiltonian(g)
        found = oracle.is_hamiltonian_oracle(g) is not None
        if found != (res.outcome == EXTENDED) or res.problems(g):
            bad.append(f"{_label(name, g)}: oracle {found}, builder {res.outcome}")
    return checked, bad


def check_cycle_through_sets(graphs: Named, instances: int = 100, seed: int = 11) -> Outcome:
    rng = random.Random(seed)
    pool = [(name, g) for name, g in graphs if family_k_witness(g) is None]
    checked, bad = 0, []
    for _ in range(instances):
        name, g = rng.choice(pool)
        s = frozenset(rng.sample(range(g.n), rng.randint(1, g.n)))
        checked += 1
        try:
            c = cycle_through_set(g, s)
        except Exception as exc:  # noqa: BLE001
            bad.append(f"{_label(name, g)} S={sorted(s)}: {type(exc).__name__}: {exc}")
            continue
        if not c.is_valid(g) or not s <= c.vertex_set():
            bad.append(f"{_label(name, g)} S={sorted(s)}: returned {list(c)}")
    return checked, bad


def check_bipartite_scan(max_n: int = 8) -> tuple[int, list[str], dict[str, int]]:
    """Classify every connected bipartite L_1-graph up to ``max_n`` vertices.

    Also checks adjacent degrees differ by at most one, and in k-regular ones
    pairs at distance two share at least k - 1 neighbours.
    """
    checked, bad = 0, []
    tags: dict[str, int] = {}
    for g in iter_connected_bipartite(max_n):
        if not is_l_graph(g, 1):
            continue
        checked += 1
        label = to_graph6(g)
        for u, v in g.edges():
            if abs(len(g.adj[u]) - len(g.adj[v])) > 1:
                bad.append(f"{label}: adjacent {u},{v} with degrees {len(g.adj[u])},{len(g.adj[v])}")
        degrees = {len(nb) for nb in g.adj}
        if len(degrees) == 1:
            k = degrees.pop()
            for u, v in distance2_pairs(g):
                if len(g.adj[u] & g.adj[v]) < k - 1:
                    bad.append(f"{label}: {k}-regular but {u},{v} share fewer than {k - 1} neighbours")
        try:
            cls = classify_bipartite_l1(g)
        except Exception as exc:  # noqa: BLE001
            bad.append(f"{label}: {type(exc).__name__}: {exc}")
            continue
        tags[cls.tag] = tags.get(cls.tag, 0) + 1
        if g.max_degree() > 2 and cls.tag not in (
            "complete_balanced", "minus_vertex", "minus_edge", "minus_perfect_matching"
        ):
            bad.append(f"{label}: max degree {g.max_degree()} but classified {cls.tag}")
        probs = validate_bipartite_class(g, cls)
        if probs:
            bad.append(f"{label}: {cls.tag} witness fails: {probs}")
    return checked, bad, tags


def _implication(graphs: Iterable[Graph], premise: Callable[[Graph], bool], conclusion: Callable[[Graph], bool], what: str) -> Outcome:
    checked, bad = 0, []
    for g in graphs:
        if premise(g):
            checked += 1
            if not conclusion(g):
                bad.append(f"{to_graph6(g)}: {what}")
    return checked, bad


def check_identities(graphs: list[Graph], remark_graphs: Optional[list[Graph]] = None) -> dict[str, Outcome]:
    """The identity and implication suite over a general (unfiltered) graph list."""
    remark_graphs = graphs if remark_graphs is None else remark_graphs
    out = {}
    out["union_reformulation"] = (len(remark_graphs), [to_graph6(g) for g in remark_graphs if not remark3_holds(g)])
    out["claw_free_implies_l1"] = _implication(graphs, is_claw_free, lambda g: is_l_graph(g, 1), "claw-free but not L_1")
    out["l0_implies_common"] = _implication(
        graphs,
        lambda g: is_l_graph(g, 0),
        lambda g: (min_common_d2(g) or 2) >= 2,
        "L_0 but some distance-2 pair has fewer than 2 common neighbours",
    )
    out["two_connected"] = _implication(
        graphs,
        lambda g: is_connected(g) and g.n >= 3 and (min_common_d2(g) or 2) >= 2,
        is_two_connected,
        "common-neighbour condition holds but not 2-connected",
    )
    out["tough_or_k"] = _implication(
        [g for g in graphs if g.n <= 14],
        lambda g: is_two_connected(g) and is_l_graph(g, 1),
        lambda g: is_one_tough(g) or family_k_witness(g) is not None,
        "2-connected L_1 but neither 1-tough nor in K",
    )

    def claw_equivalence(g: Graph) -> bool:
        for u, v, w in distance2_triples(g):
            if (l_deficit(g, u, v, w) <= 0) != (len(g.adj[u] & g.adj[v]) >= 2):
                return False
        return True

    out["claw_free_equivalence"] = _implication(
        graphs, is_claw_free, claw_equivalence, "claw-free but deficit <= 0 and two common neighbours disagree"
    )
    return out


def check_perfect_matchings(graphs: Iterable[Graph]) -> Outcome:
    return _implication(
        graphs,
        lambda g: g.n % 2 == 0 and is_connected(g) and is_l_graph(g, 1),
        oracle.has_perfect_matching_oracle,
        "even connected L_1-graph without a perfect matching",
    )


def run_all(quick: bool = False) -> dict[str, Outcome]:
    """Everything the ``verify-corpus`` command runs."""
    from .generators import family_k

    max_n = 9 if quick else 12
    full = corpus(max_n=max_n)
    ext = extension_corpus(max_n=max_n)
    small = [(name, g) for name, g in full if g.n <= (8 if quick else 10)]
    general = general_corpus(count=200 if quick else 600)
    results = {
        "cycle_extension": check_cycle_extension(ext),
        "exception_tightness": check_exception_tightness(
            [family_k(2), family_k(2, [(0, 1)]), family_k(3), family_k(3, [(0, 1), (1, 2)])]
        ),
        "path_extension": check_path_extension(small),
        "cycle_coverage": check_cycle_coverage(full),
        "path_coverage": check_path_coverage(small),
        "hamilton_agreement": check_hamilton_agreement(full),
        "cycle_through_set": check_cycle_through_sets(ext),
        "perfect_matching": check_perfect_matchings(general + [g for _, g in full]),
    }
    checked, bad, _ = check_bipartite_scan(6 if quick else 8)
    results["bipartite_scan"] = (checked, bad)
    results.update(check_identities(general))
    return results

