"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed at the end of the
pytest run (see conftest.py) or directly when this file is run as a script.
"""

import random
import time
from functools import lru_cache


from l1cycles import oracle
from l1cycles.conditions import family_k_witness, is_one_tough, satisfies_hypotheses
from l1cycles.generators import (
    corpus,
    family_k,
    fig3_counterexamples,
    general_corpus,
    nonpancyclic_a,
    nonpancyclic_b,
    random_graph,
)
from l1cycles.verify import (
    check_bipartite_scan,
    check_cycle_coverage,
    check_cycle_extension,
    check_cycle_through_sets,
    check_exception_tightness,
    check_identities,
    check_path_coverage,
    check_path_extension,
    check_perfect_matchings,
    extension_corpus,
)

RESULTS: dict[int, str] = {}


@lru_cache(maxsize=None)
def full_corpus():
    return tuple(corpus(max_n=12))


@lru_cache(maxsize=None)
def ext_corpus():
    return tuple(extension_corpus(max_n=12))


class Criterion:
    """Times a block and records one line for the summary."""

    def __init__(self, number, title, limit=None):
        self.number, self.title, self.limit = number, title, limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        if ok and self.limit and elapsed >= self.limit:
            ok = False
            self.detail += " too slow"
        status = "PASS" if ok else "FAIL"
        reason = "" if exc is None else f" {type(exc).__name__}: {str(exc).splitlines()[0][:160]}"
        RESULTS[self.number] = (
            f"[{status}] criterion {self.number:2d} {self.title}: {self.detail.strip()}{reason} "
            f"[{elapsed:.2f}s{limit}]"
        )
        if ok is False and exc_type is None:
            raise AssertionError(RESULTS[self.number])
        return False


def no_violations(outcome):
    checked, bad = outcome
    assert checked > 0, "nothing was checked"
    assert not bad, f"{len(bad)} violations, first: {bad[0]}"
    return checked


def test_c01_nine_cycle_missing():
    with Criterion(1, "nonpancyclic_a(2) has no 9-cycle", limit=1) as c:
        g = nonpancyclic_a(2)
        assert g.n == 10
        assert satisfies_hypotheses(g).ok
        assert family_k_witness(g) is None
        lengths = oracle.cycle_spectrum(g).lengths
        assert 9 not in lengths and 10 in lengths
        c.detail = f"spectrum {sorted(lengths)}"


def test_c02_eleven_thirteen_missing():
    with Criterion(2, "nonpancyclic_b(2) has no 11- or 13-cycle", limit=30) as c:
        g = nonpancyclic_b(2)
        assert g.n == 14
        lengths = oracle.cycle_spectrum(g).lengths
        assert not {11, 13} & lengths and 14 in lengths
        c.detail = f"spectrum {sorted(lengths)}"


def test_c03_generalised_family():
    with Criterion(3, "nonpancyclic_a(m) has no (n-1)-cycle, m = 2, 3, 4", limit=120) as c:
        for m in (2, 3, 4):
            g = nonpancyclic_a(m)
            assert g.n == 2 * m + 6
            assert oracle.find_cycle(g, g.n - 1) is None, f"m={m}"
            assert oracle.find_cycle(g, g.n) is not None, f"m={m}"
        c.detail = "n = 10, 12, 14"


def test_c04_cycle_extension_suite():
    with Criterion(4, "every non-spanning cycle extends by 1 or 2") as c:
        graphs = ext_corpus()
        assert len(graphs) >= 200, f"only {len(graphs)} corpus graphs"
        assert all(g.n <= 12 and family_k_witness(g) is None for _, g in graphs)
        checked = no_violations(check_cycle_extension(list(graphs)))
        c.detail = f"{checked} cycles in {len(graphs)} graphs, 0 failures"


def test_c05_exception_tightness():
    with Criterion(5, "exception family behaves as predicted") as c:
        members = [
            family_k(2), family_k(2, [(0, 1)]),
            family_k(3), family_k(3, [(0, 1)]), family_k(3, [(0, 1), (1, 2)]),
            family_k(3, [(0, 1), (1, 2), (0, 2)]),
        ]
        for g in members:
            assert not is_one_tough(g)
        checked = no_violations(check_exception_tightness(members))
        c.detail = f"{len(members)} members, {checked} instances, 0 failures"


def test_c06_path_extension_suite():
    with Criterion(6, "every non-spanning x-y path extends (ends without common neighbour)") as c:
        graphs = [(name, g) for name, g in full_corpus() if g.n <= 10]
        checked = no_violations(check_path_extension(graphs))
        c.detail = f"{checked} paths in {len(graphs)} graphs, 0 failures"


def test_c07_common_neighbour_counterexamples():
    with Criterion(7, "both common-neighbour graphs have unextendable paths", limit=120) as c:
        found = []
        for g in fig3_counterexamples():
            witness = oracle.find_unextendable_path(g, common_neighbours=True)
            assert witness is not None, f"no witness in graph on {g.n} vertices"
            x, y, p = witness
            assert g.adj[x] & g.adj[y] and p.is_valid(g) and len(p) < g.n
            assert not oracle.short_extension_exists(g, p)
            found.append(f"{x}-{y} {list(p.vertices)}")
        c.detail = "; ".join(found)


def test_c08_coverage():
    with Criterion(8, "cycles of length m or m-1, paths with m or m-1 vertices") as c:
        graphs = list(full_corpus())
        cycles = no_violations(check_cycle_coverage(graphs))
        paths = no_violations(check_path_coverage(graphs))
        c.detail = f"{cycles} cycle and {paths} path coverage checks, 0 failures"


def test_c09_cycle_through_set():
    with Criterion(9, "cycle through a finite vertex set") as c:
        checked = no_violations(check_cycle_through_sets(list(ext_corpus()), instances=100, seed=11))
        assert checked == 100
        c.detail = "100 instances, 0 failures"


def test_c10_bipartite_classification():
    with Criterion(10, "bipartite L_1 classification, n <= 8", limit=300) as c:
        checked, bad, tags = check_bipartite_scan(8)
        no_violations((checked, bad))
        c.detail = f"{checked} graphs " + ", ".join(f"{k}={v}" for k, v in sorted(tags.items()))


def test_c11_identities():
    with Criterion(11, "identity and implication suite") as c:
        rng = random.Random(500)
        remark = [random_graph(rng.randint(1, 12), rng.random(), rng) for _ in range(500)]
        graphs = general_corpus(count=600) + [g for _, g in full_corpus()]
        results = check_identities(graphs, remark_graphs=remark)
        assert results["union_reformulation"][0] == 500
        for name, outcome in results.items():
            no_violations(outcome)
        c.detail = ", ".join(f"{k}={v[0]}" for k, v in sorted(results.items()))


def test_c12_perfect_matching():
    with Criterion(12, "even connected L_1-graphs have a perfect matching") as c:
        graphs = [g for _, g in full_corpus()] + general_corpus(count=600)
        checked = no_violations(check_perfect_matchings(graphs))
        c.detail = f"{checked} graphs, 0 failures"


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    for fn in tests:
        try:
            fn()
        except AssertionError:
            pass
    for n in sorted(RESULTS):
        print(RESULTS[n])
    raise SystemExit(0 if all("[PASS]" in line for line in RESULTS.values()) else 1)
