"""Command-line front end.

Exit codes: 0 success, 1 verify-corpus found violations, 2 argument or
precondition error (a JSON error object is printed), 3 size-cap exceeded,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, Optional, Sequence, TextIO

from . import conditions, extension, generators, oracle
from .graph import Graph, GraphError, SizeLimitError, VertexSequence, parse_graph6, to_dot, to_graph6

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ARGUMENT = 2
EXIT_RESOURCE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        return default


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise GraphError(f"expected comma-separated vertex indices, got {text!r}") from exc


def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        a, sep, b = tok.partition("-")
        if not sep:
            raise GraphError(f"expected an edge like 0-1, got {tok!r}")
        out.append((int(a), int(b)))
    return out


def _layers(text: str) -> list[generators.LayerSpec]:
    out = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        kind = {"K": "complete", "E": "empty"}.get(tok[:1].upper())
        if kind is None or not tok[1:].isdigit():
            raise GraphError(f"layer must look like K2 or E3, got {tok!r}")
        out.append(generators.LayerSpec(kind, int(tok[1:])))
    return out


def _input_graphs(args: argparse.Namespace) -> list[Graph]:
    if args.g6 is not None and args.infile is not None:
        raise UsageError("give exactly one of --g6 and --in")
    if args.g6 is not None:
        return [parse_graph6(args.g6)]
    if args.infile is not None:
        with open(args.infile) as fh:
            return [parse_graph6(line) for line in fh if line.strip()]
    raise UsageError("an input graph is required: --g6 <graph6> or --in <file>")


def _dump(obj: Any, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def _gen(args: argparse.Namespace, out: TextIO) -> int:
    fam = args.family
    if fam == "nonpancyclic-a":
        g = generators.nonpancyclic_a(args.m)
    elif fam == "nonpancyclic-b":
        g = generators.nonpancyclic_b(args.m)
    elif fam == "family-k":
        g = generators.family_k(args.p, _pairs(args.a_edges))
    elif fam == "knn":
        g = generators.knn_variant(args.n, args.variant)
    elif fam == "fig3":
        g = generators.fig3_counterexamples()[args.which - 1]
    elif fam == "layered":
        g = generators.layered_join(_layers(args.layers))
    else:  # random
        g = generators.random_satisfying(args.n, args.seed, args.max_tries)
        if g is None:
            raise GraphError(f"no satisfying graph found in {args.max_tries} tries")
    if args.format == "dot":
        out.write(to_dot(g))
    elif args.format == "json":
        _dump({"graph6": to_graph6(g), "n": g.n, "edges": [list(e) for e in g.edges()]}, out)
    else:
        out.write(to_graph6(g) + "\n")
    return EXIT_OK


def _per_graph(fn: Callable[[Graph, argparse.Namespace], Any]) -> Callable[[argparse.Namespace, TextIO], int]:
    def run(args: argparse.Namespace, out: TextIO) -> int:
        for g in _input_graphs(args):
            result = fn(g, args)
            if args.format == "dot" and isinstance(result, tuple):
                out.write(to_dot(g, result[1]))
            elif args.format == "text" and isinstance(result, tuple):
                out.write(" ".join(map(str, result[1].vertices)) + "\n" if result[1] else "none\n")
            else:
                _dump(result[0] if isinstance(result, tuple) else result, out)
        return EXIT_OK

    return run


def _check(g: Graph, args: argparse.Namespace) -> dict:
    return conditions.satisfies_hypotheses(g, toughness_limit=args.toughness_limit).to_dict()


def _result_output(res: extension.ExtensionResult) -> tuple[dict, Optional[VertexSequence]]:
    return res.to_dict(), res.new_sequence or res.old_sequence


def _extend_cycle(g: Graph, args: argparse.Namespace):
    seq = VertexSequence.cycle(_ints(args.seq))
    return _result_output(extension.extend_cycle(g, seq, anchor=args.anchor, audit=args.audit))


def _extend_path(g: Graph, args: argparse.Namespace):
    seq = VertexSequence.path(_ints(args.seq))
    return _result_output(extension.extend_path(g, seq, audit=args.audit))


def _hamilton(g: Graph, args: argparse.Namespace):
    return _result_output(extension.build_hamiltonian(g, args.x))


def _spanning_path(g: Graph, args: argparse.Namespace):
    return _result_output(extension.build_spanning_path(g, args.x, args.y))


def _cycle_through_set(g: Graph, args: argparse.Namespace):
    targets = _ints(args.set)
    c = extension.cycle_through_set(g, targets)
    return {"targets": sorted(set(targets)), "cycle": list(c.vertices)}, c


def _spectrum(g: Graph, args: argparse.Namespace) -> dict:
    return oracle.cycle_spectrum(g, limit=args.limit).to_dict()


def _paths(g: Graph, args: argparse.Namespace) -> dict:
    counts = oracle.path_vertex_counts(g, args.x, args.y, limit=args.limit)
    return {"x": args.x, "y": args.y, "vertex_counts": sorted(counts)}


def _classify(g: Graph, args: argparse.Namespace) -> dict:
    return conditions.classify_bipartite_l1(g).to_dict()


def _verify_corpus(args: argparse.Namespace, out: TextIO) -> int:
    from .verify import run_all

    results = run_all(quick=args.quick)
    violations = [f"{name}: {v}" for name, (_, bad) in results.items() for v in bad]
    _dump(
        {
            "graphs": len(generators.corpus(max_n=9 if args.quick else 12)),
            "checks": {name: checked for name, (checked, _) in results.items()},
            "violations": violations,
        },
        out,
    )
    return EXIT_VIOLATION if violations else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    spectrum_cap = _env_int("L1CYCLES_SPECTRUM_LIMIT", oracle.SPECTRUM_LIMIT)
    tough_cap = _env_int("L1CYCLES_TOUGHNESS_LIMIT", 12)

    parser = _Parser(prog="l1cycles", description="Cycle and path extension in L_1-graphs.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def graph_cmd(name: str, fn, help_: str, formats=("json",)) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--g6", help="graph in graph6 format")
        p.add_argument("--in", dest="infile", help="file with one graph6 per line (batch mode)")
        p.add_argument("--format", choices=formats, default="json")
        p.set_defaults(run=_per_graph(fn), parser=p)
        return p

    g = sub.add_parser("gen", help="emit a named graph")
    g.add_argument(
        "family",
        choices=["nonpancyclic-a", "nonpancyclic-b", "family-k", "knn", "fig3", "layered", "random"],
    )
    g.add_argument("--m", type=int, default=2)
    g.add_argument("--p", type=int, default=2)
    g.add_argument("--a-edges", default="", help="edges inside the A side, e.g. 0-1,1-2")
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--variant", choices=generators.KNN_VARIANTS, default="full")
    g.add_argument("--which", type=int, choices=(1, 2), default=1)
    g.add_argument("--layers", default="K1,E2,K2,K2,E2,K1")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-tries", type=int, default=10000)
    g.add_argument("--format", choices=("graph6", "json", "dot"), default="graph6")
    g.set_defaults(run=_gen)

    p = graph_cmd("check", _check, "condition report")
    p.add_argument("--toughness-limit", type=int, default=tough_cap)

    seq_formats = ("json", "text", "dot")
    p = graph_cmd("extend-cycle", _extend_cycle, "extend a cycle by one or two vertices", seq_formats)
    p.add_argument("--seq", required=True)
    p.add_argument("--anchor", type=int)
    p.add_argument("--audit", action="store_true")
    p = graph_cmd("extend-path", _extend_path, "extend an x-y path by one or two vertices", seq_formats)
    p.add_argument("--seq", required=True)
    p.add_argument("--audit", action="store_true")
    p = graph_cmd("hamilton", _hamilton, "build a Hamilton cycle by repeated extension", seq_formats)
    p.add_argument("--x", type=int, default=0)
    p = graph_cmd("spanning-path", _spanning_path, "build a Hamilton x-y path", seq_formats)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p = graph_cmd("cycle-through-set", _cycle_through_set, "a cycle through a vertex set", seq_formats)
    p.add_argument("--set", required=True)
    p = graph_cmd("spectrum", _spectrum, "exact cycle-length spectrum")
    p.add_argument("--limit", type=int, default=spectrum_cap)
    p = graph_cmd("paths", _paths, "exact x-y path vertex counts")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--limit", type=int, default=spectrum_cap)
    graph_cmd("classify-bipartite", _classify, "bipartite L_1 family")

    v = sub.add_parser("verify-corpus", help="run the corpus property suite")
    v.add_argument("--quick", action="store_true", help="smaller corpus")
    v.set_defaults(run=_verify_corpus)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError(parser.format_usage())
        try:
            return args.run(args, out)
        except UsageError as exc:
            sub_parser = getattr(args, "parser", parser)
            raise UsageError(f"{sub_parser.prog}: {exc}\n{sub_parser.format_usage()}") from exc
    except UsageError as exc:
        err.write(str(exc).rstrip() + "\n")
        return EXIT_USAGE
    except SizeLimitError as exc:
        _dump({"error": "SizeLimitError", "message": str(exc)}, out)
        return EXIT_RESOURCE
    except GraphError as exc:
        payload: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, extension.ExceptionFamilyError):
            payload["witness"] = exc.witness.to_dict()
        if isinstance(exc, extension.CommonNeighborError):
            payload["common_neighbor"] = exc.common
        _dump(payload, out)
        return EXIT_ARGUMENT
    except OSError as exc:
        _dump({"error": type(exc).__name__, "message": str(exc)}, out)
        return EXIT_ARGUMENT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
