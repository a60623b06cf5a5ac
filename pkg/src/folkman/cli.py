"""Command-line front door.

Exit codes for search commands: 0 = Arrows, 1 = FreeColoring (witness
written), 2 = BudgetExhausted, 3+ = usage or input error.  Standard output
is machine-parseable key/value lines; progress goes to standard error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import bounds, cnf, graphs
from .arrowing import (ArrowSpec, EdgeColoring, SearchBudget, SearchOutcome,
                       Verdict, VertexColoring, arrows_edges, arrows_vertices,
                       is_free_edge_coloring)
from .bounds import BUILTIN_GRAPHS, CertificateError, bound_certificate
from .graphs import Graph, complete, cycle, circulant, emit_graph6, join, max_clique

EXIT_ARROWS = 0
EXIT_FREE = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3

WITNESS_SCHEMA = "folkman-witness/1"
RUN_SCHEMA = "folkman-arrows-run/1"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors, which collides with the
    # BudgetExhausted exit code; remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


class CliError(Exception):
    pass


def resolve_graph(source: str) -> Graph:
    """Builtin name (`q`, `theorem-graph`, `lin-graph`, `K<n>`, `C<n>`),
    a literal graph6 string, or `@path` to a graph6 file."""
    if source in BUILTIN_GRAPHS:
        return BUILTIN_GRAPHS[source]()
    m = re.fullmatch(r"K(\d+)", source)
    if m:
        return complete(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", source)
    if m:
        return cycle(int(m.group(1)))
    if source.startswith("@"):
        try:
            text = Path(source[1:]).read_text()
        except OSError as exc:
            raise CliError(f"cannot read graph file: {exc}")
        try:
            return graphs.parse_graph6(text).relabel(Path(source[1:]).stem)
        except graphs.Graph6Error as exc:
            raise CliError(f"bad graph6 file {source[1:]}: {exc}")
    try:
        return graphs.parse_graph6(source)
    except graphs.Graph6Error as exc:
        raise CliError(f"unknown graph source {source!r}: {exc}")


def _budget_from(args) -> SearchBudget | None:
    max_nodes = args.max_nodes
    max_seconds = args.max_seconds
    if max_nodes is None and os.environ.get("FOLKMAN_MAX_NODES"):
        max_nodes = int(os.environ["FOLKMAN_MAX_NODES"])
    if max_seconds is None and os.environ.get("FOLKMAN_MAX_SECONDS"):
        max_seconds = float(os.environ["FOLKMAN_MAX_SECONDS"])
    if max_nodes is None and max_seconds is None:
        return None
    return SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds)


def _dump_json(obj, path: str | None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text)
    return text


def _witness_obj(g: Graph, spec: ArrowSpec, witness) -> dict:
    obj = {"schema": WITNESS_SCHEMA, "graph6": emit_graph6(g),
           "label": g.label, "spec": list(spec.sizes)}
    if isinstance(witness, EdgeColoring):
        obj["kind"] = "edges"
        obj["coloring"] = witness.to_json_obj()
    else:
        obj["kind"] = "vertices"
        obj["coloring"] = list(witness.colors)
    return obj


def cmd_construct(args) -> int:
    name = args.name[0]
    params = args.name[1:]
    try:
        if name == "circulant":
            if len(params) != 2:
                raise CliError("usage: construct circulant <n> <d1,d2,...>")
            g = circulant(int(params[0]), [int(d) for d in params[1].split(",")])
        elif name == "join":
            if len(params) != 2:
                raise CliError("usage: construct join <graph> <graph>")
            g = join(resolve_graph(params[0]), resolve_graph(params[1]))
        elif params:
            raise CliError(f"construct {name} takes no parameters")
        else:
            g = resolve_graph(name)
    except (CliError, graphs.GraphError, bounds.ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    clique = max_clique(g)
    indep = graphs.max_independent_set(g)
    print(f"graph6 {emit_graph6(g)}")
    print(f"label {g.label or '-'}")
    print(f"n {g.n}")
    print(f"edges {g.edge_count}")
    print(f"clique_number {len(clique)}")
    print(f"clique_witness {json.dumps(clique)}")
    print(f"independence_number {len(indep)}")
    print(f"independent_set_witness {json.dumps(indep)}")
    return 0


def _report_outcome(g: Graph, spec: ArrowSpec, outcome: SearchOutcome,
                    args) -> int:
    print(f"verdict {outcome.verdict.value}")
    print(f"nodes {outcome.stats.nodes}")
    for cause, count in sorted(outcome.stats.prunings.items()):
        print(f"prunings.{cause} {count}")
    print(f"seconds {outcome.stats.seconds:.3f}", file=sys.stderr)
    if outcome.verdict is Verdict.FREE_COLORING:
        if getattr(args, "witness", None):
            _dump_json(_witness_obj(g, spec, outcome.witness), args.witness)
            print(f"witness {args.witness}")
        return EXIT_FREE
    if outcome.verdict is Verdict.ARROWS:
        if getattr(args, "evidence_out", None):
            record = {"schema": RUN_SCHEMA, "graph6": emit_graph6(g),
                      "label": g.label, "spec": list(spec.sizes),
                      **outcome.to_json_obj()}
            _dump_json(record, args.evidence_out)
            print(f"evidence {args.evidence_out}")
        return EXIT_ARROWS
    return EXIT_BUDGET


def cmd_arrows(args) -> int:
    try:
        g = resolve_graph(args.graph)
        spec = ArrowSpec.parse(args.spec)
        budget = _budget_from(args)
    except (CliError, ValueError, bounds.ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    workers = 1 if args.deterministic else args.workers
    if args.kind == "vertices":
        outcome = arrows_vertices(g, spec, budget)
    else:
        outcome = arrows_edges(g, spec, budget, workers=workers,
                               neighborhood_pruning=not args.no_bound_pruning,
                               progress_every=args.progress)
    return _report_outcome(g, spec, outcome, args)


def cmd_experiment(args) -> int:
    # Open-problem target: K8+C5+C5.  Reports the raw outcome only; a bound
    # is never concluded from this command.
    args.graph = "lin-graph"
    args.kind = "edges"
    args.evidence_out = None
    code = cmd_arrows(args)
    print("note experiment target; no bound concluded", file=sys.stderr)
    return code


def cmd_encode(args) -> int:
    try:
        g = resolve_graph(args.graph)
        spec = ArrowSpec.parse(args.spec)
        formula = cnf.encode_edge_arrowing(g, spec)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = cnf.emit_dimacs(formula)
    if args.output:
        Path(args.output).write_text(text)
        print(f"dimacs {args.output}")
        print(f"vars {formula.num_vars}")
        print(f"clauses {len(formula.clauses)}")
        print(f"sha256 {cnf.dimacs_sha256(text)}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_decode(args) -> int:
    try:
        g = resolve_graph(args.graph)
        spec = ArrowSpec.parse(args.spec)
        model_text = Path(args.model).read_text()
        model = cnf.parse_model(model_text)
        coloring = cnf.decode_model(g, spec, model)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print("verdict free-coloring")
    if args.witness:
        _dump_json(_witness_obj(g, spec, coloring), args.witness)
        print(f"witness {args.witness}")
    return 0


def cmd_certify(args) -> int:
    try:
        g = resolve_graph(args.graph)
        spec = ArrowSpec.parse(args.spec)
        evidence = json.loads(Path(args.evidence).read_text())
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if evidence.get("graph6") not in (None, emit_graph6(g)):
        print("error: evidence record is for a different graph", file=sys.stderr)
        return EXIT_USAGE
    ev_spec = evidence.get("spec")
    if ev_spec is not None and tuple(ev_spec) != spec.sizes:
        print("error: evidence record is for a different spec", file=sys.stderr)
        return EXIT_USAGE
    try:
        cert = bound_certificate(g, spec, args.q, evidence)
    except CertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _dump_json(cert.to_json_obj(), args.output)
    if args.output:
        print(f"certificate {args.output}")
    print(f"bound {cert.bound}")
    return 0


def cmd_catalog(args) -> int:
    obj = [e.to_json_obj() for e in bounds.known_numbers()]
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    return 0


def _add_budget_flags(p):
    p.add_argument("--max-nodes", type=int, default=None,
                   help="node budget (env FOLKMAN_MAX_NODES)")
    p.add_argument("--max-seconds", type=float, default=None,
                   help="wall-time budget (env FOLKMAN_MAX_SECONDS)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--deterministic", action="store_true",
                   help="force single-worker reproducible search")
    p.add_argument("--no-bound-pruning", action="store_true",
                   help="disable Ramsey neighborhood-bound pruning")
    p.add_argument("--progress", type=int, default=0, metavar="N",
                   help="print progress to stderr every N nodes")
    p.add_argument("--witness", help="path for the free-coloring witness JSON")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="folkman",
                  description="Ramsey arrowing and Folkman bound verification")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph, print invariants")
    p.add_argument("name", nargs="+")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("arrows", help="decide vertex/edge arrowing by search")
    p.add_argument("kind", choices=["vertices", "edges"])
    p.add_argument("--graph", required=True)
    p.add_argument("--spec", required=True, help="a1,a2[,a3,a4]")
    _add_budget_flags(p)
    p.add_argument("--evidence-out", help="path for the arrows run record JSON")
    p.set_defaults(fn=cmd_arrows)

    p = sub.add_parser("experiment",
                       help="run the open-problem K8+C5+C5 edge search")
    p.add_argument("--spec", default="3,5")
    _add_budget_flags(p)
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("encode", help="emit a DIMACS CNF for edge arrowing")
    p.add_argument("--graph", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--output", help="write DIMACS here instead of stdout")
    p.set_defaults(fn=cmd_encode)

    p = sub.add_parser("decode", help="decode and re-verify a solver model")
    p.add_argument("--graph", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--model", required=True, help="solver output with v-lines")
    p.add_argument("--witness", help="path for the verified coloring JSON")
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("certify", help="emit a Folkman bound certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--evidence", required=True,
                   help="arrows run record or solver UNSAT record (JSON)")
    p.add_argument("-o", "--output", help="certificate path")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("catalog", help="dump the known Folkman values as JSON")
    p.set_defaults(fn=cmd_catalog)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
