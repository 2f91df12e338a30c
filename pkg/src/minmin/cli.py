"""Command-line interface.

Vertices are 0-indexed: v_1..v_n in the usual notation are 0..n-1 here.
Graphs are given as graph6 strings, "-" for one graph6 per line on stdin,
or --file PATH.

Exit codes: 0 success, 1 verification failures, 2 usage or input error,
3 no c-partition exists.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import generators
from .coalition import CminResult, cmin_bruteforce, coalition_number_bruteforce
from .corpus import CorpusError, ingest_graph6_file, open_corpus
from .domination import minimum_dominating_set
from .graph import Graph, GraphError, members
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .recognizers import (
    MBase,
    MDerivation,
    MStep,
    RecognizerError,
    cmin_dispatch,
    generate_family_F,
    is_family_F,
    is_family_M,
    property_star,
    test_cmin_eq_2,
    test_cmin_ge_3,
    test_cmin_ge_4,
)
from .verify import SUITE_NAMES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NO_PARTITION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help='graph6 string, or "-" to read stdin')
    p.add_argument("--file", help="file with one graph6 string per line")
    p.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minmin",
        description="Coalition partitions and the minmin coalition number of small graphs. "
                    "Vertices are numbered from 0.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cmin", help="minmin coalition number c_min(G)")
    _add_graph_input(p)
    p.add_argument("--method", choices=("auto", "brute", "fast"), default="auto",
                   help="auto: fast paths, cross-checked by brute force for n <= 9; "
                        "fast: fast paths only; brute: exhaustive search")
    p.add_argument("--certificate", action="store_true", help="print the c-partition")

    p = sub.add_parser("cnum", help="coalition number C(G) by exhaustive search")
    _add_graph_input(p)
    p.add_argument("--certificate", action="store_true")

    p = sub.add_parser("gamma", help="domination number")
    _add_graph_input(p)

    p = sub.add_parser("test", help="threshold predicates (graphs without universal vertices)")
    _add_graph_input(p)
    p.add_argument("--predicate", required=True, choices=("cmin2", "ge3", "ge4", "star"))

    p = sub.add_parser("recognize", help="family M / family F membership")
    _add_graph_input(p)
    p.add_argument("--family", required=True, choices=("M", "F"))
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("gen", help="emit a named graph as graph6")
    p.add_argument("name", choices=generators.KINDS + ("family_f", "family_m"))
    p.add_argument("params", nargs="*",
                   help="integers; family_f: U order then U edges as a-b; "
                        "family_m: base (K1, K2, K2bar) then steps (AddK1, AddK2bar)")

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--corpus", required=True,
                   help="labeled:<n|lo-hi>[:filters], cycle:<lo-hi>, path:..., star:..., "
                        "named:petersen,heawood, family_m:<max>, file:<path>")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", metavar="OUT", help='write the JSON report to OUT ("-" for stdout)')
    p.add_argument("--no-timing", action="store_true", help="omit timing fields from JSON")
    return parser


def _is_header(line: str) -> bool:
    return line.startswith(">>") and not (line.startswith(">>graph6<<") and len(line) > 10)


def _graphs(args: argparse.Namespace) -> list[Graph]:
    if args.file:
        if args.graph:
            raise UsageError("give either a graph or --file, not both")
        return [ng.graph for ng in ingest_graph6_file(args.file)]
    if args.graph is None:
        raise UsageError("no graph given")
    if args.graph == "-":
        lines = [ln.strip() for ln in sys.stdin]
        lines = [ln for ln in lines if ln and not _is_header(ln)]
        if not lines:
            raise UsageError("no graph on stdin")
        return [graph6_decode(ln) for ln in lines]
    return [graph6_decode(args.graph)]


def _emit(rows: list[tuple[Graph, Any, str]], as_json: bool) -> None:
    """Print (graph, json payload, text) rows; prefix text with graph6 when several."""
    if as_json:
        payload = [dict(graph6=graph6_encode(G), **data) for G, data, _ in rows]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
        return
    for G, _, text in rows:
        print(text if len(rows) == 1 else f"{graph6_encode(G)} {text}")


def _certificate_text(res: CminResult) -> str:
    cert = res.certificate
    lines = [f"blocks: {cert.partition.text()}"]
    for i, (block, why) in enumerate(zip(cert.partition.block_texts(), cert.justify)):
        reason = "dominating singleton" if why.singleton else f"coalition with block {why.partner}"
        lines.append(f"  {i}: {{{block}}} {reason}")
    return "\n".join(lines)


def _cmin_like(args: argparse.Namespace, solve) -> int:
    rows = []
    missing = False
    for G in _graphs(args):
        res = solve(G)
        if res.value is None:
            missing = True
            text = "no c-partition"
        else:
            text = str(res.value)
            if args.certificate and res.certificate is not None:
                text += "\n" + _certificate_text(res)
        rows.append((G, res.to_json(), text))
    _emit(rows, args.json)
    if missing:
        print("error: no c-partition exists", file=sys.stderr)
        return EXIT_NO_PARTITION
    return EXIT_OK


def cmd_cmin(args: argparse.Namespace) -> int:
    solvers = {
        "auto": lambda G: cmin_dispatch(G, check=True),
        "fast": lambda G: cmin_dispatch(G, check=False),
        "brute": cmin_bruteforce,
    }
    return _cmin_like(args, solvers[args.method])


def cmd_cnum(args: argparse.Namespace) -> int:
    return _cmin_like(args, coalition_number_bruteforce)


def cmd_gamma(args: argparse.Namespace) -> int:
    rows = []
    for G in _graphs(args):
        S = minimum_dominating_set(G)
        rows.append((G, {"gamma": len(members(S)), "set": members(S)}, str(len(members(S)))))
    _emit(rows, args.json)
    return EXIT_OK


def cmd_test(args: argparse.Namespace) -> int:
    rows = []
    for G in _graphs(args):
        if args.predicate == "cmin2":
            v = test_cmin_eq_2(G)
            rows.append((G, {"predicate": "cmin2", "value": v is not None, "witness": v},
                         "false" if v is None else f"true v={v}"))
            continue
        fn = {"ge3": test_cmin_ge_3, "ge4": test_cmin_ge_4, "star": property_star}[args.predicate]
        got = fn(G)
        rows.append((G, {"predicate": args.predicate, "value": got}, str(got).lower()))
    _emit(rows, args.json)
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    rows = []
    for G in _graphs(args):
        if args.family == "M":
            der = is_family_M(G)
            data = {"family": "M", "member": der is not None,
                    "witness": der.to_json() if der else None}
            detail = der.text() if der else ""
        else:
            w = is_family_F(G)
            data = {"family": "F", "member": w is not None,
                    "witness": w.to_json() if w else None}
            detail = f"v={w.v} x={w.x} y={w.y} U={' '.join(map(str, members(w.U)))}" if w else ""
        text = "member" if data["member"] else "non-member"
        if args.witness and detail:
            text += f" {detail}"
        rows.append((G, data, text))
    _emit(rows, args.json)
    return EXIT_OK


def _ints(params: Sequence[str]) -> list[int]:
    try:
        return [int(p) for p in params]
    except ValueError:
        raise UsageError(f"expected integer parameters, got {' '.join(params)}") from None


def cmd_gen(args: argparse.Namespace) -> int:
    if args.name == "family_f":
        if not args.params:
            raise UsageError("family_f needs the order of U")
        edges = []
        for tok in args.params[1:]:
            a, _, b = tok.partition("-")
            edges.append(tuple(_ints([a, b])))
        G = generate_family_F(_ints(args.params[:1])[0], edges)
    elif args.name == "family_m":
        if not args.params:
            raise UsageError("family_m needs a base graph")
        try:
            der = MDerivation(MBase(args.params[0]), tuple(MStep(s) for s in args.params[1:]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        G = der.build()
    else:
        G = generators.generate(args.name, *_ints(args.params))
    print(graph6_encode(G))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graphs = open_corpus(args.corpus)
    report = run_verification(args.suite, graphs, corpus=args.corpus, jobs=args.jobs)
    payload = json.dumps(report.to_json(timing=not args.no_timing), indent=2, sort_keys=True)
    if args.json == "-":
        print(payload)
    else:
        print(report.text())
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(payload + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "cmin": cmd_cmin, "cnum": cmd_cnum, "gamma": cmd_gamma, "test": cmd_test,
    "recognize": cmd_recognize, "gen": cmd_gen, "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError, Graph6Error, CorpusError, RecognizerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
