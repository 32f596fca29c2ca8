"""``mincut`` command line: run, generate, decompose, verify.

Exit codes: 0 success, 1 usage or verification failure, 2 unreadable input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import generators
from .decomp import EXHAUSTIVE_LIMIT, expander_decompose
from .errors import EmptyGraph, FormatMismatch, InvariantViolation, MincutError, ParseError, StrictViolation
from .io import FORMATS, parse_graph, serialize_graph
from .oracle import OracleChoice, exhaustive_min_cut, stoer_wagner
from .pipeline import edge_connectivity
from .trimshave import shave, trim
from .verify import run_verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3

_ORACLES = {"flow": OracleChoice.FLOW, "sw": OracleChoice.SW, "exhaustive": OracleChoice.EXHAUSTIVE}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, ensure_ascii=False)


def _load(path: str, fmt: str, strict: bool):
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_graph(data, fmt, strict=strict)


def cmd_run(args) -> int:
    G = _load(args.file, args.format, args.strict)
    cut, report = edge_connectivity(G, _ORACLES[args.oracle], exhaustive_limit=args.certify_limit)
    if args.json:
        print(_dump(report.to_json()))
    else:
        print(f"lambda={cut.lam}")
        if args.cut:
            print("side=" + " ".join(str(G.labels[v]) for v in cut.side.ids))
    return EXIT_OK


def cmd_generate(args) -> int:
    G = generators.generate(args.family, args.params, seed=args.seed)
    text = serialize_graph(G, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    G = _load(args.file, args.format, args.strict)
    partition, report = expander_decompose(G, args.phi, exhaustive_limit=args.certify_limit)
    label = G.labels
    out = {
        "phi": report.phi,
        "parts": [[label[v] for v in p.ids] for p in partition.parts],
        "cert": [c.to_json() for c in partition.cert],
        "crossing_edges": report.crossing_edges,
        "fallback_count": report.fallback_count,
        "recursion_depth": report.recursion_depth,
    }
    if args.post != "none":
        trimmed = [trim(G, p) for p in partition.parts]
        out["trimmed"] = [[label[v] for v in p.ids] for p in trimmed]
        if args.post == "trim,shave":
            out["shaved"] = [[label[v] for v in shave(G, p).ids] for p in trimmed]
    print(_dump(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    ok, lines = run_verify(args.trials, args.max_n, args.seed, args.lemma_trials)
    if args.file:
        G = _load(args.file, args.format, args.strict)
        cut, _ = edge_connectivity(G)
        sw = stoer_wagner(G)[0]
        same = cut.lam == sw
        if G.n <= 20:
            same = same and exhaustive_min_cut(G)[0] == cut.lam
        lines.append(f"{args.file}: pipeline={cut.lam} stoer-wagner={sw} {'ok' if same else 'MISMATCH'}")
        ok = ok and same
    print("\n".join(lines))
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def _add_input(p, positional=True):
    if positional:
        p.add_argument("file")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--strict", action="store_true",
                   help="reject duplicate edges and self-loops instead of dropping them")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mincut", description="Deterministic edge connectivity of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="compute the edge connectivity of a graph file")
    _add_input(p)
    p.add_argument("--oracle", choices=sorted(_ORACLES), default="flow")
    p.add_argument("--json", action="store_true", help="print the full pipeline report")
    p.add_argument("--cut", action="store_true", help="also print one side of a minimum cut")
    p.add_argument("--certify-limit", type=int, default=EXHAUSTIVE_LIMIT,
                   help="largest part certified by exhaustive enumeration")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("generate", help="write a graph from a built-in family")
    p.add_argument("family", choices=sorted(generators.FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("decompose", help="print an expander decomposition as JSON")
    _add_input(p)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--post", choices=("none", "trim", "trim,shave"), default="none")
    p.add_argument("--certify-limit", type=int, default=EXHAUSTIVE_LIMIT)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="cross-check the pipeline against the oracles")
    p.add_argument("file", nargs="?")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=60)
    p.add_argument("--lemma-trials", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FormatMismatch, EmptyGraph, StrictViolation, UnicodeDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (MincutError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
