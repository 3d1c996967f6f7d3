"""Command line front end.

Subcommands map onto the library one to one: recognize decides a single
graph, classify reports its structure, certify checks a certificate file
against a graph, generate and oracle expose the instance machinery, and
sweep runs a whole manifest through the cross-checking harness.

Exit codes: 0 success or valid, 1 negative decision or invalid
certificate, 2 unreadable input, 3 internal disagreement (a theorem
violation, which is a bug worth reporting).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .graphs import Graph, GraphFormatError, complement, parse_graph, serialize_graph
from .kaleidoscope import (
    extract_kaleidoscope,
    kaleidoscope_from_json,
    kaleidoscope_to_json,
    verify_kaleidoscope,
)
from .oracle import (
    GeneratorSpec,
    brute_force_colourings,
    equivalence_harness,
    generate,
    parse_manifest,
)
from .recognize import (
    Colourable,
    NotColourable,
    colouring_from_text,
    colouring_to_text,
    count_colourings,
    recognize,
    verify_locally_complete,
)
from .structure import SelfCheckError, report_to_json, structural_recognize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3


class InputError(Exception):
    """Anything wrong with the files or flags the user handed us."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _read_graph(path: str) -> Graph:
    try:
        return parse_graph(_read_text(path))
    except (GraphFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _default_seed() -> int:
    raw = os.environ.get("LC2EC_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"LC2EC_SEED must be an integer, got {raw!r}")


def _result_payload(g: Graph, status_yes: bool, colouring, odd_cycle, reason):
    """One JSON document covering both outcomes, using the library shapes."""
    doc: dict[str, object] = {
        "status": "colourable" if status_yes else "not_colourable",
        "colouring": list(colouring.colour) if colouring is not None else None,
        "odd_cycle": list(odd_cycle) if odd_cycle is not None else None,
        "count": count_colourings(g) if status_yes else 0,
    }
    if reason:
        doc["reason"] = reason
    if not status_yes:
        kal = extract_kaleidoscope(g, odd_cycle)
        doc["kaleidoscope"] = json.loads(kaleidoscope_to_json(kal))
    return doc


def _cmd_recognize(args) -> int:
    g = _read_graph(args.path)
    aux_res = structural = None
    if args.method in ("aux", "both"):
        aux_res = recognize(g)
    if args.method in ("structural", "both"):
        structural = structural_recognize(g)
    if args.method == "both":
        if isinstance(aux_res, Colourable) != structural.colourable:
            print(
                "internal disagreement: edge method says "
                f"{'colourable' if isinstance(aux_res, Colourable) else 'not colourable'}, "
                f"structural says {'colourable' if structural.colourable else 'not colourable'}",
                file=sys.stderr,
            )
            return EXIT_DISAGREE

    if aux_res is not None:
        yes = isinstance(aux_res, Colourable)
        colouring = aux_res.colouring if yes else None
        odd_cycle = None if yes else aux_res.odd_cycle
        reason = None if yes else aux_res.reason
    else:
        yes = structural.colourable
        colouring = structural.colouring
        odd_cycle = structural.odd_cycle
        reason = structural.reason

    if args.json:
        print(json.dumps(_result_payload(g, yes, colouring, odd_cycle, reason), indent=2))
    elif yes:
        print("COLOURABLE")
        text = colouring_to_text(g, colouring)
        if text:
            print(text, end="" if text.endswith("\n") else "\n")
    else:
        print("NOT COLOURABLE")
        if reason:
            print(f"# {reason}")
        print(kaleidoscope_to_json(extract_kaleidoscope(g, odd_cycle)))
    return EXIT_OK if yes else EXIT_NEGATIVE


def _cmd_classify(args) -> int:
    g = _read_graph(args.path)
    report = structural_recognize(g)
    print(json.dumps(report_to_json(report), indent=2))
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = _read_graph(args.path)
    text = _read_text(args.certificate)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        # kaleidoscopes live in the complement, so verify there
        try:
            kal = kaleidoscope_from_json(text)
        except ValueError as exc:
            raise InputError(f"{args.certificate}: {exc}") from exc
        ok, why = verify_kaleidoscope(complement(g), kal)
        if ok:
            print("valid kaleidoscope")
            return EXIT_OK
        print(f"invalid kaleidoscope: {why}")
        return EXIT_NEGATIVE
    try:
        col = colouring_from_text(g, text)
    except ValueError as exc:
        raise InputError(f"{args.certificate}: {exc}") from exc
    ok, witness = verify_locally_complete(g, col)
    if ok:
        print("valid colouring")
        return EXIT_OK
    v, a, b = witness
    print(
        f"invalid colouring: neighbours {a} and {b} of {v} share a colour"
        " but are not adjacent"
    )
    return EXIT_NEGATIVE


def _cmd_generate(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    spec = GeneratorSpec(
        family=args.family,
        n=args.n,
        density=args.density,
        seed=seed,
        name=args.name,
        shuffle=not args.no_shuffle,
    )
    try:
        inst = generate(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(serialize_graph(inst.graph))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = _read_graph(args.path)
    try:
        cols, count = brute_force_colourings(g, cap=args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        doc = {
            "count": count,
            "colourings": [list(c.colour) for c in cols],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"count {count}")
        for c in cols:
            text = colouring_to_text(g, c)
            print(text.replace("\n", " ").strip())
    return EXIT_OK if count else EXIT_NEGATIVE


def _cmd_sweep(args) -> int:
    try:
        corpus = parse_manifest(_read_text(args.manifest))
    except ValueError as exc:
        raise InputError(f"{args.manifest}: {exc}") from exc
    report = equivalence_harness(corpus)
    for issue in report["disagreements"]:
        print(f"{issue['instance']}: {issue['issue']}", file=sys.stderr)
    print(f"{len(report['disagreements'])} disagreements / {report['instances']} graphs")
    return EXIT_OK if report["ok"] else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lc2ec",
        description="Locally complete 2-edge-colouring toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide colourability of one graph")
    p.add_argument("path", help="edge list file, or - for stdin")
    p.add_argument(
        "--method",
        choices=("aux", "structural", "both"),
        default="aux",
        help="edge method, structural classification, or cross-check",
    )
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("classify", help="report structure: class, cover, type")
    p.add_argument("path", help="edge list file, or - for stdin")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("certify", help="check a colouring or kaleidoscope file")
    p.add_argument("path", help="edge list file, or - for stdin")
    p.add_argument("certificate", help="colouring text or kaleidoscope JSON")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("generate", help="emit a generated instance as an edge list")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=None, help="defaults to LC2EC_SEED or 0")
    p.add_argument("--name", default="", help="pattern name for paper-instance")
    p.add_argument("--no-shuffle", action="store_true", help="keep construction labels")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("oracle", help="exhaustive colouring count for small graphs")
    p.add_argument("path", help="edge list file, or - for stdin")
    p.add_argument("--cap", type=int, default=4, help="how many colourings to list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="run a manifest through the cross-check harness")
    p.add_argument("manifest", help="JSON lines of generator specs, or - for stdin")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SelfCheckError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
