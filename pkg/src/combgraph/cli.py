"""Command-line surface: recognize, decompose, validate, generate, census
and complement, with machine-readable JSON reports and stable exit codes.

Exit codes: 0 for success (a comb, a valid decomposition, or a completed
emission), 1 for a definite negative (not a comb, or violations found),
2 for any input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict
from typing import Optional

from .comb import CombDecomposition, validate_comb
from .core import Graph, complement
from .corpus import CombParams, census, census_csv, generate_comb
from .formats import (
    FormatError,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from .recognize import comb_decompose


class CliError(Exception):
    """Input or usage problem; reported on stderr with exit code 2."""


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _parse_graph(text: str, fmt: str) -> Graph:
    try:
        if fmt == "graph6":
            return parse_graph6(text)
        return parse_edgelist(text)
    except (FormatError, ValueError) as exc:
        raise CliError(str(exc)) from exc


def _digest(g: Graph) -> str:
    return hashlib.sha256(write_graph6(g).encode("ascii")).hexdigest()


def _report(command: str, g: Graph, result: dict, started: float) -> str:
    doc = {
        "command": command,
        "input": {
            "digest": _digest(g),
            "vertices": g.n,
            "edges": g.edge_count,
        },
        "result": result,
        "elapsed_ms": round((time.monotonic() - started) * 1000.0, 3),
    }
    return json.dumps(doc, sort_keys=True)


def _recognition_result(g: Graph, full: bool) -> tuple[dict, int]:
    res = comb_decompose(g)
    if res.is_comb:
        payload: dict = {"status": "comb"}
        if full:
            payload["decomposition"] = res.decomposition.to_json_dict()
        return payload, 0
    w = res.witness
    return (
        {
            "status": "not_comb",
            "witness": {"kind": w.kind.value, "vertices": list(w.vertices)},
        },
        1,
    )


def _run_per_graph(args, command: str, full: bool) -> int:
    started = time.monotonic()
    if args.path == "-" and args.format == "graph6":
        # One graph per stdin line, one JSON report line per graph.
        worst = 0
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            g = _parse_graph(line, "graph6")
            result, code = _recognition_result(g, full)
            print(_report(command, g, result, started))
            started = time.monotonic()
            worst = max(worst, code)
        return worst
    g = _parse_graph(_read_text(args.path), args.format)
    result, code = _recognition_result(g, full)
    print(_report(command, g, result, started))
    return code


def _cmd_recognize(args) -> int:
    return _run_per_graph(args, "recognize", full=False)


def _cmd_decompose(args) -> int:
    return _run_per_graph(args, "decompose", full=True)


def _cmd_validate(args) -> int:
    started = time.monotonic()
    g = _parse_graph(_read_text(args.graph), args.format)
    try:
        doc = json.loads(_read_text(args.decomposition))
        dec = CombDecomposition.from_json_dict(doc)
    except (json.JSONDecodeError, ValueError) as exc:
        raise CliError(f"malformed decomposition: {exc}") from exc
    violations = validate_comb(g, dec)
    if not violations:
        print(_report("validate", g, {"status": "valid"}, started))
        return 0
    payload = {
        "status": "invalid",
        "violations": [
            {"code": v.code, "vertices": list(v.vertices), "message": v.message}
            for v in violations
        ],
    }
    print(_report("validate", g, payload, started))
    return 1


def _cmd_generate(args) -> int:
    started = time.monotonic()
    try:
        doc = json.loads(_read_text(args.params))
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed params file: {exc}") from exc
    if args.seed is not None:
        doc["seed"] = args.seed
    try:
        params = CombParams(
            n=int(doc["n"]),
            l=int(doc["l"]),
            k0=int(doc["k0"]),
            a_sizes=tuple(map(int, doc["a_sizes"])),
            x_sizes=tuple(map(int, doc["x_sizes"])),
            m_sizes=tuple(map(int, doc["m_sizes"])),
            y_sizes=tuple(map(int, doc["y_sizes"])),
            seed=int(doc.get("seed", 0)),
        )
        g, dec = generate_comb(params)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(f"invalid params: {exc}") from exc
    if args.emit == "graph6":
        print(write_graph6(g))
        return 0
    if args.emit == "edgelist":
        sys.stdout.write(write_edgelist(g))
        return 0
    payload = {
        "status": "generated",
        "graph6": write_graph6(g),
        "decomposition": dec.to_json_dict(),
        "params": asdict(params),
    }
    print(_report("generate", g, payload, started))
    return 0


def _cmd_census(args) -> int:
    if args.max_n < 1 or args.max_n > 7:
        raise CliError("--max-n must lie in [1, 7]")
    sys.stdout.write(census_csv(census(args.max_n)))
    return 0


def _cmd_complement(args) -> int:
    text = _read_text(args.path)
    g = _parse_graph(text, args.format)
    h = complement(g)
    if args.format == "graph6":
        print(write_graph6(h))
    else:
        sys.stdout.write(write_edgelist(h))
    return 0


def _add_format(parser, default="graph6") -> None:
    parser.add_argument(
        "--format",
        choices=("graph6", "edgelist"),
        default=default,
        help="input format (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combgraph",
        description=(
            "Recognize comb graphs (split graphs with no induced chair or "
            "co-chair), validate and generate their decompositions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="classify a graph, print a summary report")
    p.add_argument("path", help="input file, or - for stdin (one graph6 per line)")
    _add_format(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("decompose", help="emit the full decomposition or witness")
    p.add_argument("path", help="input file, or - for stdin (one graph6 per line)")
    _add_format(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("validate", help="check a decomposition against a graph")
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--decomposition", required=True, help="decomposition JSON file")
    _add_format(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("generate", help="build a comb from a size profile")
    p.add_argument("--params", required=True, help="params JSON file")
    p.add_argument("--seed", type=int, default=None, help="override the params seed")
    p.add_argument(
        "--emit",
        choices=("graph6", "edgelist", "json"),
        default="json",
        help="output form (default %(default)s)",
    )
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("census", help="emit class counts as CSV")
    p.add_argument("--max-n", type=int, required=True, help="largest vertex count")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("complement", help="emit the complement graph")
    p.add_argument("path", help="input file, or - for stdin")
    _add_format(p)
    p.set_defaults(func=_cmd_complement)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
