"""Command-line interface.

Exit status: 0 success, 1 queried property is false (``check``/``oracle``),
2 usage error, 3 unreadable or invalid input, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .enumeration import CLASSES, census
from .errors import AllocationError, GraphParseError, InstanceTooLargeError, IsolatedVertexError
from .games import GameSpec, Variant, value_table
from .graph import Coalition, Graph, parse_graph, pendant_edges, pendant_vertices
from .oracle import MAX_ORACLE_EDGES, Counterexample, classify
from .recognizers import relaxed_convex, strict_additive, strict_balanced, strict_convex
from .solutions import core_check, format_rational, parse_allocation, shapley

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_TOO_LARGE = 4


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise _Exit(status)


class _Exit(Exception):
    def __init__(self, status):
        self.status = status


class _Usage(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    var = _Parser(add_help=False)
    var.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.STRICT.value)

    parser = _Parser(prog="isgames", description="Exact analysis of independent set games.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[fmt, var], help="structural verdicts and balancedness")
    p.add_argument("path")

    p = sub.add_parser("oracle", parents=[fmt, var], help="brute-force classification")
    p.add_argument("path")
    p.add_argument("--max-edges", type=int, default=MAX_ORACLE_EDGES)

    p = sub.add_parser("gamma", parents=[fmt, var], help="one characteristic value")
    p.add_argument("path")
    p.add_argument("--coalition", required=True, help="comma-separated edge indices, may be empty")

    p = sub.add_parser("table", parents=[fmt, var], help="full value table")
    p.add_argument("path")
    p.add_argument("--max-edges", type=int, default=12)

    p = sub.add_parser("shapley", parents=[fmt, var], help="exact Shapley value")
    p.add_argument("path")

    p = sub.add_parser("core-check", parents=[fmt, var], help="core membership of an allocation")
    p.add_argument("path")
    p.add_argument("--allocation", required=True)

    p = sub.add_parser("census", parents=[fmt], help="connected graphs on N vertices")
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--filter", choices=CLASSES)
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _coalition_text(m: int, bits: int) -> str:
    return "{" + ",".join(map(str, Coalition(bits, m))) + "}"


def _graph_summary(g: Graph) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "pendant_edges": pendant_edges(g).to_list(),
        "pendant_vertices": list(pendant_vertices(g)),
    }


def _graph_lines(g: Graph) -> list[str]:
    pv = pendant_vertices(g)
    pe = pendant_edges(g).to_list()
    return [
        f"graph: n={g.n} m={g.m}",
        f"pendant vertices: {' '.join(map(str, pv)) or 'none'}",
        f"pendant edges: {' '.join(map(str, pe)) or 'none'}",
    ]


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cmd_check(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    sc, sa, rc = strict_convex(g), strict_additive(g), relaxed_convex(g)
    bal = strict_balanced(g)
    if args.format == "json":
        out.write(_dump({
            "graph": _graph_summary(g),
            "strict": {
                "convex": sc.decision,
                "convex_certificate": sc.certificate(g),
                "additive": sa.decision,
                "additive_certificate": sa.certificate(g),
                "balanced": bal,
            },
            "relaxed": {"convex": rc.decision, "certificate": rc.certificate(g)},
        }))
    else:
        lines = _graph_lines(g)
        for label, v in (("strict convex", sc), ("strict additive", sa)):
            lines.append(f"{label}: {_flag(v.decision)}" + (f" (witness {v.describe(g)})" if v.kind else ""))
        lines.append(f"strict balanced: {_flag(bal)}")
        lines.append(f"relaxed convex: {_flag(rc.decision)}" + (f" (witness {rc.describe(g)})" if rc.kind else ""))
        out.write("\n".join(lines) + "\n")
    queried = sc if args.variant == Variant.STRICT.value else rc
    return EXIT_OK if queried.decision else EXIT_FALSE


def _counterexample_text(m: int, c: Optional[Counterexample]) -> str:
    if c is None:
        return ""
    if c.kind == "incremental":
        return (f" (edge {c.edge}, S={_coalition_text(m, c.S)}, T={_coalition_text(m, c.T)}:"
                f" increments {c.lhs} vs {c.rhs})")
    return f" (S={_coalition_text(m, c.S)}, T={_coalition_text(m, c.T)}: {c.lhs} vs {c.rhs})"


def _cmd_oracle(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    game = GameSpec(g, args.variant)
    result = classify(game, max_edges=args.max_edges)
    if args.format == "json":
        doc = {"graph": _graph_summary(g), "oracle": {"variant": args.variant, **result.to_dict(g.m)}}
        out.write(_dump(doc))
    else:
        lines = _graph_lines(g) + [f"variant: {args.variant}"]
        for prop in ("convex", "concave", "additive"):
            value = getattr(result, prop)
            lines.append(f"{prop}: {_flag(value)}" + _counterexample_text(g.m, result.counterexamples[prop]))
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if result.convex else EXIT_FALSE


def _parse_coalition(text: str, m: int) -> int:
    bits = 0
    for token in filter(None, (t.strip() for t in text.split(","))):
        try:
            e = int(token, 10)
        except ValueError:
            raise InputError(f"bad edge index {token!r} in --coalition") from None
        if not 0 <= e < m:
            raise InputError(f"edge index {e} outside 0..{m - 1}")
        bits |= 1 << e
    return bits


def _cmd_gamma(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    game = GameSpec(g, args.variant)
    bits = _parse_coalition(args.coalition, g.m)
    value = game.value(bits)
    if args.format == "json":
        out.write(_dump({"coalition": Coalition(bits, g.m).to_list(), "value": value, "variant": args.variant}))
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_table(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    game = GameSpec(g, args.variant)
    values = value_table(game, max_edges=args.max_edges).values.tolist()
    if args.format == "json":
        out.write(_dump({"graph": _graph_summary(g), "variant": args.variant, "values": values}))
    else:
        out.write("".join(f"{_coalition_text(g.m, F)} {v}\n" for F, v in enumerate(values)))
    return EXIT_OK


def _cmd_shapley(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    phi = [format_rational(x) for x in shapley(GameSpec(g, args.variant))]
    if args.format == "json":
        out.write(_dump({"graph": _graph_summary(g), "variant": args.variant, "shapley": phi}))
    else:
        out.write("".join(f"edge {i} ({u}-{v}): {x}\n" for i, ((u, v), x) in enumerate(zip(g.edges, phi))))
    return EXIT_OK


def _cmd_core_check(args, out: TextIO) -> int:
    g = _load_graph(args.path)
    game = GameSpec(g, args.variant)
    x = parse_allocation(_read(args.allocation))
    verdict = core_check(game, x)
    if args.format == "json":
        out.write(_dump({"graph": _graph_summary(g), "variant": args.variant, "core": verdict.to_dict(g.m)}))
    else:
        lines = [
            f"efficient: {_flag(verdict.efficient)} (sum {format_rational(verdict.total)}, grand value {verdict.grand_value})",
            f"rational: {_flag(verdict.rational)}",
            f"in core: {_flag(verdict.in_core)}",
        ]
        if verdict.violating_coalition is not None:
            lines.append(
                f"violating coalition: {_coalition_text(g.m, verdict.violating_coalition)}"
                f" deficit {format_rational(verdict.deficit)}"
            )
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_census(args, out: TextIO) -> int:
    try:
        row = census(args.vertices)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    classes = [args.filter] if args.filter else list(CLASSES)
    reps = {c: row.representatives[c] for c in classes}
    if args.format == "json":
        out.write(_dump({"n": row.n, "counts": row.counts(), "representatives": reps}))
    else:
        lines = [f"n: {row.n}"] + [f"{k}: {v}" for k, v in row.counts().items()]
        for c in classes:
            lines.append(f"{c} representatives: {len(reps[c])}")
            lines.extend("  " + " ".join(f"{u}-{v}" for u, v in edges) for edges in reps[c])
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "gamma": _cmd_gamma,
    "table": _cmd_table,
    "shapley": _cmd_shapley,
    "core-check": _cmd_core_check,
    "census": _cmd_census,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
    except _Exit as exc:
        return exc.status
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        err.write(f"isgames: error: {exc}\n")
        return EXIT_USAGE
    except (InputError, GraphParseError, IsolatedVertexError, AllocationError) as exc:
        err.write(f"isgames: input error: {exc}\n")
        return EXIT_INPUT
    except InstanceTooLargeError as exc:
        err.write(f"isgames: instance too large: {exc}\n")
        return EXIT_TOO_LARGE


def main() -> None:
    sys.exit(run())
