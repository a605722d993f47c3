"""Command-line interface.

Exit codes: 0 for success (or a true check), 1 for a checked false answer
(improper coloring, inequivalent signatures, failed cross-check), 2 for
usage and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import book as book_mod
from . import complete as complete_mod
from . import graphio, solver
from .coloring import ColoringError, violations
from .graphs import GraphError, switching_equivalent


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str):
    return graphio.parse_graph(_read_text(path))


def _format_switch_set(xs) -> str:
    return " ".join(str(v) for v in sorted(xs))


def cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    result = solver.chromatic_index(g)
    sys.stdout.write(f"chi {result.chromatic_index}\n")
    sys.stdout.write(graphio.write_coloring(result.witness))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    coloring = graphio.parse_coloring(_read_text(args.coloring), g)
    problems = violations(coloring)
    if not problems:
        sys.stdout.write("ok\n")
        return 0
    for p in problems:
        sys.stdout.write(p.describe() + "\n")
    return 1


def cmd_book(args: argparse.Namespace) -> int:
    instance = book_mod.build_book(args.m, args.n, args.k)
    result = book_mod.color_book(instance, args.l)
    if result.discrepancy:
        sys.stderr.write(f"discrepancy: {result.discrepancy}\n")
    sys.stdout.write(graphio.write_graph(result.coloring.graph))
    sys.stdout.write(graphio.write_coloring(result.coloring))
    if args.solve:
        solved = solver.chromatic_index(result.coloring.graph)
        sys.stdout.write(f"solve chi {solved.chromatic_index}\n")
        if solved.chromatic_index != args.n + 1:
            sys.stderr.write(
                f"solver found chi {solved.chromatic_index}, expected {args.n + 1}\n"
            )
            return 1
    return 0


def cmd_normalize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    instance = book_mod.infer_book(g)
    result = book_mod.normalize(instance, g)
    sys.stdout.write(f"switch {_format_switch_set(result.switch_set)}".rstrip() + "\n")
    sys.stdout.write(
        "pages " + " ".join(str(p) for p in result.page_order) + "\n"
    )
    sys.stdout.write(f"l {result.l}\n")
    normalized = book_mod.apply_normalization(instance, g, result)
    sys.stdout.write(graphio.write_graph(normalized))
    return 0


def cmd_complete(args: argparse.Namespace) -> int:
    classes = complete_mod.enumerate_switch_classes(args.n)
    header = ["class", "orbit_size", "min_neg_edges", "neg_triangles", "neg_c5", "chi"]
    if args.enumerate:
        header.append("signature")
    sys.stdout.write("\t".join(header) + "\n")
    for idx, cls in enumerate(classes, start=1):
        row = [
            str(idx),
            str(cls.orbit_size),
            str(cls.min_negative_edges),
            str(cls.negative_triangles),
            str(cls.negative_five_cycles),
            str(cls.chromatic_index),
        ]
        if args.enumerate:
            row.append(
                "".join(
                    "-" if s == -1 else "+" for _, _, s in cls.representative.edges
                )
            )
        sys.stdout.write("\t".join(row) + "\n")
    return 0


def cmd_equivalent(args: argparse.Namespace) -> int:
    g1 = _load_graph(args.graph1)
    g2 = _load_graph(args.graph2)
    witness = switching_equivalent(g1, g2)
    if witness is None:
        sys.stdout.write("not equivalent\n")
        return 1
    sys.stdout.write(f"switch {_format_switch_set(witness)}".rstrip() + "\n")
    return 0


def cmd_probe(args: argparse.Namespace) -> int:
    report = complete_mod.probe_conjecture(
        args.n, args.samples, args.budget, seed=args.seed
    )
    sys.stdout.write(
        f"probe n={report.n} q={report.q} samples={len(report.samples)} "
        f"budget={report.budget} seed={report.seed}\n"
    )
    sys.stdout.write("sample\tneg_edges\toutcome\n")
    for i, sample in enumerate(report.samples, start=1):
        sys.stdout.write(f"{i}\t{sample.negative_edges}\t{sample.outcome}\n")
    sys.stdout.write(
        f"summary solved={report.count('solved')} "
        f"unknown={report.count('unknown')} candidate={report.count('candidate')}\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgcolor", description="Proper edge coloring of signed graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute the chromatic index of a graph file")
    p.add_argument("graph", help="graph file path, or - for stdin")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("book", help="emit a signed book graph and its coloring")
    p.add_argument("--m", type=int, required=True, help="cycle length (>= 3)")
    p.add_argument("--n", type=int, required=True, help="page count (>= 2)")
    p.add_argument("--k", type=int, required=True, help="spine vertices (>= 2)")
    p.add_argument("--l", type=int, required=True, help="negative spokes (0..n)")
    p.add_argument(
        "--solve", action="store_true", help="cross-check with the exact solver"
    )
    p.set_defaults(func=cmd_book)

    p = sub.add_parser(
        "normalize", help="reduce a signed book graph to its canonical signature"
    )
    p.add_argument("graph")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("complete", help="signature classes of a complete graph")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--table", action="store_true", help="class table (default)")
    group.add_argument(
        "--enumerate", action="store_true", help="include representative signatures"
    )
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("equivalent", help="test two signatures for equivalence")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("probe", help="sample large even complete graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--budget", type=float, required=True, help="seconds per sample")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        graphio.FormatError,
        GraphError,
        ColoringError,
        book_mod.BookError,
        complete_mod.CompleteError,
        solver.SolverError,
        OSError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
