"""Command-line front end.

Four subcommands: ``laws`` runs a named law suite, ``matmul`` is a small
matrix calculator over the built-in semirings, ``shortest-path`` folds
tropical matrix powers into a bounded-hop distance table, and
``roundtrip`` drives the adjunction transposes there and back.

Exit codes: 0 all checks passed, 1 a law was violated, 2 usage or parse
error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .adjunctions import (
    ADJUNCTION_NAMES,
    SUITE_NAMES,
    SuiteConfig,
    run_roundtrip,
    run_suite,
)
from .algebra import TROPICAL, parse_scalar, render_scalar
from .errors import FormatError, SemicatError
from .matcat import (
    Matrix,
    mat_add,
    mat_compose,
    mat_dagger,
    mat_identity,
    mat_tensor,
    parse_mat_text,
    render_mat_text,
)

__all__ = ["GraphSpec", "parse_graph_text", "graph_matrix", "bounded_paths", "main"]


@dataclass(frozen=True)
class GraphSpec:
    """A weighted directed graph: node count plus (src, dst, weight) edges."""

    nodes: int
    edges: tuple


def parse_graph_text(text: str) -> GraphSpec:
    """Parse the line-oriented graph format: a node count line, then one
    ``src dst weight`` line per edge. Blank lines are ignored."""
    count = None
    edges = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        if count is None:
            if len(fields) != 1:
                raise FormatError(f"line {ln}: expected the node count alone")
            try:
                count = int(fields[0])
            except ValueError:
                raise FormatError(f"line {ln}: bad node count {fields[0]!r}") from None
            if count < 0:
                raise FormatError(f"line {ln}: negative node count")
            continue
        if len(fields) != 3:
            raise FormatError(f"line {ln}: expected 'src dst weight'")
        try:
            src, dst = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {ln}: bad node index in {line!r}") from None
        if not 0 <= src < count or not 0 <= dst < count:
            raise FormatError(f"line {ln}: node index out of range (n = {count})")
        try:
            weight = parse_scalar(TROPICAL, fields[2])
        except FormatError as exc:
            raise FormatError(f"line {ln}: {exc}") from None
        edges.append((src, dst, weight))
    if count is None:
        raise FormatError("empty graph file: expected a node count")
    return GraphSpec(count, tuple(edges))


def graph_matrix(spec: GraphSpec) -> Matrix:
    """One-hop weight matrix over the tropical semiring. Parallel edges
    collapse to their minimum; absent edges are the tropical zero."""
    n = spec.nodes
    entries = [TROPICAL.zero] * (n * n)
    for src, dst, weight in spec.edges:
        entries[src * n + dst] = TROPICAL.add(entries[src * n + dst], weight)
    return Matrix(TROPICAL, n, n, tuple(entries))


def bounded_paths(a: Matrix, hops: int) -> Matrix:
    """Fold of a^0 + a^1 + ... + a^hops using only categorical composition
    and hom-set addition. Over the tropical semiring this is the table of
    cheapest paths with at most ``hops`` edges."""
    acc = mat_identity(a.semiring, a.rows)
    power = mat_identity(a.semiring, a.rows)
    for _ in range(hops):
        power = mat_compose(power, a)
        acc = mat_add(acc, power)
    return acc


def _cmd_laws(args) -> int:
    config = SuiteConfig(
        suite=args.suite,
        semiring=args.semiring,
        monoid=args.monoid,
        seed=args.seed,
        cases=args.cases,
    )
    report = run_suite(config)
    print(report.render())
    return 0 if report.ok else 1


def _cmd_matmul(args) -> int:
    a = parse_mat_text(Path(args.a).read_text())
    if args.op == "dagger":
        if args.b is not None:
            raise FormatError("dagger takes a single matrix; drop -B")
        result = mat_dagger(a)
    else:
        if args.b is None:
            raise FormatError(f"{args.op} needs a second matrix via -B")
        b = parse_mat_text(Path(args.b).read_text())
        result = mat_compose(a, b) if args.op == "compose" else mat_tensor(a, b)
    sys.stdout.write(render_mat_text(result))
    return 0


def _cmd_shortest_path(args) -> int:
    spec = parse_graph_text(Path(args.graph).read_text())
    table = bounded_paths(graph_matrix(spec), args.max_hops)
    lines = []
    for i in range(table.rows):
        lines.append(" ".join(render_scalar(e) for e in table.row(i)))
    print("\n".join(lines))
    return 0


def _cmd_roundtrip(args) -> int:
    report = run_roundtrip(args.adjunction, args.semiring, args.involutive)
    print(report.render())
    return 0 if report.ok else 1


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semicat",
        description="law checking and matrix algebra over finite semiring instances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    laws = sub.add_parser("laws", help="run a named law suite")
    laws.add_argument("--suite", required=True, choices=SUITE_NAMES)
    laws.add_argument("--semiring", default=None)
    laws.add_argument("--monoid", default=None)
    laws.add_argument("--seed", type=_nonneg_int, default=0)
    laws.add_argument("--cases", type=_positive_int, default=100)
    laws.set_defaults(func=_cmd_laws)

    matmul = sub.add_parser("matmul", help="compose, tensor, or dagger .mat files")
    matmul.add_argument("--op", required=True, choices=("compose", "tensor", "dagger"))
    matmul.add_argument("-A", dest="a", required=True, metavar="FILE")
    matmul.add_argument("-B", dest="b", default=None, metavar="FILE")
    matmul.set_defaults(func=_cmd_matmul)

    sp = sub.add_parser(
        "shortest-path", help="bounded-hop distance table of a weighted graph"
    )
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--max-hops", type=_nonneg_int, required=True)
    sp.set_defaults(func=_cmd_shortest_path)

    rt = sub.add_parser("roundtrip", help="round-trip one adjunction's transposes")
    rt.add_argument("--adjunction", required=True, choices=ADJUNCTION_NAMES)
    rt.add_argument("--semiring", required=True)
    rt.add_argument("--involutive", action="store_true")
    rt.set_defaults(func=_cmd_roundtrip)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except SemicatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
