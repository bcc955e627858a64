"""Command-line front end.

Exit codes: 0 success, 1 input or precondition error, 2 certified absence,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .decomp import absence_reason, k_odd, rooted_2_odd, rooted_3_odd, signed_rooted_3_odd
from .decomp.base import Decomposition, underlying
from .errors import OddTrailsError, ParseError
from .euler import Trail, check_trail, eulerian_trail
from .fileio import format_decomposition, format_graph, read_decomposition, read_graph, to_dot
from .generate import InstanceSpec, gen
from .graph import EdgeSubset, MultiGraph, bipartition, edge_connectivity
from .oracle import DEFAULT_BOUND, scan_roots
from .signed import SignedGraph, is_balanced, is_tightly_unbalanced, negative_parity
from .verify import verify_decomposition

OK, FAILED, ABSENT, REJECTED = 0, 1, 2, 3


def _read_witnesses(path: str, g: MultiGraph) -> list[Trail]:
    out = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            edges = frozenset(int(x) for x in line.split())
        except ValueError:
            raise ParseError(f"expected edge ids, got {line!r}", lineno) from None
        if any(not 0 <= e < g.m for e in edges):
            raise ParseError(f"edge id out of range in {line!r}", lineno)
        t = eulerian_trail(EdgeSubset(g, edges))
        check_trail(g, t, circuit=True)
        out.append(t)
    return out


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_decompose(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    graph = underlying(g)
    witnesses = _read_witnesses(args.witnesses, graph) if args.witnesses else None
    mode = args.mode
    expect: dict = {}
    if mode == "k-odd":
        if args.k is None:
            print("error: --k is required for k-odd", file=sys.stderr)
            return FAILED
        dec = k_odd(graph, args.k, witnesses)
        expect = {"k": args.k}
    elif mode == "rooted2":
        reason = absence_reason(graph)
        if reason is not None:
            print(f"absent: {reason}", file=sys.stderr)
            return ABSENT
        dec = rooted_2_odd(graph)
        expect = {"k": 2, "rooted": True}
    elif mode == "rooted3":
        dec = rooted_3_odd(graph)
        expect = {"k": 3, "rooted": True}
    else:
        sg = g if isinstance(g, SignedGraph) else SignedGraph.all_negative(graph)
        pair = (witnesses[0], witnesses[1]) if witnesses else None
        dec = signed_rooted_3_odd(sg, pair)
        g = sg
        expect = {"k": 3, "rooted": True, "signed_odd": True}
    assert dec is not None
    cert = verify_decomposition(g, dec, **expect)
    if not cert:
        print(f"self-check failed: {cert.summary()}", file=sys.stderr)
        return REJECTED
    _emit(format_decomposition(dec), args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(g, dec))
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.input)
    dec = read_decomposition(args.decomposition, g)
    signed_odd = args.signed_odd
    if signed_odd and not isinstance(g, SignedGraph):
        g = SignedGraph.all_positive(g)
    cert = verify_decomposition(
        g, Decomposition(g, dec.parts, dec.root), k=args.k, odd=not args.no_odd, rooted=args.rooted, signed_odd=signed_odd
    )
    if cert:
        print(f"pass: {', '.join(cert.checked)}")
        return OK
    for message in cert.messages:
        print(message)
    return REJECTED


def _yes(flag: bool) -> str:
    return "true" if flag else "false"


def analyze_lines(g: MultiGraph | SignedGraph) -> list[str]:
    graph = underlying(g)
    sg = g if isinstance(g, SignedGraph) else SignedGraph.all_positive(graph)
    degrees = sorted(set(graph.degrees()))
    balanced = bool(is_balanced(sg))
    tight = ample = False
    if not balanced:
        tight = is_tightly_unbalanced(sg) is not None
        ample = not tight
    return [
        f"n: {graph.n}",
        f"edges: {graph.m}",
        f"degrees: {' '.join(map(str, degrees))}",
        f"lambda: {edge_connectivity(graph)}",
        f"bipartite: {_yes(bipartition(graph) is not None)}",
        f"balanced: {_yes(balanced)}",
        f"parity: {negative_parity(sg)}",
        f"tightly_unbalanced: {_yes(tight)}",
        f"amply_unbalanced: {_yes(ample)}",
    ]


def cmd_analyze(args: argparse.Namespace) -> int:
    for line in analyze_lines(read_graph(args.input)):
        print(line)
    return OK


def cmd_gen(args: argparse.Namespace) -> int:
    spec = InstanceSpec(
        degree=args.degree,
        order=args.order,
        seed=args.seed,
        floor=args.floor,
        kind="regular-multigraph" if args.sign == "none" else "signed",
        sign="all-negative" if args.sign == "none" else args.sign,
        cut=args.cut,
    )
    _emit(format_graph(gen(spec)), args.output)
    return OK


def cmd_scan(args: argparse.Namespace) -> int:
    g = underlying(read_graph(args.input))
    scan = scan_roots(g, args.d, bound=args.bound, jobs=args.jobs)
    for v, ok in scan.roots.items():
        print(f"{v}: {_yes(ok)}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddtrails", description="Odd closed-trail decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="compute a decomposition")
    p.add_argument("--mode", choices=["k-odd", "rooted2", "rooted3", "signed-rooted3"], required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--witnesses", help="file with one circuit (edge ids) per line")
    p.add_argument("--dot", help="also write a Graphviz rendering here")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition file")
    p.add_argument("--input", required=True)
    p.add_argument("--decomposition", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--rooted", action="store_true")
    p.add_argument("--signed-odd", action="store_true")
    p.add_argument("--no-odd", action="store_true", help="do not require odd part sizes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="print structural properties")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="generate a random regular multigraph")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--floor", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cut", type=int)
    p.add_argument("--sign", choices=["none", "all-negative", "random-odd", "random"], default="none")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("scan", help="which vertices are roots of a rooted d-odd decomposition")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
    except OddTrailsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
