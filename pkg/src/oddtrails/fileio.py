"""Text formats for graphs and decompositions, plus DOT export.

Graph file::

    graph 3
    e 0 1 -
    e 1 2
    # comment

Edge ids follow line order; the sign column is optional and defaults to
``+``.  If no edge carries a sign the file reads back as an unsigned graph.

Decomposition file::

    root 0
    part 0: 0 1 2
    # trail: 0 -0-> 1 -1-> 2 -2-> 0
"""

from __future__ import annotations

from pathlib import Path

from .decomp.base import Decomposition, underlying
from .errors import GraphError, OddTrailsError, ParseError
from .euler import eulerian_trail
from .graph import EdgeSubset, MultiGraph
from .signed import SignedGraph


def parse_graph(text: str) -> MultiGraph | SignedGraph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    signs: list[int] = []
    signed = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "graph":
            if n is not None:
                raise ParseError("duplicate graph header", lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise ParseError(f"expected 'graph <n>', got {line!r}", lineno)
            n = int(fields[1])
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before the graph header", lineno)
            if len(fields) not in (3, 4):
                raise ParseError(f"expected 'e <u> <v> [+|-]', got {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"bad vertex id in {line!r}", lineno) from None
            for w in (u, v):
                if not 0 <= w < n:
                    raise ParseError(f"vertex {w} out of range 0..{n - 1}", lineno)
            sign = 1
            if len(fields) == 4:
                if fields[3] not in ("+", "-"):
                    raise ParseError(f"sign must be + or -, got {fields[3]!r}", lineno)
                sign = 1 if fields[3] == "+" else -1
                signed = True
            edges.append((u, v))
            signs.append(sign)
        else:
            raise ParseError(f"unknown directive {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'graph <n>' header")
    g = MultiGraph(n, tuple(edges))
    return SignedGraph(g, tuple(signs)) if signed else g


def format_graph(g: MultiGraph | SignedGraph) -> str:
    graph = underlying(g)
    lines = [f"graph {graph.n}"]
    for e, (u, v) in enumerate(graph.edges):
        if isinstance(g, SignedGraph):
            lines.append(f"e {u} {v} {'+' if g.signs[e] > 0 else '-'}")
        else:
            lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def _trail_comment(graph: MultiGraph, part: frozenset[int], root: int | None) -> str:
    try:
        start = root if root is not None and any(root in graph.edges[e] for e in part) else None
        t = eulerian_trail(EdgeSubset(graph, part), start=start)
    except (OddTrailsError, ValueError):
        return "# trail: -"
    out = [str(t.start)]
    for e, v in t.steps:
        out.append(f"-{e}-> {v}")
    return "# trail: " + " ".join(out)


def format_decomposition(dec: Decomposition) -> str:
    graph = dec.graph
    lines = [f"root {'-' if dec.root is None else dec.root}"]
    for i, part in enumerate(dec.parts):
        lines.append(f"part {i}: " + " ".join(str(e) for e in sorted(part)))
        lines.append(_trail_comment(graph, part, dec.root))
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str, g: MultiGraph | SignedGraph) -> Decomposition:
    root: int | None = None
    seen_root = False
    parts: list[frozenset[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("root"):
            fields = line.split()
            if seen_root or len(fields) != 2:
                raise ParseError(f"bad root line {line!r}", lineno)
            seen_root = True
            if fields[1] != "-":
                try:
                    root = int(fields[1])
                except ValueError:
                    raise ParseError(f"bad root {fields[1]!r}", lineno) from None
        elif line.startswith("part"):
            head, sep, body = line.partition(":")
            fields = head.split()
            if not sep or len(fields) != 2 or fields[1] != str(len(parts)):
                raise ParseError(f"expected 'part {len(parts)}: <edge ids>', got {line!r}", lineno)
            try:
                parts.append(frozenset(int(x) for x in body.split()))
            except ValueError:
                raise ParseError(f"bad edge id in {line!r}", lineno) from None
        else:
            raise ParseError(f"unknown directive {line.split()[0]!r}", lineno)
    if not seen_root:
        raise ParseError("missing 'root' line")
    return Decomposition(g, tuple(parts), root)


def read_graph(path: str | Path) -> MultiGraph | SignedGraph:
    try:
        return parse_graph(Path(path).read_text())
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def write_graph(path: str | Path, g: MultiGraph | SignedGraph) -> None:
    Path(path).write_text(format_graph(g))


def read_decomposition(path: str | Path, g: MultiGraph | SignedGraph) -> Decomposition:
    return parse_decomposition(Path(path).read_text(), g)


def write_decomposition(path: str | Path, dec: Decomposition) -> None:
    Path(path).write_text(format_decomposition(dec))


_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def to_dot(g: MultiGraph | SignedGraph, dec: Decomposition | None = None) -> str:
    """Graphviz source: parts coloured, root drawn double, negative edges dashed."""
    graph = underlying(g)
    colour: dict[int, str] = {}
    if dec is not None:
        for i, part in enumerate(dec.parts):
            for e in part:
                colour[e] = _PALETTE[i % len(_PALETTE)]
    lines = ["graph G {"]
    for v in range(graph.n):
        shape = "doublecircle" if dec is not None and dec.root == v else "circle"
        lines.append(f"  {v} [shape={shape}];")
    for e, (u, v) in enumerate(graph.edges):
        attrs = [f'label="{e}"']
        if e in colour:
            attrs.append(f"color={colour[e]}")
        if isinstance(g, SignedGraph) and g.signs[e] < 0:
            attrs.append("style=dashed")
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
