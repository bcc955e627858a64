"""Rooted 3-odd decompositions of connected 6-regular graphs of odd order.

Recursion on the edge-connectivity.  A 2-edge-cut or 4-edge-cut is used to
shrink the graph: the smaller instance is solved and one of its edges is
expanded back into the piece that was cut away.  Without such cuts the graph
is 6-edge-connected and the signed construction applies to the all-negative
signature.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import PreconditionError, TheoremViolation
from ..euler import Trail, disjoint_paths_covering_odd, paths_through_prescribed_edges
from ..factor import odd_circuit_witnesses
from ..graph import (
    EdgeSubset,
    MultiGraph,
    all_even,
    bipartition,
    contract,
    degrees_in,
    edge_components,
    is_connected,
    min_cut,
    restrict,
    vertices_of,
)
from ..signed import SignedGraph, is_balanced
from .base import Decomposition, grow_odd_eulerian, lift_parts
from .signed3 import SolveTrace, signed_rooted_3_odd


@dataclass
class Rooted3Trace:
    """Which reductions a run used, in order."""

    steps: list[str] = field(default_factory=list)
    signed: SolveTrace = field(default_factory=SolveTrace)


def rooted_3_odd(g: MultiGraph, *, trace: Rooted3Trace | None = None) -> Decomposition:
    """Rooted decomposition of ``g`` into three odd closed trails.

    ``g`` must be connected, 6-regular and of odd order.
    """
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not g.is_regular(6):
        bad = next(u for u in range(g.n) if g.degree(u) != 6)
        raise PreconditionError(f"vertex {bad} has degree {g.degree(bad)}, expected 6")
    if g.n % 2 == 0:
        raise PreconditionError(f"graph has even order {g.n}")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    return _solve(g, trace)


def _solve(g: MultiGraph, trace: Rooted3Trace | None) -> Decomposition:
    if g.n == 1:
        if trace is not None:
            trace.steps.append("bouquet")
        return Decomposition(g, tuple(frozenset((e,)) for e in range(g.m)), root=0)
    cut = min_cut(g, 4)
    if cut is None:
        if trace is not None:
            trace.steps.append("six-connected")
        sg = SignedGraph.all_negative(g)
        c1, c2 = odd_circuit_witnesses(g)[:2]
        dec = signed_rooted_3_odd(sg, (c1, c2), check=False, trace=trace.signed if trace else None)
        return Decomposition(g, dec.parts, dec.root)
    if len(cut) == 2:
        if trace is not None:
            trace.steps.append("two-cut")
        return _two_cut(g, cut.side, sorted(cut.edges.members), trace)
    if len(cut) == 4:
        if trace is not None:
            trace.steps.append("four-cut")
        return _four_cut(g, cut.side, sorted(cut.edges.members), trace)
    raise TheoremViolation(f"odd cut of size {len(cut)} in an eulerian graph")


def _sides(g: MultiGraph, side: frozenset[int], cut_edges: Sequence[int], h_odd_order: bool):
    other = frozenset(range(g.n)) - side
    if (len(side) % 2 == 1) != h_odd_order:
        side, other = other, side
    h_side, k_side = side, other
    a = []
    b = []
    for e in cut_edges:
        x, y = g.edges[e]
        if x in h_side:
            a.append(x)
            b.append(y)
        else:
            a.append(y)
            b.append(x)
    h_edges = frozenset(e for e, (x, y) in enumerate(g.edges) if x in h_side and y in h_side)
    k_edges = frozenset(e for e, (x, y) in enumerate(g.edges) if x in k_side and y in k_side)
    return h_side, k_side, a, b, h_edges, k_edges


def _two_cut(g: MultiGraph, side: frozenset[int], cut_edges: list[int], trace: Rooted3Trace | None) -> Decomposition:
    h_side, _, a, _, h_edges, k_edges = _sides(g, side, cut_edges, h_odd_order=True)
    h, vorig, eorig = restrict(g, h_edges, h_side)
    index = {v: i for i, v in enumerate(vorig)}
    child = h.add_edges([(index[a[0]], index[a[1]])])
    origin = [(e,) for e in eorig] + [tuple(cut_edges) + tuple(sorted(k_edges))]
    dec = _solve(child, trace)
    parts = lift_parts(dec.parts, origin)
    for p in parts:
        if len(p) % 2 == 0:
            raise TheoremViolation("two-cut splice produced an even part")
    return Decomposition(g, parts, vorig[dec.root])


def _four_cut(g: MultiGraph, side: frozenset[int], cut_edges: list[int], trace: Rooted3Trace | None) -> Decomposition:
    h_side, k_side, a, b, h_edges, k_edges = _sides(g, side, cut_edges, h_odd_order=False)
    if len(h_edges) % 2:
        raise TheoremViolation("four-cut side of even order has an odd number of edges")
    pieces = split_even_side(g, h_edges, a, cut_edges, k_side, notes=trace.steps if trace else None)
    kg, vorig, eorig = restrict(g, k_edges, k_side)
    index = {v: i for i, v in enumerate(vorig)}
    new_pairs = []
    origin: list[tuple[int, ...]] = [(e,) for e in eorig]
    for (k, l), piece in pieces:
        new_pairs.append((index[b[k]], index[b[l]]))
        origin.append(tuple(sorted(piece | {cut_edges[k], cut_edges[l]})))
    child = kg.add_edges(new_pairs)
    dec = _solve(child, trace)
    return Decomposition(g, lift_parts(dec.parts, origin), vorig[dec.root])


def _path_edges(g: MultiGraph, edges: frozenset[int], s: int, t: int) -> list[int] | None:
    """Edges of a BFS shortest s-t path inside ``edges``."""
    if s == t:
        return []
    parent: dict[int, tuple[int, int]] = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for e, y in g.incidence[x]:
            if e in edges and y not in parent:
                parent[y] = (e, x)
                if y == t:
                    out = []
                    while y != s:
                        e, y = parent[y]
                        out.append(e)
                    return out[::-1]
                queue.append(y)
    return None


def _attach(g: MultiGraph, pieces: list[set[int]], anchors: list[set[int]], leftover: frozenset[int]) -> None:
    """Glue each even component of ``leftover`` onto the first piece it meets."""
    verts = [set(anchors[i]) | set(vertices_of(g, pieces[i])) for i in range(len(pieces))]
    queue = sorted(edge_components(g, leftover), key=min)
    while queue:
        left = []
        for comp in queue:
            cv = vertices_of(g, comp)
            for i in range(len(pieces)):
                if cv & verts[i]:
                    pieces[i] |= comp
                    verts[i] |= cv
                    break
            else:
                left.append(comp)
        if len(left) == len(queue):
            raise TheoremViolation("a leftover component meets neither piece")
        queue = left


Piece = tuple[tuple[int, int], frozenset[int]]


def split_even_side(
    g: MultiGraph,
    h_edges: frozenset[int],
    a: Sequence[int],
    cut_edges: Sequence[int],
    k_side: frozenset[int],
    notes: list[str] | None = None,
) -> list[Piece]:
    """Split the even side ``H`` of a 4-edge-cut into two odd pieces.

    Returns ``[((k, l), H_kl), ((m, n), H_mn)]`` with ``{k, l, m, n} =
    {0, 1, 2, 3}``, where ``H_kl`` has odd size and its odd-degree vertices
    are exactly ``a[k]`` and ``a[l]`` (none when they coincide).
    """
    colours = bipartition(EdgeSubset(g, h_edges))
    if colours is not None:
        if notes is not None:
            notes.append("bipartite-side")
        first = colours[0]
        left = [i for i in range(4) if a[i] in first]
        right = [i for i in range(4) if a[i] not in first]
        if len(left) != 2:
            raise TheoremViolation(f"bipartite side has {len(left)} cut ends in one class; expected 2")
        p1 = _path_edges(g, h_edges, a[left[0]], a[right[0]])
        if p1 is None:
            raise TheoremViolation("bipartite side is disconnected")
        rest = h_edges - frozenset(p1)
        p2 = _path_edges(g, rest, a[left[1]], a[right[1]])
        if p2 is None:
            raise TheoremViolation("second cut pair is not joined after removing the first path")
        pieces = [set(p1), set(p2)]
        anchors = [{a[left[0]], a[right[0]]}, {a[left[1]], a[right[1]]}]
        _attach(g, pieces, anchors, rest - frozenset(p2))
        return [((left[0], right[0]), frozenset(pieces[0])), ((left[1], right[1]), frozenset(pieces[1]))]

    seed = is_balanced(SignedGraph.all_negative(g), h_edges).witness
    if seed is None:
        raise TheoremViolation("non-bipartite side has no odd circuit")
    c = grow_odd_eulerian(g, h_edges, seed.edge_set())
    aset = set(a)
    b_part: set[int] = set()
    d_part: set[int] = set()
    for comp in edge_components(g, h_edges - c):
        (b_part if vertices_of(g, comp) & aset else d_part).update(comp)
    if len(b_part) % 2 == 0:
        if not d_part:
            raise TheoremViolation("even B with empty D")
        y = frozenset(d_part)
        if notes is not None:
            notes.append("pair-through-D")
    else:
        if d_part:
            raise TheoremViolation("odd B with nonempty D")
        y = c
        if notes is not None:
            notes.append("pair-through-C")
    halves = split_by_cut_paths(g, h_edges, a, cut_edges, k_side, y)
    (p_kl, b_kl), (p_mn, b_mn) = halves
    if len(b_kl) % 2 == 0:
        (p_kl, b_kl), (p_mn, b_mn) = (p_mn, b_mn), (p_kl, b_kl)
    if len(b_kl) % 2 == 0:
        raise TheoremViolation("neither half of B_Y is odd")
    return [(p_kl, b_kl), (p_mn, b_mn | y)]


def split_by_cut_paths(
    g: MultiGraph,
    h_edges: frozenset[int],
    a: Sequence[int],
    cut_edges: Sequence[int],
    k_side: frozenset[int],
    y: frozenset[int],
) -> list[Piece]:
    """Decompose ``B_Y`` into an ``a_k``-``a_l``-eulerian and an
    ``a_m``-``a_n``-eulerian subgraph, both meeting the eulerian subgraph ``y``.

    ``B_Y`` is the union of the nontrivial components of ``H - y`` that
    contain a cut end.  Paths from the contracted far side through each cut
    edge into ``y`` are routed by flow, the remaining odd vertices are
    paired by edge-disjoint paths, and the even leftover is glued on.
    """
    aset = set(a)
    b_y: set[int] = set()
    for comp in edge_components(g, h_edges - y):
        if vertices_of(g, comp) & aset:
            b_y |= comp
    b_y_f = frozenset(b_y)
    y_verts = vertices_of(g, y)

    # far side collapses to one vertex; its internal edges become loops there
    gk, vmap, _ = contract(g, k_side)
    hub = vmap[min(k_side)]
    back = {vmap[v]: v for v in range(g.n) if v not in k_side}
    segs = paths_through_prescribed_edges(gk, hub, list(cut_edges), {vmap[v] for v in y_verts})
    paths = [Trail(back[s.start], tuple((e, back[v]) for e, v in s.steps)) for s in segs]
    ends = [p.end for p in paths]
    used = frozenset(e for p in paths for e in p.edges)
    if not used <= b_y_f:
        raise TheoremViolation("a cut-to-Y path leaves B_Y")

    # pair up the path ends
    remaining = b_y_f - used
    by_end: dict[int, list[int]] = {}
    for i, v in enumerate(ends):
        by_end.setdefault(v, []).append(i)
    pairs: list[tuple[tuple[int, int], frozenset[int]]] = []
    exported: dict[int, int] = {}
    for v in sorted(by_end):
        idx = by_end[v]
        if len(idx) % 2:
            exported[v] = idx[0]
            idx = idx[1:]
        for t in range(0, len(idx), 2):
            pairs.append(((idx[t], idx[t + 1]), frozenset()))
    for comp in edge_components(g, remaining):
        deg = degrees_in(g, comp)
        if all(d % 2 == 0 for d in deg.values()):
            continue
        for path in disjoint_paths_covering_odd(EdgeSubset(g, comp)):
            s, t = path.start, path.end
            if s not in exported or t not in exported:
                raise TheoremViolation(f"odd vertex {s if s not in exported else t} of B' is not a path end")
            pairs.append(((exported.pop(s), exported.pop(t)), path.edge_set()))
    if exported or len(pairs) != 2:
        raise TheoremViolation("path ends could not be paired into two pairs")

    pieces: list[set[int]] = []
    anchors: list[set[int]] = []
    labels = []
    for (k, l), mid in pairs:
        k, l = min(k, l), max(k, l)
        labels.append((k, l))
        pieces.append(set(paths[k].edges) | set(mid) | set(paths[l].edges))
        anchors.append({a[k], a[l], ends[k], ends[l]})
    leftover = b_y_f - frozenset(pieces[0]) - frozenset(pieces[1])
    if not all_even(g, leftover):
        raise TheoremViolation("leftover of B_Y has an odd vertex")
    _attach(g, pieces, anchors, leftover)
    return [(labels[0], frozenset(pieces[0])), (labels[1], frozenset(pieces[1]))]
