"""Trails, circuits, open-trail decompositions and fans."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FlowShortfall, GraphError, PreconditionError
from .graph import (
    EdgeSubset,
    MultiGraph,
    UnitFlow,
    as_edge_set,
    degrees_in,
    edge_components,
    vertices_of,
)


@dataclass(frozen=True)
class Trail:
    """A walk ``start, e1, v1, e2, v2, ...`` with distinct edges.

    ``steps`` holds ``(edge, arrival vertex)`` pairs.  A trail with no steps
    is a trivial path sitting at ``start``.
    """

    start: int
    steps: tuple[tuple[int, int], ...] = ()

    @property
    def end(self) -> int:
        return self.steps[-1][1] if self.steps else self.start

    @property
    def closed(self) -> bool:
        return bool(self.steps) and self.end == self.start

    @property
    def edges(self) -> list[int]:
        return [e for e, _ in self.steps]

    @property
    def vertices(self) -> list[int]:
        return [self.start] + [v for _, v in self.steps]

    def __len__(self) -> int:
        return len(self.steps)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def reversed(self) -> Trail:
        verts = self.vertices
        steps = tuple((e, verts[i]) for i, (e, _) in reversed(list(enumerate(self.steps))))
        return Trail(self.end, steps)

    def then(self, other: Trail) -> Trail:
        if other.start != self.end:
            raise PreconditionError(f"cannot join a trail ending at {self.end} to one starting at {other.start}")
        return Trail(self.start, self.steps + other.steps)


def check_trail(
    g: MultiGraph,
    t: Trail,
    *,
    closed: bool | None = None,
    path: bool = False,
    circuit: bool = False,
) -> None:
    """Raise ``GraphError`` unless ``t`` is a valid trail of ``g`` of the requested kind."""
    x = t.start
    if not 0 <= x < g.n:
        raise GraphError(f"trail starts at unknown vertex {x}")
    used: set[int] = set()
    for i, (e, y) in enumerate(t.steps):
        if not 0 <= e < g.m:
            raise GraphError(f"step {i} uses unknown edge {e}")
        if e in used:
            raise GraphError(f"edge {e} repeats in trail")
        used.add(e)
        if sorted(g.edges[e]) != sorted((x, y)):
            raise GraphError(f"step {i}: edge {e} does not join {x} and {y}")
        x = y
    if closed is not None and t.closed != closed:
        raise GraphError("trail is " + ("open" if closed else "closed"))
    verts = t.vertices
    if path and len(set(verts)) != len(verts):
        raise GraphError("path repeats a vertex")
    if circuit:
        if not t.closed:
            raise GraphError("circuit is not closed")
        if len(set(verts[:-1])) != len(verts) - 1:
            raise GraphError("circuit repeats an inner vertex")


def _hierholzer(g: MultiGraph, edges: frozenset[int], start: int) -> Trail:
    adj = [[(e, w) for e, w in g.incidence[v] if e in edges] for v in range(g.n)]
    ptr = [0] * g.n
    used: set[int] = set()
    stack: list[tuple[int, int]] = [(start, -1)]
    out: list[tuple[int, int]] = []
    while stack:
        v, _ = stack[-1]
        row = adj[v]
        while ptr[v] < len(row) and row[ptr[v]][0] in used:
            ptr[v] += 1
        if ptr[v] < len(row):
            e, w = row[ptr[v]]
            used.add(e)
            stack.append((w, e))
        else:
            out.append(stack.pop())
    out.reverse()
    return Trail(out[0][0], tuple((e, v) for v, e in out[1:]))


def eulerian_trail(g: MultiGraph | EdgeSubset, start: int | None = None) -> Trail:
    """A trail through every edge exactly once.

    Closed when all degrees are even (starting at ``start`` or the least
    vertex with an edge), otherwise open from the least odd vertex.
    """
    graph, edges = as_edge_set(g)
    if not edges:
        raise PreconditionError("no edges to traverse")
    comps = edge_components(graph, edges)
    if len(comps) > 1:
        raise PreconditionError(f"edge set is disconnected ({len(comps)} components)")
    deg = degrees_in(graph, edges)
    odd = sorted(v for v, d in deg.items() if d % 2)
    if len(odd) > 2:
        raise PreconditionError(f"{len(odd)} odd-degree vertices; at most two allowed")
    if odd:
        if start is not None and start not in odd:
            raise PreconditionError(f"an open eulerian trail cannot start at even vertex {start}")
        first = odd[0] if start is None else start
    else:
        first = min(deg) if start is None else start
        if first not in deg:
            raise PreconditionError(f"start vertex {first} is not on the edge set")
    return _hierholzer(graph, edges, first)


def split_closed_trail(t: Trail) -> list[Trail]:
    """Cut a closed trail into circuits at repeated vertices."""
    out: list[Trail] = []
    stack: list[tuple[int, int]] = []  # (edge, arrival)
    where = {t.start: 0}
    for e, y in t.steps:
        stack.append((e, y))
        if y in where:
            i = where[y]
            piece = stack[i:]
            del stack[i:]
            for _, z in piece[:-1]:
                del where[z]
            out.append(Trail(y, tuple(piece)))
        else:
            where[y] = len(stack)
    return out


def circuit_decomposition(g: MultiGraph | EdgeSubset) -> list[Trail]:
    """Partition the edges into circuits; every degree must be even."""
    graph, edges = as_edge_set(g)
    deg = degrees_in(graph, edges)
    odd = sorted(v for v, d in deg.items() if d % 2)
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree {deg[odd[0]]}")
    out: list[Trail] = []
    for comp in edge_components(graph, edges):
        out.extend(split_closed_trail(_hierholzer(graph, comp, min(vertices_of(graph, comp)))))
    return out


def circuit_decomposition_including(g: MultiGraph | EdgeSubset, required: Sequence[Trail]) -> list[Trail]:
    """A circuit decomposition whose first entries are ``required`` verbatim."""
    graph, edges = as_edge_set(g)
    taken: dict[int, int] = {}
    for i, c in enumerate(required):
        check_trail(graph, c, circuit=True)
        for e in c.edges:
            if e not in edges:
                raise PreconditionError(f"required circuit {i} uses edge {e} outside the graph")
            if e in taken:
                raise PreconditionError(f"required circuits {taken[e]} and {i} share edge {e}")
            taken[e] = i
    rest = EdgeSubset(graph, edges - frozenset(taken))
    return list(required) + circuit_decomposition(rest)


def open_trail_decomposition(g: MultiGraph | EdgeSubset) -> list[Trail]:
    """Split a connected graph with ``2k`` odd vertices into ``k`` open trails.

    Odd vertices are paired in ascending order by auxiliary edges, an
    eulerian circuit of the augmented graph is taken, and the circuit is cut
    at the auxiliary edges.
    """
    graph, edges = as_edge_set(g)
    if len(edge_components(graph, edges)) != 1:
        raise PreconditionError("open trail decomposition needs a connected, nonempty edge set")
    deg = degrees_in(graph, edges)
    odd = sorted(v for v, d in deg.items() if d % 2)
    if not odd:
        raise PreconditionError("no odd vertices: use circuit_decomposition instead")
    aux_pairs = [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    aug = graph.add_edges(aux_pairs)
    aux = frozenset(range(graph.m, aug.m))
    tour = _hierholzer(aug, edges | aux, odd[0])
    # rotate so the tour begins right after an auxiliary edge
    steps = list(tour.steps)
    first_aux = next(i for i, (e, _) in enumerate(steps) if e in aux)
    steps = steps[first_aux + 1:] + steps[: first_aux + 1]
    start = steps[-1][1]
    trails: list[Trail] = []
    current: list[tuple[int, int]] = []
    x = start
    for e, y in steps:
        if e in aux:
            trails.append(Trail(x, tuple(current)))
            current = []
            x = y
        else:
            current.append((e, y))
    return trails


def shortcut(t: Trail) -> Trail:
    """Drop every closed detour so that no vertex repeats; ends are kept."""
    steps: list[tuple[int, int]] = []
    where = {t.start: 0}
    for e, y in t.steps:
        if y in where:
            cut = where[y]
            for _, z in steps[cut:]:
                where.pop(z, None)
            del steps[cut:]
            where[y] = cut
        else:
            steps.append((e, y))
            where[y] = len(steps)
    return Trail(t.start, tuple(steps))


def disjoint_paths_covering_odd(g: MultiGraph | EdgeSubset) -> list[Trail]:
    """``k`` edge-disjoint paths whose ends are the ``2k`` odd vertices."""
    return [shortcut(t) for t in open_trail_decomposition(g)]


@dataclass(frozen=True)
class Fan:
    hub: int
    spokes: tuple[Trail, ...]


def fan(g: MultiGraph, v: int, targets: Sequence[int]) -> Fan:
    """Edge-disjoint paths from ``v`` to each of ``targets`` (repeats allowed).

    An auxiliary vertex joined once to every target absorbs the flow; spoke
    ``i`` is the flow path through the ``i``-th auxiliary edge, stripped of
    that edge.
    """
    if v in targets:
        raise PreconditionError(f"hub {v} appears among the targets")
    k = len(targets)
    sink = g.n
    aug = g.add_vertex().add_edges((t, sink) for t in targets)
    flow = UnitFlow(aug)
    value = flow.run(v, sink, limit=k)
    if value < k:
        raise FlowShortfall(f"only {value} edge-disjoint paths reach the targets; {k} requested", value)
    spokes: list[Trail | None] = [None] * k
    for steps in flow.paths(v, sink):
        last_edge = steps[-1][0]
        spokes[last_edge - g.m] = Trail(v, tuple(steps[:-1]))
    return Fan(v, tuple(s for s in spokes if s is not None))


def paths_through_prescribed_edges(
    g: MultiGraph, b: int, first_edges: Sequence[int], target: Iterable[int]
) -> list[Trail]:
    """Edge-disjoint paths from ``b`` into the vertex set ``target``.

    Path ``i`` leaves ``b`` along ``first_edges[i]`` and is cut at the first
    target vertex it meets.  The returned trail for ``i`` is the part after
    the prescribed edge, so it starts at the far end of ``first_edges[i]``
    and may be trivial.
    """
    target = frozenset(target)
    if not target:
        raise PreconditionError("empty target set")
    if b in target:
        raise PreconditionError(f"vertex {b} lies in the target set")
    if len(set(first_edges)) != len(first_edges):
        raise PreconditionError("prescribed first edges repeat")
    for e in first_edges:
        if b not in g.edges[e] or g.is_loop(e):
            raise PreconditionError(f"edge {e} is not a non-loop edge at vertex {b}")
    k = len(first_edges)
    sink = g.n
    aug = g.add_vertex().add_edges((t, sink) for t in sorted(target) for _ in range(k))
    chosen = frozenset(first_edges)
    allowed = frozenset(e for e in range(aug.m) if e in chosen or (e >= g.m) or b not in aug.edges[e])
    flow = UnitFlow(aug, allowed)
    value = flow.run(b, sink, limit=k)
    if value < k:
        raise FlowShortfall(f"only {value} edge-disjoint paths from {b} reach the target; {k} requested", value)
    by_edge: dict[int, Trail] = {}
    for steps in flow.paths(b, sink):
        first, a = steps[0]
        seg: list[tuple[int, int]] = []
        if a not in target:
            for e, y in steps[1:]:
                seg.append((e, y))
                if y in target:
                    break
        by_edge[first] = Trail(a, tuple(seg))
    return [by_edge[e] for e in first_edges]


def iter_circuits(g: MultiGraph | EdgeSubset) -> Iterator[Trail]:
    """Every circuit exactly once (loops included), in DFS discovery order.

    A circuit is reported from its least vertex; exponential in general, so
    meant for small graphs.
    """
    graph, edges = as_edge_set(g)
    seen: set[frozenset[int]] = set()
    adj = [sorted((e, w) for e, w in graph.incidence[v] if e in edges) for v in range(graph.n)]
    for s in range(graph.n):
        for e, w in adj[s]:
            if w == s:
                key = frozenset((e,))
                if key not in seen:
                    seen.add(key)
                    yield Trail(s, ((e, s),))
        stack: list[tuple[int, int]] = []
        on_path = {s}

        def extend(x: int) -> Iterator[Trail]:
            for e, y in adj[x]:
                if y < s or y == x or any(e == f for f, _ in stack):
                    continue
                if y == s:
                    if not stack:
                        continue
                    steps = tuple(stack) + ((e, s),)
                    key = frozenset(f for f, _ in steps)
                    if key not in seen:
                        seen.add(key)
                        yield Trail(s, steps)
                    continue
                if y in on_path:
                    continue
                on_path.add(y)
                stack.append((e, y))
                yield from extend(y)
                stack.pop()
                on_path.discard(y)

        yield from extend(s)
