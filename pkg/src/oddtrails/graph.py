"""Multigraphs with loops and parallel edges.

Vertices and edges are dense integer ids.  A graph value never changes
after construction; every "mutation" returns a new graph together with
maps that relate the new ids to the old ones, so solutions found on a
derived graph can be lifted back.

All traversals visit vertices and edges in ascending id order, which makes
every function here deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import GraphError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True, eq=True)
class MultiGraph:
    """An undirected multigraph on vertices ``0..n-1``.

    ``edges[i]`` holds the endpoints of edge ``i``; a loop is stored as
    ``(v, v)`` and contributes two to the degree of ``v``.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(edge, other endpoint)`` pairs; loops appear twice."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append((e, v))
            inc[v].append((e, u))
        return tuple(tuple(row) for row in inc)

    @cached_property
    def _degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.incidence)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def endpoints(self, e: int) -> Edge:
        return self.edges[e]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if u == v:
            return w
        if w == v:
            return u
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def edge_ids(self) -> frozenset[int]:
        return frozenset(range(self.m))

    def loops_at(self, v: int) -> list[int]:
        return [e for e, w in self.incidence[v] if w == v][::2]

    def odd_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self._degrees[v] % 2]

    def is_regular(self, degree: int) -> bool:
        return all(d == degree for d in self._degrees)

    def add_edges(self, pairs: Iterable[Edge]) -> MultiGraph:
        """Return a copy with ``pairs`` appended; old edge ids are unchanged."""
        return MultiGraph(self.n, self.edges + tuple((int(u), int(v)) for u, v in pairs))

    def add_vertex(self) -> MultiGraph:
        return MultiGraph(self.n + 1, self.edges)

    def audit(self) -> None:
        """Check the incidence store against the edge list (debug aid)."""
        seen = [0] * self.m
        for v, row in enumerate(self.incidence):
            for e, w in row:
                if v not in self.edges[e] or w != self.other(e, v):
                    raise GraphError(f"incidence of vertex {v} disagrees with edge {e}")
                seen[e] += 1
        if any(c != 2 for c in seen):
            raise GraphError("some edge is not listed exactly twice in the incidence store")
        if sum(self._degrees) != 2 * self.m:
            raise GraphError("handshake identity fails")


def build(n: int, endpoint_pairs: Sequence[Edge]) -> MultiGraph:
    """Build a graph; edge ids follow the order of ``endpoint_pairs``."""
    for i, (u, v) in enumerate(endpoint_pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i} ({u}, {v}) has an endpoint outside 0..{n - 1}")
    return MultiGraph(n, tuple((int(u), int(v)) for u, v in endpoint_pairs))


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge ids of ``parent``; queries see only these edges."""

    parent: MultiGraph
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = [e for e in self.members if not 0 <= e < self.parent.m]
        if bad:
            raise GraphError(f"edge id {min(bad)} is not an edge of the parent graph")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, e: object) -> bool:
        return e in self.members

    def degree(self, v: int) -> int:
        return sum(1 for e, _ in self.parent.incidence[v] if e in self.members)

    def vertices(self) -> frozenset[int]:
        return vertices_of(self.parent, self.members)

    def odd_vertices(self) -> list[int]:
        deg = degrees_in(self.parent, self.members)
        return sorted(v for v, d in deg.items() if d % 2)


class Component(NamedTuple):
    vertices: frozenset[int]
    edges: EdgeSubset


@dataclass(frozen=True)
class Cut:
    """The edges between ``side`` and its complement."""

    side: frozenset[int]
    edges: EdgeSubset

    def __len__(self) -> int:
        return len(self.edges)


def as_edge_set(g: MultiGraph | EdgeSubset) -> tuple[MultiGraph, frozenset[int]]:
    if isinstance(g, EdgeSubset):
        return g.parent, g.members
    return g, g.edge_ids()


def vertices_of(g: MultiGraph, edges: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for e in edges:
        out.update(g.edges[e])
    return frozenset(out)


def degrees_in(g: MultiGraph, edges: Iterable[int]) -> dict[int, int]:
    """Degree of every vertex touched by ``edges`` (loops count twice)."""
    deg: dict[int, int] = {}
    for e in edges:
        u, v = g.edges[e]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


def all_even(g: MultiGraph, edges: Iterable[int]) -> bool:
    return all(d % 2 == 0 for d in degrees_in(g, edges).values())


def _edge_components(g: MultiGraph, edges: frozenset[int]) -> list[tuple[frozenset[int], frozenset[int]]]:
    seen: set[int] = set()
    out = []
    for start in sorted(vertices_of(g, edges)):
        if start in seen:
            continue
        verts = {start}
        comp_edges: set[int] = set()
        queue = deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            for e, y in g.incidence[x]:
                if e not in edges:
                    continue
                comp_edges.add(e)
                if y not in seen:
                    seen.add(y)
                    verts.add(y)
                    queue.append(y)
        out.append((frozenset(verts), frozenset(comp_edges)))
    return out


def components(g: MultiGraph | EdgeSubset) -> list[Component]:
    """Connected components that carry at least one edge, by least vertex.

    Isolated vertices are not included; see :func:`isolated_vertices`.
    """
    graph, edges = as_edge_set(g)
    return [Component(vs, EdgeSubset(graph, es)) for vs, es in _edge_components(graph, edges)]


def isolated_vertices(g: MultiGraph | EdgeSubset) -> list[int]:
    graph, edges = as_edge_set(g)
    touched = vertices_of(graph, edges)
    return [v for v in range(graph.n) if v not in touched]


def edge_components(g: MultiGraph, edges: Iterable[int]) -> list[frozenset[int]]:
    """Edge sets of the components of the subgraph formed by ``edges``."""
    return [es for _, es in _edge_components(g, frozenset(edges))]


def is_connected_edges(g: MultiGraph, edges: Iterable[int]) -> bool:
    """True when the edge-induced subgraph is connected (and nonempty)."""
    return len(_edge_components(g, frozenset(edges))) == 1


def is_connected(g: MultiGraph) -> bool:
    """True when every vertex of ``g`` lies in one component."""
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for _, y in g.incidence[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# unit-capacity flows


class UnitFlow:
    """Edge-disjoint path machinery on an undirected multigraph.

    Each edge carries one unit in either direction.  ``flow[e]`` is ``+1``
    when the unit runs from ``edges[e][0]`` to ``edges[e][1]``, ``-1`` for
    the opposite direction and ``0`` when unused.  Loops never carry flow.
    """

    def __init__(self, g: MultiGraph, allowed: Iterable[int] | None = None) -> None:
        self.g = g
        self.allowed = None if allowed is None else frozenset(allowed)
        self.flow = [0] * g.m

    def _usable(self, e: int) -> bool:
        return (self.allowed is None or e in self.allowed) and not self.g.is_loop(e)

    def _residual(self, e: int, x: int) -> bool:
        # room to push one unit from x across e
        u, _ = self.g.edges[e]
        f = self.flow[e] if x == u else -self.flow[e]
        return f < 1

    def _push(self, e: int, x: int) -> None:
        u, _ = self.g.edges[e]
        self.flow[e] += 1 if x == u else -1

    def _augment(self, s: int, t: int) -> bool:
        parent: dict[int, tuple[int, int]] = {s: (-1, -1)}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e, y in self.g.incidence[x]:
                if y in parent or not self._usable(e) or not self._residual(e, x):
                    continue
                parent[y] = (e, x)
                if y == t:
                    while y != s:
                        e, x = parent[y]
                        self._push(e, x)
                        y = x
                    return True
                queue.append(y)
        return False

    def run(self, s: int, t: int, limit: int | None = None) -> int:
        """Push augmenting paths from ``s`` to ``t``; stop early at ``limit``."""
        if s == t:
            raise PreconditionError("source and sink coincide")
        value = 0
        while limit is None or value < limit:
            if not self._augment(s, t):
                break
            value += 1
        return value

    def source_side(self, s: int) -> frozenset[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e, y in self.g.incidence[x]:
                if y not in seen and self._usable(e) and self._residual(e, x):
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def paths(self, s: int, t: int) -> list[list[tuple[int, int]]]:
        """Decompose the current flow into edge-disjoint simple s-t paths.

        Each path is a list of ``(edge, arrival vertex)`` steps.  Flow cycles
        met on the way are discarded.
        """
        out_arcs: dict[int, list[tuple[int, int]]] = {}
        for e, f in enumerate(self.flow):
            if f == 0:
                continue
            u, v = self.g.edges[e]
            tail, head = (u, v) if f > 0 else (v, u)
            out_arcs.setdefault(tail, []).append((e, head))
        for arcs in out_arcs.values():
            arcs.sort(reverse=True)
        result = []
        while out_arcs.get(s):
            steps: list[tuple[int, int]] = []
            where = {s: 0}
            x = s
            while x != t:
                e, y = out_arcs[x].pop()
                if y in where:
                    cut = where[y]
                    for _, z in steps[cut:]:
                        where.pop(z, None)
                    del steps[cut:]
                    where[y] = cut
                else:
                    steps.append((e, y))
                    where[y] = len(steps)
                x = y
            result.append(steps)
        return result


def max_flow(g: MultiGraph, s: int, t: int, limit: int | None = None) -> int:
    return UnitFlow(g).run(s, t, limit)


def edge_connectivity(g: MultiGraph) -> int:
    """Size of a minimum edge cut.

    A single vertex with ``d`` loops gets ``2d``; disconnected graphs get 0.
    """
    if g.n == 0:
        raise PreconditionError("edge connectivity of the empty graph is undefined")
    if g.n == 1:
        return 2 * g.m
    if not is_connected(g):
        return 0
    best = min(g.degree(v) - 2 * len(g.loops_at(v)) for v in range(g.n))
    for t in range(1, g.n):
        best = min(best, max_flow(g, 0, t, limit=best))
        if best == 0:
            break
    return best


def has_connectivity(g: MultiGraph, k: int) -> bool:
    """True when ``edge_connectivity(g) >= k``, with early exits."""
    if g.n <= 1:
        return g.n == 1 and 2 * g.m >= k
    if not is_connected(g):
        return k <= 0
    return all(max_flow(g, 0, t, limit=k) >= k for t in range(1, g.n))


def min_cut(g: MultiGraph, bound: int) -> Cut | None:
    """A minimum cut of size at most ``bound``, or ``None``.

    Among the minimum cuts met by the 0-to-t flow sweep, the side containing
    vertex 0 that is lexicographically least (as a sorted tuple) wins.
    """
    if g.n <= 1:
        return None
    best: tuple[int, tuple[int, ...]] | None = None
    for t in range(1, g.n):
        limit = bound + 1 if best is None else best[0] + 1
        flow = UnitFlow(g)
        value = flow.run(0, t, limit=limit)
        if value > bound:
            continue
        side = tuple(sorted(flow.source_side(0)))
        if best is None or (value, side) < best:
            best = (value, side)
    if best is None:
        return None
    side = frozenset(best[1])
    crossing = frozenset(e for e, (u, v) in enumerate(g.edges) if (u in side) != (v in side))
    return Cut(side, EdgeSubset(g, crossing))


def bipartition(g: MultiGraph | EdgeSubset) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two colour classes from a BFS colouring, or ``None`` if an odd circuit exists.

    Each component is coloured from its least vertex, which goes to the first
    class.  Any loop rules out a bipartition.
    """
    graph, edges = as_edge_set(g)
    colour: dict[int, int] = {}
    for start in range(graph.n):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for e, y in graph.incidence[x]:
                if e not in edges:
                    continue
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    first = frozenset(v for v, c in colour.items() if c == 0)
    return first, frozenset(range(graph.n)) - first


def contract(g: MultiGraph, block: Iterable[int]) -> tuple[MultiGraph, list[int], list[int]]:
    """Identify the vertices of ``block``.

    Returns ``(h, vertex_map, edge_map)`` where ``vertex_map[old] = new`` and
    ``edge_map[new] = old``.  Edge ids are preserved (the map is the
    identity); edges inside the block become loops.  The merged vertex takes
    the position of the least block vertex.
    """
    block = frozenset(block)
    if not block:
        raise PreconditionError("cannot contract an empty vertex set")
    vertex_map = [-1] * g.n
    nxt = 0
    merged = -1
    for v in range(g.n):
        if v in block:
            if merged < 0:
                merged = nxt
                nxt += 1
            vertex_map[v] = merged
        else:
            vertex_map[v] = nxt
            nxt += 1
    h = MultiGraph(nxt, tuple((vertex_map[u], vertex_map[v]) for u, v in g.edges))
    return h, vertex_map, list(range(g.m))


def restrict(
    g: MultiGraph, edges: Iterable[int], vertices: Iterable[int] | None = None
) -> tuple[MultiGraph, list[int], list[int]]:
    """The subgraph on ``edges`` relabelled densely.

    Vertex set is ``vertices`` if given (must contain every endpoint), else
    the endpoints of ``edges``.  Returns ``(h, vertex_origin, edge_origin)``
    mapping new ids to old ones; both keep ascending order.
    """
    edge_list = sorted(set(edges))
    verts = sorted(set(vertices) if vertices is not None else vertices_of(g, edge_list))
    index = {v: i for i, v in enumerate(verts)}
    try:
        pairs = tuple((index[g.edges[e][0]], index[g.edges[e][1]]) for e in edge_list)
    except KeyError as exc:
        raise PreconditionError(f"vertex {exc.args[0]} is an endpoint but not in the vertex set") from None
    return MultiGraph(len(verts), pairs), verts, edge_list
