"""Fixtures, builders and independent reference implementations for tests."""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx
from hypothesis import strategies as st

from oddtrails.euler import Trail
from oddtrails.graph import MultiGraph, build
from oddtrails.signed import SignedGraph


def complete(n: int) -> MultiGraph:
    return build(n, list(combinations(range(n), 2)))


def cycle(n: int) -> MultiGraph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def bouquet(d: int) -> MultiGraph:
    return build(1, [(0, 0)] * d)


def triangle_chain() -> MultiGraph:
    return build(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)])


def monotype_instance() -> tuple[SignedGraph, tuple[Trail, Trail, Trail]]:
    """Every vertex on exactly two of three unbalanced 6-circuits; the
    leftover is three balanced triangles, each inside one vertex class."""
    a, b, c = [0, 1, 2], [3, 4, 5], [6, 7, 8]

    def ring(vs):
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    orders = [
        [a[0], b[0], a[1], b[1], a[2], b[2]],
        [a[0], c[0], a[1], c[1], a[2], c[2]],
        [b[0], c[0], b[1], c[1], b[2], c[2]],
    ]
    edges = ring(orders[0]) + ring(orders[1]) + ring(orders[2]) + ring(a) + ring(b) + ring(c)
    signs = ([-1] + [1] * 5) * 3 + [1] * 9
    sg = SignedGraph(build(9, edges), tuple(signs))
    trails = tuple(Trail(vs[0], tuple((6 * i + j, vs[(j + 1) % 6]) for j in range(6))) for i, vs in enumerate(orders))
    return sg, trails


def lone_odd_block_instance() -> MultiGraph:
    """6-regular, order 13, lambda 4; the even side of the cut has an odd
    eulerian block that meets the grown odd subgraph but no cut end."""
    k, u, x, y, v, t, p, q, s, A, a3, a4, r = range(13)
    C = [(u, x), (x, t), (t, v), (v, y), (y, u)]
    D = [(x, p), (x, p), (x, q), (x, s), (y, q), (y, q), (y, p), (y, s), (p, q), (p, s), (p, s), (q, s), (q, s)]
    B = [(u, r), (u, r), (u, A), (u, A), (A, a3), (A, a4), (r, t), (r, v), (r, a3), (r, a4),
         (t, a3), (t, a4), (t, v), (v, a3), (v, a4), (a3, a4)]
    S = [(A, k), (A, k), (a3, k), (a4, k), (k, k)]
    return build(13, C + D + B + S)


# --- independent references -------------------------------------------------


def nx_multigraph(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_edge_connectivity(g: MultiGraph) -> int:
    """Edge connectivity by networkx max flow; loops ignored, bouquet = 2m."""
    if g.n == 1:
        return 2 * g.m
    d = nx.DiGraph()
    d.add_nodes_from(range(g.n))
    for u, v in g.edges:
        if u == v:
            continue
        for a, b in ((u, v), (v, u)):
            cap = d.edges[a, b]["capacity"] + 1 if d.has_edge(a, b) else 1
            d.add_edge(a, b, capacity=cap)
    if not nx.is_weakly_connected(d):
        return 0
    return min(int(nx.maximum_flow_value(d, 0, t)) for t in range(1, g.n))


def naive_decomposition_exists(g: MultiGraph | SignedGraph, k: int, rooted: bool = False) -> bool:
    """Try all k^m colourings of the edges; only for tiny graphs."""
    graph = g.graph if isinstance(g, SignedGraph) else g
    weight = [(g.signs[e] < 0) if isinstance(g, SignedGraph) else 1 for e in range(graph.m)]
    for colours in product(range(k), repeat=graph.m):
        if colours and colours[0] != 0:
            continue
        parts = [[e for e in range(graph.m) if colours[e] == i] for i in range(k)]
        if any(not p for p in parts):
            continue
        ok = True
        common = set(range(graph.n))
        for p in parts:
            h = nx.MultiGraph()
            h.add_edges_from(graph.edges[e] for e in p)
            if any(d % 2 for _, d in h.degree()) or not nx.is_connected(h):
                ok = False
                break
            if sum(weight[e] for e in p) % 2 == 0:
                ok = False
                break
            common &= set(h.nodes)
        if ok and (not rooted or common):
            return True
    return False


# --- hypothesis strategies ---------------------------------------------------


@st.composite
def eulerian_graphs(draw, max_n: int = 6, max_edges: int = 12, loops: bool = True) -> MultiGraph:
    n = draw(st.integers(1, max_n))
    edges: list[tuple[int, int]] = []
    walks = draw(st.integers(1, 4))
    for _ in range(walks):
        length = draw(st.integers(1 if loops else 2, 5))
        if len(edges) + length > max_edges:
            break
        walk = draw(st.lists(st.integers(0, n - 1), min_size=length, max_size=length))
        if length == 1:
            edges.append((walk[0], walk[0]))
            continue
        closed = walk + [walk[0]]
        step = list(zip(closed, closed[1:]))
        if not loops and any(a == b for a, b in step):
            continue
        edges.extend(step)
    if not edges:
        edges = [(0, 0)] if loops else [(0, 1), (1, 2), (2, 0)]
        n = max(n, 3)
    used = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(used)}
    g = MultiGraph(len(used), tuple((index[a], index[b]) for a, b in edges))
    # closed walks through shared vertices may still leave pieces apart
    h = nx_multigraph(g)
    if not nx.is_connected(h):
        comp = sorted(max(nx.connected_components(h), key=lambda c: (len(c), -min(c))))
        keep = [e for e in g.edges if e[0] in comp]
        index = {v: i for i, v in enumerate(comp)}
        g = MultiGraph(len(comp), tuple((index[a], index[b]) for a, b in keep))
    return g


@st.composite
def signed_graphs(draw, graphs=None):
    g = draw(graphs if graphs is not None else eulerian_graphs())
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=g.m, max_size=g.m))
    return SignedGraph(g, tuple(signs))


@st.composite
def multigraphs(draw, max_n: int = 6, max_edges: int = 12) -> MultiGraph:
    n = draw(st.integers(1, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return MultiGraph(n, tuple(pairs))
