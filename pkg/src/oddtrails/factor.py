"""2-factorisation of regular multigraphs of even degree.

Edges are oriented along an eulerian circuit of each component, which makes
every in- and out-degree ``d``.  The split graph (out-copy of each vertex on
the left, in-copy on the right, one edge per arc) is then ``d``-regular
bipartite and falls apart into ``d`` perfect matchings; each matching pulls
back to a 2-factor.
"""

from __future__ import annotations

from .errors import PreconditionError, TheoremViolation
from .euler import Trail, _hierholzer, circuit_decomposition
from .graph import EdgeSubset, MultiGraph, edge_components, vertices_of


def _orient(g: MultiGraph) -> list[tuple[int, int]]:
    arcs: list[tuple[int, int]] = [(0, 0)] * g.m
    for comp in edge_components(g, g.edge_ids()):
        tour = _hierholzer(g, comp, min(vertices_of(g, comp)))
        x = tour.start
        for e, y in tour.steps:
            arcs[e] = (x, y)
            x = y
    return arcs


def _perfect_matching(n: int, arcs_by_tail: list[list[tuple[int, int]]], alive: set[int]) -> dict[int, int]:
    """Kuhn's augmenting-path matching; returns ``tail -> arc edge id``."""
    match_head: dict[int, tuple[int, int]] = {}  # head -> (tail, edge)

    def try_tail(u: int, seen: set[int]) -> bool:
        for e, h in arcs_by_tail[u]:
            if e not in alive or h in seen:
                continue
            seen.add(h)
            if h not in match_head or try_tail(match_head[h][0], seen):
                match_head[h] = (u, e)
                return True
        return False

    for u in range(n):
        if not try_tail(u, set()):
            raise TheoremViolation(f"regular bipartite split graph has no perfect matching (tail {u})")
    return {u: e for u, e in match_head.values()}


def two_factorization(g: MultiGraph) -> list[EdgeSubset]:
    """Split a ``2d``-regular multigraph into ``d`` edge-disjoint 2-factors."""
    if g.n == 0:
        raise PreconditionError("empty graph")
    d2 = g.degree(0)
    for v in range(g.n):
        if g.degree(v) != d2:
            raise PreconditionError(f"vertex {v} has degree {g.degree(v)}, expected {d2}")
    if d2 % 2:
        raise PreconditionError(f"vertex 0 has odd degree {d2}")
    arcs = _orient(g)
    by_tail: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (x, y) in enumerate(arcs):
        by_tail[x].append((e, y))
    alive = set(range(g.m))
    factors = []
    for _ in range(d2 // 2):
        chosen = _perfect_matching(g.n, by_tail, alive)
        members = frozenset(chosen.values())
        alive -= members
        factors.append(EdgeSubset(g, members))
    return factors


def odd_circuit_witnesses(g: MultiGraph) -> list[Trail]:
    """One odd circuit from each 2-factor; needs odd order.

    Within a factor the odd circuit with the least minimum edge id is taken.
    """
    if g.n % 2 == 0:
        raise PreconditionError(f"graph has even order {g.n}")
    out = []
    for i, factor in enumerate(two_factorization(g)):
        odd = [c for c in circuit_decomposition(factor) if len(c) % 2]
        if not odd:
            raise TheoremViolation(f"2-factor {i} of an odd-order graph has no odd circuit")
        out.append(min(odd, key=lambda c: min(c.edges)))
    return out
