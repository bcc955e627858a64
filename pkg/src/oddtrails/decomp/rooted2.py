"""Rooted decompositions into two odd closed trails."""

from __future__ import annotations

from ..graph import MultiGraph, bipartition, vertices_of
from ..signed import SignedGraph, is_balanced
from .base import Decomposition, grow_odd_eulerian, require_eulerian


def absence_reason(g: MultiGraph) -> str | None:
    """Why ``g`` has no rooted 2-odd decomposition, or ``None`` if it has one."""
    require_eulerian(g)
    if g.m % 2:
        return "odd number of edges"
    if bipartition(g) is not None:
        return "bipartite"
    return None


def rooted_2_odd(g: MultiGraph) -> Decomposition | None:
    """A rooted decomposition into two odd closed trails, if one exists.

    Exists iff ``g`` is non-bipartite with an even number of edges.  An odd
    circuit is grown into a locally maximal odd eulerian subgraph ``C``; the
    rest is then a single odd eulerian graph meeting ``C``.
    """
    if absence_reason(g) is not None:
        return None
    seed = is_balanced(SignedGraph.all_negative(g)).witness
    assert seed is not None
    everything = g.edge_ids()
    c = grow_odd_eulerian(g, everything, seed.edge_set())
    rest = everything - c
    shared = vertices_of(g, c) & vertices_of(g, rest)
    return Decomposition(g, (c, rest), root=min(shared))
