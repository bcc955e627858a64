"""The decomposition value type and helpers shared by the constructions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import PreconditionError
from ..graph import MultiGraph, all_even, edge_components, is_connected_edges, vertices_of
from ..signed import SignedGraph


@dataclass(frozen=True)
class Decomposition:
    """Edge-disjoint parts covering the parent graph, optionally rooted."""

    parent: MultiGraph | SignedGraph
    parts: tuple[frozenset[int], ...]
    root: int | None = None

    @property
    def graph(self) -> MultiGraph:
        return underlying(self.parent)

    def __len__(self) -> int:
        return len(self.parts)

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]


def underlying(g: MultiGraph | SignedGraph) -> MultiGraph:
    return g.graph if isinstance(g, SignedGraph) else g


def require_eulerian(g: MultiGraph) -> None:
    if g.m == 0:
        raise PreconditionError("graph has no edges")
    odd = g.odd_vertices()
    if odd:
        raise PreconditionError(f"vertex {odd[0]} has odd degree {g.degree(odd[0])}")
    if not is_connected_edges(g, g.edge_ids()):
        raise PreconditionError("graph is disconnected")


def lift_parts(parts: Iterable[frozenset[int]], edge_origin: Sequence[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Replace every child edge by the parent edges it stands for."""
    out = []
    for part in parts:
        lifted: set[int] = set()
        for e in part:
            lifted.update(edge_origin[e])
        out.append(frozenset(lifted))
    return tuple(out)


def grow_odd_eulerian(g: MultiGraph, universe: frozenset[int], seed: frozenset[int]) -> frozenset[int]:
    """Enlarge an odd eulerian subgraph inside ``universe`` to a local maximum.

    Components of ``universe - C`` with all degrees even are absorbed: even
    ones singly, odd ones in pairs.  At the fixpoint the remainder has no
    even eulerian component and at most one odd eulerian component.  Only
    components touching ``C`` are absorbed, so ``C`` stays connected.
    """
    current = frozenset(seed)
    while True:
        cv = vertices_of(g, current)
        comps = sorted(edge_components(g, universe - current), key=min)
        eulerian = [c for c in comps if all_even(g, c) and vertices_of(g, c) & cv]
        even = [c for c in eulerian if len(c) % 2 == 0]
        odd = [c for c in eulerian if len(c) % 2]
        if even:
            current = current.union(*even)
        elif len(odd) >= 2:
            current = current | odd[0] | odd[1]
        else:
            return current
