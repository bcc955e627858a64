"""Decompositions into k odd closed trails."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from ..errors import GraphError, PreconditionError
from ..euler import Trail, check_trail, circuit_decomposition_including, iter_circuits
from ..factor import odd_circuit_witnesses
from ..graph import MultiGraph, build, vertices_of
from .base import Decomposition, require_eulerian
from .tree import TreePartitionInstance, tree_partition


def find_odd_circuits(g: MultiGraph, k: int) -> list[Trail]:
    """``k`` pairwise edge-disjoint odd circuits of ``g``.

    Regular graphs of odd order get them from a 2-factorisation; anything
    else falls back to a backtracking search over all odd circuits, which
    is only practical for small graphs.
    """
    degree = g.degree(0) if g.n else 0
    if g.n % 2 and degree % 2 == 0 and degree // 2 >= k and g.is_regular(degree):
        return odd_circuit_witnesses(g)[:k]
    odd = sorted((c for c in iter_circuits(g) if len(c) % 2), key=lambda c: (len(c), sorted(c.edges)))
    chosen: list[Trail] = []

    def extend(start: int, used: frozenset[int]) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(odd)):
            es = odd[i].edge_set()
            if es & used:
                continue
            chosen.append(odd[i])
            if extend(i + 1, used | es):
                return True
            chosen.pop()
        return False

    if not extend(0, frozenset()):
        raise PreconditionError(f"insufficient odd circuits: fewer than {k} edge-disjoint ones exist")
    return list(chosen)


def _spanning_tree(sets: Sequence[frozenset[int]]) -> list[tuple[int, int]]:
    """BFS spanning tree of the intersection graph of vertex sets."""
    seen = {0}
    queue = deque([0])
    edges = []
    while queue:
        i = queue.popleft()
        for j in range(len(sets)):
            if j not in seen and sets[i] & sets[j]:
                seen.add(j)
                edges.append((i, j))
                queue.append(j)
    if len(seen) != len(sets):
        raise PreconditionError("circuit intersection graph is disconnected")
    return edges


def k_odd(g: MultiGraph, k: int, witnesses: Sequence[Trail] | None = None) -> Decomposition:
    """Split an eulerian graph into ``k`` eulerian parts of odd size.

    Possible exactly when ``k = |E| (mod 2)`` and ``g`` has ``k``
    edge-disjoint odd circuits.  A circuit decomposition containing those
    circuits is taken, a spanning tree of its intersection graph is split by
    :func:`tree_partition` with the odd circuits marked, and each class of
    circuits is merged into one part.
    """
    require_eulerian(g)
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if (g.m - k) % 2:
        raise PreconditionError(f"parity mismatch: |E| = {g.m} but k = {k}")
    if witnesses is None:
        witnesses = find_odd_circuits(g, k)
    if len(witnesses) < k:
        raise PreconditionError(f"{len(witnesses)} witnesses given, {k} needed")
    for i, c in enumerate(witnesses):
        try:
            check_trail(g, c, circuit=True)
        except GraphError as exc:
            raise PreconditionError(f"witness {i} is not a circuit: {exc}") from None
        if len(c) % 2 == 0:
            raise PreconditionError(f"witness {i} has even length {len(c)}")
    circuits = circuit_decomposition_including(g, witnesses)
    vsets = [vertices_of(g, c.edges) for c in circuits]
    tree_edges = _spanning_tree(vsets)
    tree = build(len(circuits), tree_edges)
    marked = frozenset(i for i, c in enumerate(circuits) if len(c) % 2)
    classes = tree_partition(TreePartitionInstance(tree, marked, k))
    parts = tuple(frozenset().union(*(circuits[i].edge_set() for i in cls)) for cls in classes)
    return Decomposition(g, parts)
