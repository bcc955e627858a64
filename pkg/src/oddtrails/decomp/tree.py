"""Partitioning a tree into subtrees that each hold an odd number of marked vertices."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError
from ..graph import MultiGraph, is_connected


@dataclass(frozen=True)
class TreePartitionInstance:
    tree: MultiGraph
    B: frozenset[int]
    k: int


def tree_partition(inst: TreePartitionInstance) -> list[frozenset[int]]:
    """Split the vertices of ``inst.tree`` into ``k`` subtrees, each with an
    odd number of vertices from ``B``.

    Needs ``|B| >= k`` and ``|B| = k (mod 2)``.  Follows the leaf-stripping
    induction: with two leaves in ``B`` both become singletons and ``k``
    drops by two; a leaf outside ``B`` is removed and later rejoins its
    neighbour's class.  For ``k = 2`` the tree is cut at the edge leaving the
    largest possible side with an odd ``B``-count.
    """
    t, B, k = inst.tree, frozenset(inst.B), inst.k
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if t.n == 0 or t.m != t.n - 1 or not is_connected(t) or any(t.is_loop(e) for e in range(t.m)):
        raise PreconditionError("input graph is not a tree")
    if not B <= frozenset(range(t.n)):
        raise PreconditionError("B contains a vertex outside the tree")
    if len(B) < k:
        raise PreconditionError(f"|B| = {len(B)} is smaller than k = {k}")
    if (len(B) - k) % 2:
        raise PreconditionError(f"|B| = {len(B)} and k = {k} differ in parity")
    adj: dict[int, set[int]] = {v: set() for v in range(t.n)}
    for u, v in t.edges:
        adj[u].add(v)
        adj[v].add(u)
    return _partition(adj, B, k)


def _without(adj: dict[int, set[int]], drop: set[int]) -> dict[int, set[int]]:
    return {v: nb - drop for v, nb in adj.items() if v not in drop}


def _partition(adj: dict[int, set[int]], B: frozenset[int], k: int) -> list[frozenset[int]]:
    verts = sorted(adj)
    if k == 1:
        return [frozenset(verts)]
    if len(verts) == k:
        return [frozenset((v,)) for v in verts]
    if k == 2:
        return _split_two(adj, B)
    leaves = [v for v in verts if len(adj[v]) == 1]
    outside = [v for v in leaves if v not in B]
    if outside:
        u = outside[0]
        (w,) = adj[u]
        parts = _partition(_without(adj, {u}), B, k)
        return [p | {u} if w in p else p for p in parts]
    u, v = leaves[0], leaves[1]
    parts = _partition(_without(adj, {u, v}), B - {u, v}, k - 2)
    return parts + [frozenset((u,)), frozenset((v,))]


def _side(adj: dict[int, set[int]], start: int, blocked: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and not (x == start and y == blocked):
                seen.add(y)
                stack.append(y)
    return seen


def _split_two(adj: dict[int, set[int]], B: frozenset[int]) -> list[frozenset[int]]:
    verts = set(adj)
    best: tuple[int, frozenset[int]] | None = None
    for x in sorted(adj):
        for y in sorted(adj[x]):
            if y < x:
                continue
            for a, b in ((x, y), (y, x)):
                side = _side(adj, a, b)
                if len(side & B) % 2 and len((verts - side) & B) % 2:
                    if best is None or len(side) > best[0]:
                        best = (len(side), frozenset(side))
    if best is None:
        raise PreconditionError("no edge splits B into two odd halves")
    return [best[1], frozenset(verts - best[1])]
