"""Random instances: regular multigraphs, signatures, eulerian graphs, trees."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import PreconditionError
from .graph import MultiGraph, edge_connectivity, is_connected, is_connected_edges
from .signed import SignedGraph

SignRule = Literal["all-negative", "random-odd", "random"]


@dataclass(frozen=True)
class InstanceSpec:
    """What to generate.

    ``cut`` plants an edge cut of exactly that size between two random
    blocks and keeps only samples whose edge-connectivity equals it.
    """

    degree: int
    order: int
    seed: int = 0
    floor: int = 0
    kind: Literal["regular-multigraph", "signed"] = "regular-multigraph"
    sign: SignRule = "all-negative"
    cut: int | None = None
    retries: int = 2000


def _pair_stubs(rng: random.Random, stubs: list[int]) -> list[tuple[int, int]]:
    rng.shuffle(stubs)
    return [(min(stubs[i], stubs[i + 1]), max(stubs[i], stubs[i + 1])) for i in range(0, len(stubs), 2)]


def _sample(spec: InstanceSpec, rng: random.Random) -> MultiGraph:
    n, d = spec.order, spec.degree
    if spec.cut is None:
        edges = _pair_stubs(rng, [v for v in range(n) for _ in range(d)])
        return MultiGraph(n, tuple(sorted(edges)))
    c = spec.cut
    n1 = rng.randint(1, n - 1)
    left = [v for v in range(n1) for _ in range(d)]
    right = [v for v in range(n1, n) for _ in range(d)]
    rng.shuffle(left)
    rng.shuffle(right)
    crossing = list(zip(left[:c], right[:c]))
    edges = crossing + _pair_stubs(rng, left[c:]) + _pair_stubs(rng, right[c:])
    return MultiGraph(n, tuple(sorted(edges)))


def _signature(spec: InstanceSpec, g: MultiGraph, rng: random.Random) -> SignedGraph:
    if spec.sign == "all-negative":
        return SignedGraph.all_negative(g)
    signs = [rng.choice((1, -1)) for _ in range(g.m)]
    if spec.sign == "random-odd" and sum(1 for s in signs if s < 0) % 2 == 0:
        e = rng.randrange(g.m)
        signs[e] = -signs[e]
    return SignedGraph(g, tuple(signs))


def gen(spec: InstanceSpec) -> MultiGraph | SignedGraph:
    """Configuration-model sample meeting ``spec``; deterministic per seed."""
    if spec.degree % 2:
        raise PreconditionError(f"degree must be even, got {spec.degree}")
    if spec.degree <= 0 or spec.order <= 0:
        raise PreconditionError("degree and order must be positive")
    if spec.cut is not None:
        if spec.cut % 2 or spec.cut <= 0:
            raise PreconditionError(f"planted cut must be positive and even, got {spec.cut}")
        if spec.order < 2:
            raise PreconditionError("a planted cut needs at least two vertices")
        if spec.cut > spec.degree or spec.cut < spec.floor:
            raise PreconditionError(f"cut {spec.cut} conflicts with degree {spec.degree} or floor {spec.floor}")
    rng = random.Random(spec.seed)
    for _ in range(spec.retries):
        g = _sample(spec, rng)
        if not is_connected(g):
            continue
        if spec.floor or spec.cut is not None:
            lam = edge_connectivity(g)
            if lam < spec.floor or (spec.cut is not None and lam != spec.cut):
                continue
        if spec.kind == "signed":
            return _signature(spec, g, rng)
        return g
    raise PreconditionError(f"no graph satisfying {spec} found in {spec.retries} attempts")


def random_eulerian(n: int, max_edges: int, seed: int, loops: bool = True) -> MultiGraph:
    """Connected eulerian multigraph on ``n`` vertices built from closed walks."""
    if n < 1 or max_edges < 1 or (not loops and (n < 2 or max_edges < 2)):
        raise PreconditionError(f"no eulerian graph with n={n}, max_edges={max_edges}, loops={loops}")
    rng = random.Random(seed)
    while True:
        edges: list[tuple[int, int]] = []
        target = rng.randint(1, max_edges)
        while len(edges) < target:
            shortest = 1 if loops else 2
            room = min(max_edges - len(edges), n + 2)
            if room < shortest:
                break
            length = rng.randint(shortest, room)
            if length == 1:
                v = rng.randrange(n)
                edges.append((v, v))
                continue
            walk = [rng.randrange(n)]
            for _ in range(length - 1):
                walk.append(rng.randrange(n))
            walk.append(walk[0])
            step = [(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:])]
            if not loops and any(a == b for a, b in step):
                continue
            if len(edges) + len(step) > max_edges:
                break
            edges.extend(step)
        if not edges:
            continue
        used = sorted({v for e in edges for v in e})
        index = {v: i for i, v in enumerate(used)}
        g = MultiGraph(len(used), tuple(sorted((index[a], index[b]) for a, b in edges)))
        if is_connected_edges(g, g.edge_ids()):
            return g


def _canonical(adj: list[list[int]]) -> str:
    """AHU code of an unrooted tree, taken at its centre(s)."""
    n = len(adj)
    if n == 1:
        return "()"
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt

    def code(v: int, parent: int) -> str:
        return "(" + "".join(sorted(code(u, v) for u in adj[v] if u != parent)) + ")"

    return min(code(c, -1) for c in layer)


def all_trees(n: int) -> Iterator[MultiGraph]:
    """Every tree on ``n`` vertices up to isomorphism."""
    if n < 1:
        return
    level: dict[str, list[tuple[int, int]]] = {"()": []}
    for size in range(2, n + 1):
        nxt: dict[str, list[tuple[int, int]]] = {}
        for edges in level.values():
            for v in range(size - 1):
                grown = edges + [(v, size - 1)]
                adj: list[list[int]] = [[] for _ in range(size)]
                for a, b in grown:
                    adj[a].append(b)
                    adj[b].append(a)
                nxt.setdefault(_canonical(adj), grown)
        level = nxt
    for key in sorted(level):
        yield MultiGraph(n, tuple(level[key]))
