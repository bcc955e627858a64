"""Exhaustive search for (rooted) k-odd decompositions of small graphs.

Every part of a decomposition is an even subgraph, so instead of assigning
edges to classes one at a time the search walks the cycle space of what is
left: a fundamental-cycle basis is built and its span is enumerated in Gray
code order.  A candidate part must contain the least remaining edge (this
fixes the order of the parts), be connected, be odd and keep at least one
candidate root.  The last part is whatever remains.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .decomp.base import Decomposition
from .errors import BoundExceeded, PreconditionError
from .graph import MultiGraph
from .signed import SignedGraph

DEFAULT_BOUND = 18


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, g: MultiGraph | SignedGraph, rooted: bool) -> None:
        self.rooted = rooted
        if isinstance(g, SignedGraph):
            self.graph = g.graph
            self.weight = sum(1 << e for e in range(g.m) if g.signs[e] < 0)
        else:
            self.graph = g
            self.weight = (1 << g.m) - 1
        self.ends = self.graph.edges

    def vertex_mask(self, mask: int) -> int:
        out = 0
        for e in _bits(mask):
            u, v = self.ends[e]
            out |= (1 << u) | (1 << v)
        return out

    def odd(self, mask: int) -> bool:
        return (mask & self.weight).bit_count() % 2 == 1

    def connected(self, mask: int) -> bool:
        edges = list(_bits(mask))
        if not edges:
            return False
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in edges:
            u, v = self.ends[e]
            parent[find(u)] = find(v)
        roots = {find(u) for e in edges for u in self.ends[e]}
        return len(roots) == 1

    def cycle_basis(self, mask: int) -> list[int]:
        """Fundamental cycles of the subgraph on ``mask`` as edge masks."""
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in _bits(mask):
            u, v = self.ends[e]
            adj.setdefault(u, []).append((e, v))
            if u != v:
                adj.setdefault(v, []).append((e, u))
        parent: dict[int, tuple[int, int]] = {}
        path: dict[int, int] = {}
        tree = 0
        for r in sorted(adj):
            if r in path:
                continue
            path[r] = 0
            stack = [r]
            while stack:
                x = stack.pop()
                for e, y in adj[x]:
                    if y not in path:
                        path[y] = path[x] | (1 << e)
                        parent[y] = (e, x)
                        tree |= 1 << e
                        stack.append(y)
        basis = []
        for e in _bits(mask & ~tree):
            u, v = self.ends[e]
            basis.append((1 << e) | (path[u] ^ path[v]))
        return basis

    def parts(self, remaining: int) -> Iterator[int]:
        """Even subgraphs of ``remaining`` containing its least edge."""
        low = remaining & -remaining
        basis = self.cycle_basis(remaining)
        current = 0
        for i in range(1, 1 << len(basis)):
            current ^= basis[(i & -i).bit_length() - 1]
            if current & low:
                yield current

    def solve(self, remaining: int, k: int, roots: int) -> list[int] | None:
        if k == 1:
            if remaining and self.odd(remaining) and self.connected(remaining):
                if not self.rooted or roots & self.vertex_mask(remaining):
                    return [remaining]
            return None
        for part in self.parts(remaining):
            if part == remaining or not self.odd(part):
                continue
            keep = roots & self.vertex_mask(part) if self.rooted else roots
            if not keep or not self.connected(part):
                continue
            rest = self.solve(remaining ^ part, k - 1, keep)
            if rest is not None:
                return [part] + rest
        return None


def brute_force_exists(
    g: MultiGraph | SignedGraph,
    k: int,
    rooted: bool = False,
    root: int | None = None,
    bound: int = DEFAULT_BOUND,
) -> Decomposition | None:
    """A k-odd decomposition of ``g`` found by exhaustive search, or ``None``.

    For a signed graph "odd" means an odd number of negative edges.  With
    ``rooted`` every part must share a vertex (``root`` if given, else any).
    ``None`` is a certified absence.
    """
    if root is not None:
        rooted = True
    s = _Search(g, rooted)
    graph = s.graph
    if graph.m > bound:
        raise BoundExceeded(f"graph has {graph.m} edges, above the search bound {bound}; use a smaller instance")
    if k < 1:
        raise PreconditionError(f"k must be positive, got {k}")
    if root is not None and not (0 <= root < graph.n):
        raise PreconditionError(f"root {root} is not a vertex")
    if graph.m == 0 or graph.odd_vertices():
        return None
    if root is not None:
        roots = 1 << root
    else:
        roots = (1 << graph.n) - 1
    found = s.solve((1 << graph.m) - 1, k, roots)
    if found is None:
        return None
    parts = tuple(frozenset(_bits(p)) for p in found)
    common = None
    if rooted:
        shared = roots
        for p in found:
            shared &= s.vertex_mask(p)
        common = (shared & -shared).bit_length() - 1
    return Decomposition(g, parts, common)


@dataclass(frozen=True)
class RootScan:
    roots: dict[int, bool]

    @property
    def counterexample(self) -> bool:
        return not all(self.roots.values())


def _root_job(args: tuple[MultiGraph, int, int, int]) -> bool:
    g, d, v, bound = args
    return brute_force_exists(g, d, rooted=True, root=v, bound=bound) is not None


def scan_roots(g: MultiGraph, d: int, bound: int = DEFAULT_BOUND, jobs: int = 1) -> RootScan:
    """For each vertex, whether some rooted d-odd decomposition is rooted there."""
    if g.n == 0 or not g.is_regular(2 * d):
        raise PreconditionError(f"graph is not {2 * d}-regular")
    if g.n % 2 == 0:
        raise PreconditionError(f"graph has even order {g.n}")
    if g.m > bound:
        raise BoundExceeded(f"graph has {g.m} edges, above the search bound {bound}; use a smaller instance")
    tasks = [(g, d, v, bound) for v in range(g.n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            answers = list(pool.map(_root_job, tasks))
    else:
        answers = [_root_job(t) for t in tasks]
    return RootScan(dict(enumerate(answers)))


def certificate_text(g: MultiGraph | SignedGraph, k: int, claim: str, bound: int = DEFAULT_BOUND) -> str:
    """Exhaustive record of which roots admit a rooted k-odd decomposition.

    Recomputing this text from the graph alone must reproduce a shipped
    certificate byte for byte.
    """
    graph = g.graph if isinstance(g, SignedGraph) else g
    lines = [
        f"claim: {claim}",
        f"k: {k}",
        f"signed: {'true' if isinstance(g, SignedGraph) else 'false'}",
        f"edges: {graph.m}",
    ]
    free = brute_force_exists(g, k, bound=bound)
    if free is None:
        lines.append("unrooted: absent")
    else:
        lines.append("unrooted: present " + " | ".join(" ".join(map(str, sorted(p))) for p in free.parts))
    for v in range(graph.n):
        dec = brute_force_exists(g, k, root=v, bound=bound)
        if dec is None:
            lines.append(f"root {v}: absent (no {k} odd parts all meet vertex {v})")
        else:
            lines.append(f"root {v}: present " + " | ".join(" ".join(map(str, sorted(p))) for p in dec.parts))
    return "\n".join(lines) + "\n"
