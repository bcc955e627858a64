"""Signed multigraphs: switching, balance and unbalanced circuits."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import GraphError, PreconditionError, TheoremViolation
from .euler import Trail, check_trail, iter_circuits
from .graph import MultiGraph, edge_components

Parity = Literal["even", "odd"]


@dataclass(frozen=True)
class SignedGraph:
    """A multigraph with a sign in ``{+1, -1}`` on every edge."""

    graph: MultiGraph
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.signs) != self.graph.m:
            raise GraphError(f"{len(self.signs)} signs given for {self.graph.m} edges")
        for e, s in enumerate(self.signs):
            if s not in (1, -1):
                raise GraphError(f"edge {e} has sign {s}; expected +1 or -1")

    @classmethod
    def all_negative(cls, g: MultiGraph) -> SignedGraph:
        return cls(g, (-1,) * g.m)

    @classmethod
    def all_positive(cls, g: MultiGraph) -> SignedGraph:
        return cls(g, (1,) * g.m)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def sign(self, e: int) -> int:
        return self.signs[e]

    def negative_edges(self) -> frozenset[int]:
        return frozenset(e for e, s in enumerate(self.signs) if s < 0)

    @property
    def negative_count(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def count_negative(self, edges: Iterable[int]) -> int:
        return sum(1 for e in edges if self.signs[e] < 0)


def sign_product(sg: SignedGraph, edges: Iterable[int]) -> int:
    return -1 if sg.count_negative(edges) % 2 else 1


def switch(sg: SignedGraph, U: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one end in ``U``."""
    U = frozenset(U)
    signs = tuple(
        -s if ((u in U) != (v in U)) else s for s, (u, v) in zip(sg.signs, sg.graph.edges)
    )
    return SignedGraph(sg.graph, signs)


def negative_parity(sg: SignedGraph, edges: Iterable[int] | None = None) -> Parity:
    count = sg.negative_count if edges is None else sg.count_negative(edges)
    return "odd" if count % 2 else "even"


@dataclass(frozen=True)
class BalanceCertificate:
    """Either vertex potentials proving balance or an unbalanced circuit."""

    potentials: tuple[int, ...] | None = None
    witness: Trail | None = None

    @property
    def balanced(self) -> bool:
        return self.witness is None

    def __bool__(self) -> bool:
        return self.balanced


def _tree_path_up(parent: dict[int, tuple[int, int]], x: int, stop: int) -> list[tuple[int, int]]:
    # (edge, vertex reached) steps climbing from x to stop
    steps = []
    while x != stop:
        e, p = parent[x]
        steps.append((e, p))
        x = p
    return steps


def _fundamental_circuit(
    parent: dict[int, tuple[int, int]], depth: dict[int, int], e: int, x: int, y: int
) -> Trail:
    a, b = x, y
    while depth[a] > depth[b]:
        a = parent[a][1]
    while depth[b] > depth[a]:
        b = parent[b][1]
    while a != b:
        a = parent[a][1]
        b = parent[b][1]
    lca = a
    up = _tree_path_up(parent, y, lca)
    down_rev = _tree_path_up(parent, x, lca)
    # walk x -e-> y, climb to lca, descend to x
    steps = [(e, y)] + up
    verts_down = [x] + [v for _, v in down_rev]
    for i in range(len(down_rev) - 1, -1, -1):
        steps.append((down_rev[i][0], verts_down[i]))
    return Trail(x, tuple(steps))


def _spanning_search(
    sg: SignedGraph, edges: frozenset[int], roots: Iterable[int]
) -> tuple[dict[int, int], dict[int, tuple[int, int]], dict[int, int], list[tuple[int, int, int]]]:
    """BFS forest over ``edges``; returns potentials, parents, depths and
    the violated non-tree edges ``(e, x, y)`` in discovery order."""
    g = sg.graph
    pot: dict[int, int] = {}
    parent: dict[int, tuple[int, int]] = {}
    depth: dict[int, int] = {}
    tree_edges: set[int] = set()
    bad: list[tuple[int, int, int]] = []
    reported: set[int] = set()
    for r in roots:
        if r in pot:
            continue
        pot[r] = 1
        depth[r] = 0
        queue = deque([r])
        while queue:
            x = queue.popleft()
            for e, y in g.incidence[x]:
                if e not in edges or e in tree_edges or e in reported:
                    continue
                if y not in pot:
                    pot[y] = pot[x] * sg.signs[e]
                    parent[y] = (e, x)
                    depth[y] = depth[x] + 1
                    tree_edges.add(e)
                    queue.append(y)
                elif pot[x] * pot[y] != sg.signs[e]:
                    reported.add(e)
                    bad.append((e, x, y))
    return pot, parent, depth, bad


def is_balanced(sg: SignedGraph, edges: Iterable[int] | None = None) -> BalanceCertificate:
    """Balance test by spanning-forest potentials.

    The first non-tree edge whose sign disagrees with the potentials closes
    an unbalanced fundamental circuit, which is returned as the witness.
    """
    es = sg.graph.edge_ids() if edges is None else frozenset(edges)
    pot, parent, depth, bad = _spanning_search(sg, es, range(sg.n))
    if not bad:
        return BalanceCertificate(potentials=tuple(pot.get(v, 1) for v in range(sg.n)))
    e, x, y = bad[0]
    if x == y:
        return BalanceCertificate(witness=Trail(x, ((e, x),)))
    return BalanceCertificate(witness=_fundamental_circuit(parent, depth, e, x, y))


def is_tightly_unbalanced(sg: SignedGraph) -> int | None:
    """Least edge whose deletion balances ``sg``; ``None`` means amply unbalanced."""
    if is_balanced(sg):
        raise PreconditionError("graph is balanced")
    full = sg.graph.edge_ids()
    for e in range(sg.m):
        if is_balanced(sg, full - {e}):
            return e
    return None


def is_unbalanced_circuit(sg: SignedGraph, c: Trail) -> bool:
    return sg.count_negative(c.edges) % 2 == 1


def _check_witness(sg: SignedGraph, c: Trail, name: str) -> None:
    try:
        check_trail(sg.graph, c, circuit=True)
    except GraphError as exc:
        raise PreconditionError(f"{name} is not a circuit: {exc}") from None
    if not is_unbalanced_circuit(sg, c):
        raise PreconditionError(f"{name} is balanced")


def two_disjoint_unbalanced_circuits(
    sg: SignedGraph, exhaustive: bool = True
) -> tuple[Trail, Trail] | None:
    """Two edge-disjoint unbalanced circuits, or ``None`` if there are none.

    First tries every unbalanced fundamental circuit of the BFS forests
    rooted at each vertex in turn, checking whether the rest is still
    unbalanced.  Failing that, and if ``exhaustive``, every circuit is tried;
    this is exponential and only sensible for small graphs.  With
    ``exhaustive=False`` a ``None`` answer is not a proof of absence.
    """
    full = sg.graph.edge_ids()
    tried: set[frozenset[int]] = set()
    for r in range(sg.n):
        order = [r] + [v for v in range(sg.n) if v != r]
        _, parent, depth, bad = _spanning_search(sg, full, order)
        for e, x, y in bad:
            c1 = Trail(x, ((e, x),)) if x == y else _fundamental_circuit(parent, depth, e, x, y)
            key = c1.edge_set()
            if key in tried:
                continue
            tried.add(key)
            cert = is_balanced(sg, full - key)
            if cert.witness is not None:
                return c1, cert.witness
    if not exhaustive:
        return None
    for c1 in iter_circuits(sg.graph):
        key = c1.edge_set()
        if key in tried or not is_unbalanced_circuit(sg, c1):
            continue
        cert = is_balanced(sg, full - key)
        if cert.witness is not None:
            return c1, cert.witness
    return None


def three_disjoint_unbalanced_circuits(
    sg: SignedGraph, witnesses: tuple[Trail, Trail]
) -> tuple[Trail, Trail, Trail]:
    """Extend two edge-disjoint unbalanced circuits by a third.

    Needs an odd number of negative edges and all degrees even; the third
    circuit comes from a component of the remainder with an odd number of
    negative edges.
    """
    if negative_parity(sg) != "odd":
        raise PreconditionError("the number of negative edges is even")
    c1, c2 = witnesses
    _check_witness(sg, c1, "first witness")
    _check_witness(sg, c2, "second witness")
    shared = c1.edge_set() & c2.edge_set()
    if shared:
        raise PreconditionError(f"witnesses share edge {min(shared)}")
    rest = sg.graph.edge_ids() - c1.edge_set() - c2.edge_set()
    for comp in edge_components(sg.graph, rest):
        if sg.count_negative(comp) % 2:
            cert = is_balanced(sg, comp)
            if cert.witness is None:
                raise PreconditionError("a component with an odd number of negative edges is balanced; graph is not eulerian")
            return c1, c2, cert.witness
    raise TheoremViolation("no component of the remainder has an odd number of negative edges")
