"""Splitting off a vertex of degree six and lifting decompositions back."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..errors import PreconditionError, TheoremViolation
from ..euler import Trail
from ..graph import MultiGraph, has_connectivity
from ..signed import SignedGraph, negative_parity
from .base import Decomposition, lift_parts


@dataclass(frozen=True)
class SplitRecord:
    """Result of splitting off ``vertex``.

    ``pairing`` lists the three pairs of parent edges that were joined.
    ``edge_origin[i]`` gives the parent edges standing behind child edge
    ``i``: one edge for inherited edges, two for the new ones, which are
    appended after the inherited edges.
    """

    parent: SignedGraph
    vertex: int
    pairing: tuple[tuple[int, int], ...]
    child: SignedGraph
    vertex_origin: tuple[int, ...]
    edge_origin: tuple[tuple[int, ...], ...]

    def child_vertex(self, v: int) -> int:
        if v == self.vertex:
            raise PreconditionError(f"vertex {v} was split off")
        return v - (v > self.vertex)

    def child_edge(self, e: int) -> int:
        for i, origin in enumerate(self.edge_origin):
            if origin == (e,):
                return i
        raise PreconditionError(f"edge {e} is incident with the split vertex")

    def transfer(self, t: Trail) -> Trail:
        """Carry a trail avoiding the split vertex into the child."""
        return Trail(self.child_vertex(t.start), tuple((self.child_edge(e), self.child_vertex(v)) for e, v in t.steps))


def pairings(items: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    """Perfect matchings of ``items`` in lexicographic order."""
    if not items:
        yield ()
        return
    first = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1:]
        for tail in pairings(rest):
            yield ((first, items[i]),) + tail


def split_child(sg: SignedGraph, v: int, pairing: tuple[tuple[int, int], ...]) -> tuple[SignedGraph, tuple[int, ...], tuple[tuple[int, ...], ...]]:
    g = sg.graph
    vertex_origin = tuple(u for u in range(g.n) if u != v)
    new_id = {u: i for i, u in enumerate(vertex_origin)}
    pairs = []
    signs = []
    origin: list[tuple[int, ...]] = []
    for e, (x, y) in enumerate(g.edges):
        if v in (x, y):
            continue
        pairs.append((new_id[x], new_id[y]))
        signs.append(sg.signs[e])
        origin.append((e,))
    for e, f in pairing:
        pairs.append((new_id[g.other(e, v)], new_id[g.other(f, v)]))
        signs.append(sg.signs[e] * sg.signs[f])
        origin.append((e, f))
    child = SignedGraph(MultiGraph(g.n - 1, tuple(pairs)), tuple(signs))
    return child, vertex_origin, tuple(origin)


def split_off(sg: SignedGraph, v: int, *, check_parent: bool = True) -> SplitRecord:
    """Split off ``v`` from a 6-edge-connected 6-regular signed graph.

    The six edges at ``v`` are paired in the lexicographically least way
    that keeps the child 6-edge-connected.  Each new edge gets the product
    of the signs of its two parent edges, so the parity of the number of
    negative edges is unchanged.
    """
    g = sg.graph
    if g.n < 2:
        raise PreconditionError("cannot split off the only vertex")
    if not g.is_regular(6):
        bad = next(u for u in range(g.n) if g.degree(u) != 6)
        raise PreconditionError(f"vertex {bad} has degree {g.degree(bad)}, expected 6")
    if g.loops_at(v):
        raise PreconditionError(f"vertex {v} carries a loop")
    if check_parent and not has_connectivity(g, 6):
        raise PreconditionError("graph is not 6-edge-connected")
    incident = tuple(sorted(e for e, _ in g.incidence[v]))
    for pairing in pairings(incident):
        child, vertex_origin, origin = split_child(sg, v, pairing)
        if has_connectivity(child.graph, 6):
            if not child.graph.is_regular(6) or negative_parity(child) != negative_parity(sg):
                raise TheoremViolation("split child lost regularity or parity")
            return SplitRecord(sg, v, pairing, child, vertex_origin, origin)
    raise TheoremViolation(f"no pairing at vertex {v} preserves 6-edge-connectivity", instance=repr(g.edges))


def lift(rec: SplitRecord, child_dec: Decomposition) -> Decomposition:
    """Undo the split: every new edge is replaced by its two parent edges."""
    from ..verify import verify_decomposition

    if child_dec.root is None:
        raise PreconditionError("child decomposition is not rooted")
    cert = verify_decomposition(rec.child, child_dec, rooted=True, signed_odd=True)
    if not cert:
        raise PreconditionError(f"child decomposition is invalid: {cert.summary()}")
    parts = lift_parts(child_dec.parts, rec.edge_origin)
    return Decomposition(rec.parent, parts, rec.vertex_origin[child_dec.root])
