"""Rooted 3-odd decompositions of 6-edge-connected 6-regular signed graphs.

Induction on the order.  Given three edge-disjoint unbalanced circuits the
position analysis either assembles the decomposition directly or names a
vertex whose splitting off keeps two of the unbalanced circuits (or two
circuits of the leftover 2-factor) intact; the child is solved recursively
and the answer lifted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import GraphError, PreconditionError, TheoremViolation
from ..euler import Trail, check_trail, eulerian_trail
from ..graph import EdgeSubset, degrees_in, edge_components, has_connectivity, vertices_of
from ..signed import (
    SignedGraph,
    is_unbalanced_circuit,
    negative_parity,
    three_disjoint_unbalanced_circuits,
    two_disjoint_unbalanced_circuits,
)
from .base import Decomposition
from .splitting import SplitRecord, lift, split_off


@dataclass
class SolveTrace:
    """Counters describing which branches a run took (for tests and logs)."""

    splits: list[SplitRecord] = field(default_factory=list)
    branches: list[str] = field(default_factory=list)


def _circuit_of(g, edges: frozenset[int], start: int | None = None) -> Trail:
    return eulerian_trail(EdgeSubset(g, edges), start=start)


def _absorb(g, seeds: Sequence[frozenset[int]], pending: Sequence[frozenset[int]]) -> tuple[frozenset[int], ...]:
    """Attach each pending component to the least-index part it touches."""
    parts = [set(s) for s in seeds]
    verts = [set(vertices_of(g, s)) for s in seeds]
    queue = sorted(pending, key=min)
    while queue:
        left = []
        for comp in queue:
            cv = vertices_of(g, comp)
            for i in range(len(parts)):
                if cv & verts[i]:
                    parts[i] |= comp
                    verts[i] |= cv
                    break
            else:
                left.append(comp)
        if len(left) == len(queue):
            raise TheoremViolation("a leftover component touches no part")
        queue = left
    return tuple(frozenset(p) for p in parts)


def _chord_split(c: Trail, x: int, y: int, e: int) -> tuple[Trail, Trail, list[int], list[int]] | None:
    """Cut circuit ``c`` by the chord ``e = xy``.

    Returns ``(Pe, eQ, inner(P), inner(Q))`` when ``y`` is not a neighbour
    of ``x`` along ``c``, else ``None``.
    """
    verts = c.vertices[:-1]
    edges = c.edges
    L = len(edges)
    i = verts.index(x)
    verts = verts[i:] + verts[:i]
    edges = edges[i:] + edges[:i]
    j = verts.index(y)
    if j < 2 or L - j < 2:
        return None
    p_steps = tuple((edges[t], verts[t + 1]) for t in range(j))
    q_steps = tuple((edges[t], verts[(t + 1) % L]) for t in range(j, L))
    pe = Trail(x, p_steps + ((e, x),))
    eq = Trail(x, ((e, y),) + q_steps)
    return pe, eq, verts[1:j], verts[j + 1:]


def _case_ladder(sg: SignedGraph, circuits: list[Trail], trace: SolveTrace | None) -> Decomposition | tuple[int, tuple[Trail, Trail]]:
    """Either a rooted 3-odd decomposition or ``(vertex, survivors)`` to split."""
    g = sg.graph

    def note(branch: str) -> None:
        if trace is not None:
            trace.branches.append(branch)

    on = [set(c.vertices) for c in circuits]
    member = [frozenset(i for i in range(3) if v in on[i]) for v in range(g.n)]
    for v in range(g.n):
        if len(member[v]) <= 1:
            note("sparse-vertex")
            keep = [c for i, c in enumerate(circuits) if v not in on[i]]
            return v, (keep[0], keep[1])

    used = frozenset().union(*(c.edge_set() for c in circuits))
    h_comps = sorted(edge_components(g, g.edge_ids() - used), key=min)
    for comp in h_comps:
        if any(d != 2 for d in degrees_in(g, comp).values()):
            raise TheoremViolation("a component of the leftover graph is not a circuit")
    unbalanced = [comp for comp in h_comps if sg.count_negative(comp) % 2]
    seeds = [c.edge_set() for c in circuits]

    triple = [v for v in range(g.n) if len(member[v]) == 3]
    if triple:
        v = triple[0]
        if not unbalanced:
            note("triple-balanced")
            return Decomposition(sg, _absorb(g, seeds, h_comps), root=v)
        if len(unbalanced) < 2:
            raise TheoremViolation("leftover graph has exactly one unbalanced circuit")
        note("triple-unbalanced")
        return v, (_circuit_of(g, unbalanced[0]), _circuit_of(g, unbalanced[1]))

    if len(unbalanced) >= 2:
        note("two-factor-unbalanced")
        d1, d2 = unbalanced[0], unbalanced[1]
        v = min(vertices_of(g, d1))
        j = next(i for i in range(3) if v not in on[i])
        return v, (circuits[j], _circuit_of(g, d2))
    if unbalanced:
        raise TheoremViolation("leftover 2-factor has exactly one unbalanced circuit")

    for bi, comp in enumerate(h_comps):
        cv = sorted(vertices_of(g, comp))
        v = cv[0]
        w = next((u for u in cv if member[u] != member[v]), None)
        if w is None:
            continue
        note("mixed-type")
        (a,) = member[v] & member[w]
        (b,) = member[v] - {a}
        (c,) = member[w] - {a}
        parts = [seeds[a], seeds[b], seeds[c] | comp]
        rest = [h for i, h in enumerate(h_comps) if i != bi]
        return Decomposition(sg, _absorb(g, parts, rest), root=v)

    # every leftover circuit is of a single type
    start = 0
    comp = next(h for h in h_comps if start in vertices_of(g, h))
    walk = _circuit_of(g, comp, start=start)
    x = walk.start
    for e, y in walk.steps:
        for i in sorted(member[x]):
            cut = _chord_split(circuits[i], x, y, e)
            if cut is None:
                continue
            pe, eq, inner_p, inner_q = cut
            if is_unbalanced_circuit(sg, pe):
                kept, u = pe, inner_q[0]
            else:
                kept, u = eq, inner_p[0]
            note("monotype-chord")
            new = [kept if t == i else circuits[t] for t in range(3)]
            keep = [t for t in new if u not in t.vertices]
            if len(keep) != 2:
                raise TheoremViolation("chord split did not free a vertex")
            return u, (keep[0], keep[1])
        x = y
    raise TheoremViolation(
        "every leftover edge joins neighbours on both of its circuits",
        instance=repr((g.edges, sg.signs)),
    )


def _check_hypotheses(sg: SignedGraph) -> None:
    g = sg.graph
    if g.n == 0:
        raise PreconditionError("empty graph")
    if not g.is_regular(6):
        bad = next(u for u in range(g.n) if g.degree(u) != 6)
        raise PreconditionError(f"vertex {bad} has degree {g.degree(bad)}, expected 6")
    if not has_connectivity(g, 6):
        raise PreconditionError("graph is not 6-edge-connected")
    if negative_parity(sg) != "odd":
        raise PreconditionError("the number of negative edges is even")


def signed_rooted_3_odd(
    sg: SignedGraph,
    witnesses: tuple[Trail, Trail] | None = None,
    *,
    trace: SolveTrace | None = None,
    check: bool = True,
) -> Decomposition:
    """Rooted decomposition into three eulerian parts with an odd number of
    negative edges each.

    Requires a 6-edge-connected 6-regular signed graph with an odd number of
    negative edges and two edge-disjoint unbalanced circuits (searched for
    when ``witnesses`` is omitted).
    """
    if check:
        _check_hypotheses(sg)
    if witnesses is None:
        witnesses = two_disjoint_unbalanced_circuits(sg)
        if witnesses is None:
            raise PreconditionError("graph has no two edge-disjoint unbalanced circuits")
    else:
        for i, c in enumerate(witnesses):
            try:
                check_trail(sg.graph, c, circuit=True)
            except GraphError as exc:
                raise PreconditionError(f"witness {i} is not a circuit: {exc}") from None
            if not is_unbalanced_circuit(sg, c):
                raise PreconditionError(f"witness {i} is balanced")
        if witnesses[0].edge_set() & witnesses[1].edge_set():
            raise PreconditionError("witnesses share an edge")
    return _solve(sg, witnesses, trace)


def _solve(sg: SignedGraph, witnesses: tuple[Trail, Trail], trace: SolveTrace | None) -> Decomposition:
    g = sg.graph
    if g.n == 1:
        if sg.negative_count != 3:
            raise TheoremViolation("single-vertex case is not a bouquet of three negative loops")
        if trace is not None:
            trace.branches.append("bouquet")
        return Decomposition(sg, tuple(frozenset((e,)) for e in range(g.m)), root=0)
    circuits = list(three_disjoint_unbalanced_circuits(sg, witnesses))
    outcome = _case_ladder(sg, circuits, trace)
    if isinstance(outcome, Decomposition):
        return outcome
    v, survivors = outcome
    rec = split_off(sg, v, check_parent=False)
    if trace is not None:
        trace.splits.append(rec)
    child_witnesses = (rec.transfer(survivors[0]), rec.transfer(survivors[1]))
    return lift(rec, _solve(rec.child, child_witnesses, trace))
