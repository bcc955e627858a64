"""Independent checks on decompositions.

Nothing here trusts the constructions: the parts are re-read as raw edge
sets and every condition is recomputed from the parent graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .decomp.base import Decomposition, underlying
from .graph import MultiGraph, degrees_in, is_connected_edges, vertices_of
from .signed import SignedGraph

Status = Literal["pass", "fail"]


@dataclass
class Certificate:
    """Outcome of a verification: which conditions were checked, which failed."""

    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)
    messages: list[str] = field(default_factory=list)

    @property
    def status(self) -> Status:
        return "fail" if self.violations else "pass"

    def __bool__(self) -> bool:
        return not self.violations

    def fail(self, condition: str, witness: tuple[int, ...], message: str) -> None:
        self.violations.append((condition, witness))
        self.messages.append(message)

    def summary(self) -> str:
        if not self.violations:
            return "pass (" + ", ".join(self.checked) + ")"
        return "; ".join(self.messages)


def verify_decomposition(
    g: MultiGraph | SignedGraph,
    dec: Decomposition,
    *,
    k: int | None = None,
    odd: bool = True,
    rooted: bool = False,
    signed_odd: bool = False,
) -> Certificate:
    """Check ``dec`` against ``g``.

    Always checked: the parts partition the edges, each part is nonempty,
    connected and has all degrees even.  Optional: the number of parts is
    ``k``; each part has odd size (``odd``); each part has an odd number of
    negative edges (``signed_odd``, needs a signed ``g``, replaces ``odd``);
    every part contains ``dec.root`` (``rooted``).
    """
    graph = underlying(g)
    cert = Certificate()
    parts = [frozenset(p) for p in dec.parts]

    cert.checked.append("partition")
    owner: dict[int, int] = {}
    for i, part in enumerate(parts):
        for e in sorted(part):
            if not (isinstance(e, int) and 0 <= e < graph.m):
                cert.fail("partition", (i, e), f"part {i} has unknown edge {e}")
                continue
            if e in owner:
                cert.fail("partition", (e, owner[e], i), f"not a partition: edge {e} in parts {owner[e]} and {i}")
            else:
                owner[e] = i
    for e in range(graph.m):
        if e not in owner:
            cert.fail("partition", (e,), f"not a partition: edge {e} uncovered")

    if k is not None:
        cert.checked.append("count")
        if len(parts) != k:
            cert.fail("count", (len(parts),), f"{len(parts)} parts, expected {k}")

    cert.checked.append("eulerian")
    for i, part in enumerate(parts):
        known = frozenset(e for e in part if isinstance(e, int) and 0 <= e < graph.m)
        if not known:
            cert.fail("eulerian", (i,), f"part {i} is empty")
            continue
        for v, d in sorted(degrees_in(graph, known).items()):
            if d % 2:
                cert.fail("eulerian", (i, v), f"part {i}: odd degree at vertex {v}")
        if not is_connected_edges(graph, known):
            cert.fail("eulerian", (i,), f"part {i} is disconnected")

    if signed_odd:
        cert.checked.append("signed-odd")
        if not isinstance(g, SignedGraph):
            cert.fail("signed-odd", (), "signed parity requested on an unsigned graph")
        else:
            for i, part in enumerate(parts):
                neg = sum(1 for e in part if 0 <= e < graph.m and g.signs[e] < 0)
                if neg % 2 == 0:
                    cert.fail("signed-odd", (i,), f"part {i} has an even number ({neg}) of negative edges")
    elif odd:
        cert.checked.append("odd")
        for i, part in enumerate(parts):
            if len(part) % 2 == 0:
                cert.fail("odd", (i,), f"part {i} even edge count")

    if rooted:
        cert.checked.append("root")
        r = dec.root
        if r is None or not (0 <= r < graph.n):
            cert.fail("root", (), f"no valid root given ({r})")
        else:
            for i, part in enumerate(parts):
                if r not in vertices_of(graph, (e for e in part if 0 <= e < graph.m)):
                    cert.fail("root", (i, r), f"part {i} misses root {r}")
    return cert
