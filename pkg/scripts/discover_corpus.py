"""Rebuild the negative corpus by deterministic search.

Writes one graph file and one certificate per instance into corpus/.
"""

from __future__ import annotations

import sys
from pathlib import Path

from oddtrails.fileio import write_graph
from oddtrails.generate import InstanceSpec, gen
from oddtrails.graph import build
from oddtrails.oracle import brute_force_exists, certificate_text, scan_roots
from oddtrails.signed import two_disjoint_unbalanced_circuits

OUT = Path(__file__).resolve().parent.parent / "corpus"


def non_root_vertex():
    for seed in range(2000):
        for n in (3, 5):
            g = gen(InstanceSpec(6, n, seed=seed))
            if scan_roots(g, 3).counterexample:
                return g, seed
    raise SystemExit("no graph with a non-root vertex found")


def unrootable_three_odd():
    # three triangles glued in a chain
    g = build(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)])
    assert brute_force_exists(g, 3) is not None
    assert brute_force_exists(g, 3, rooted=True) is None
    return g, None


def signed_without_rooted(cut: int):
    for seed in range(5000):
        for n in (5, 3):
            sg = gen(InstanceSpec(6, n, seed=seed, cut=cut, kind="signed", sign="random-odd"))
            if two_disjoint_unbalanced_circuits(sg) is None:
                continue
            if brute_force_exists(sg, 3, rooted=True) is None:
                return sg, seed
    raise SystemExit(f"no signed lambda={cut} instance found")


def main() -> int:
    OUT.mkdir(exist_ok=True)
    jobs = [
        ("non_root_vertex", "6-regular odd order; some vertex is no root of a rooted 3-odd decomposition", non_root_vertex),
        ("unrootable_3odd", "eulerian; has a 3-odd decomposition but no rooted one", unrootable_three_odd),
        ("signed_lambda2", "signed 6-regular, lambda 2, odd parity, two disjoint unbalanced circuits, no rooted 3-odd", lambda: signed_without_rooted(2)),
        ("signed_lambda4", "signed 6-regular, lambda 4, odd parity, two disjoint unbalanced circuits, no rooted 3-odd", lambda: signed_without_rooted(4)),
    ]
    for name, claim, find in jobs:
        g, seed = find()
        write_graph(OUT / f"{name}.g", g)
        (OUT / f"{name}.cert").write_text(certificate_text(g, 3, claim))
        print(f"{name}: seed {seed}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
