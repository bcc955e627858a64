import itertools
import random

import pytest

from oddtrails.decomp import Decomposition, SolveTrace, signed_rooted_3_odd
from oddtrails.decomp.signed3 import _case_ladder
from oddtrails.errors import PreconditionError
from oddtrails.euler import Trail, iter_circuits
from oddtrails.generate import InstanceSpec, gen
from oddtrails.signed import SignedGraph, is_tightly_unbalanced, is_unbalanced_circuit
from oddtrails.verify import verify_decomposition
from support import bouquet, complete, monotype_instance


def check(sg, dec):
    cert = verify_decomposition(sg, dec, k=3, rooted=True, signed_odd=True)
    assert cert, cert.summary()


def test_bouquet_base_case():
    sg = SignedGraph.all_negative(bouquet(3))
    dec = signed_rooted_3_odd(sg)
    assert dec.parts == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert dec.root == 0


def test_k7_all_negative():
    sg = SignedGraph.all_negative(complete(7))
    dec = signed_rooted_3_odd(sg)
    check(sg, dec)
    assert sum(dec.sizes()) == 21


def test_tightly_unbalanced_rejected():
    # a single negative edge lies on every unbalanced circuit
    sg = SignedGraph(complete(7), (-1,) + (1,) * 20)
    assert is_tightly_unbalanced(sg) == 0
    with pytest.raises(PreconditionError, match="two edge-disjoint unbalanced"):
        signed_rooted_3_odd(sg)


def test_hypotheses_checked():
    with pytest.raises(PreconditionError, match="even"):
        signed_rooted_3_odd(SignedGraph.all_positive(complete(7)))
    g = gen(InstanceSpec(6, 7, seed=1, cut=2))
    with pytest.raises(PreconditionError, match="6-edge-connected"):
        signed_rooted_3_odd(SignedGraph.all_negative(g))
    with pytest.raises(PreconditionError, match="degree"):
        signed_rooted_3_odd(SignedGraph.all_negative(complete(5)))


def test_witnesses_validated():
    sg = SignedGraph.all_negative(complete(7))
    tri = Trail(0, ((0, 1), (6, 2), (1, 0)))
    square = Trail(0, ((0, 1), (6, 2), (11, 3), (2, 0)))
    with pytest.raises(PreconditionError, match="balanced"):
        signed_rooted_3_odd(sg, (tri, square))
    with pytest.raises(PreconditionError, match="share"):
        signed_rooted_3_odd(sg, (tri, tri))


def test_monotype_chord_branch():
    sg, trails = monotype_instance()
    trace = SolveTrace()
    out = _case_ladder(sg, list(trails), trace)
    assert trace.branches == ["monotype-chord"]
    v, (s1, s2) = out
    assert v not in s1.vertices and v not in s2.vertices
    assert is_unbalanced_circuit(sg, s1) and is_unbalanced_circuit(sg, s2)
    check(sg, signed_rooted_3_odd(sg, trails[:2]))


def test_every_branch_is_sound():
    """Drive the case analysis with many circuit triples; decompositions must
    verify and split answers must leave two disjoint unbalanced circuits
    that avoid the split vertex."""
    seen = set()
    for seed in range(40):
        n = [3, 5, 7][seed % 3]
        sign = ["random-odd", "all-negative"][seed % 2]
        sg = gen(InstanceSpec(6, n, seed=seed, floor=6, kind="signed", sign=sign))
        pool = [c for c in iter_circuits(sg.graph) if is_unbalanced_circuit(sg, c)]
        random.Random(seed).shuffle(pool)
        tried = 0
        for a, b, c in itertools.combinations(pool[:40], 3):
            sets = [a.edge_set(), b.edge_set(), c.edge_set()]
            if sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2]:
                continue
            tried += 1
            if tried > 25:
                break
            trace = SolveTrace()
            out = _case_ladder(sg, [a, b, c], trace)
            seen.update(trace.branches)
            if isinstance(out, Decomposition):
                check(sg, out)
            else:
                v, (s1, s2) = out
                assert v not in s1.vertices and v not in s2.vertices
                assert not s1.edge_set() & s2.edge_set()
                assert is_unbalanced_circuit(sg, s1) and is_unbalanced_circuit(sg, s2)
    assert {"sparse-vertex", "triple-balanced", "triple-unbalanced", "two-factor-unbalanced", "mixed-type"} <= seen


def test_random_signed_instances():
    done = 0
    for seed in range(80):
        sg = gen(InstanceSpec(6, [2, 3, 5, 7, 9, 11][seed % 6], seed=seed, floor=6, kind="signed", sign="random-odd"))
        try:
            dec = signed_rooted_3_odd(sg)
        except PreconditionError as exc:
            assert "two edge-disjoint unbalanced" in str(exc)
            assert is_tightly_unbalanced(sg) is not None
            continue
        check(sg, dec)
        done += 1
    assert done >= 60
