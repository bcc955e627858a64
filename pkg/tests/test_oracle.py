import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddtrails.errors import BoundExceeded, PreconditionError
from oddtrails.graph import build
from oddtrails.oracle import brute_force_exists, scan_roots
from oddtrails.signed import SignedGraph
from oddtrails.verify import verify_decomposition
from support import bouquet, complete, cycle, eulerian_graphs, naive_decomposition_exists, signed_graphs


def test_c4_rooted_absent():
    assert brute_force_exists(cycle(4), 2, rooted=True) is None


def test_k5_rooted_present():
    g = complete(5)
    dec = brute_force_exists(g, 2, rooted=True)
    assert verify_decomposition(g, dec, k=2, rooted=True)


def test_bouquet_signed_rooted():
    sg = SignedGraph.all_negative(bouquet(3))
    dec = brute_force_exists(sg, 3, rooted=True)
    assert verify_decomposition(sg, dec, k=3, rooted=True, signed_odd=True)


def test_fixed_root():
    g = build(3, [(0, 0), (0, 1), (0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (2, 2), (2, 2)])
    assert brute_force_exists(g, 3, root=0) is None
    assert brute_force_exists(g, 3, root=2).root == 2


def test_bound():
    with pytest.raises(BoundExceeded, match="smaller instance"):
        brute_force_exists(complete(7), 3)
    assert brute_force_exists(complete(7), 3, rooted=True, bound=21) is not None


def test_non_eulerian_has_none():
    assert brute_force_exists(complete(4), 1) is None


@settings(max_examples=60, deadline=None)
@given(eulerian_graphs(max_n=5, max_edges=8), st.integers(1, 3), st.booleans())
def test_matches_naive_assignment(g, k, rooted):
    assert (brute_force_exists(g, k, rooted=rooted) is not None) == naive_decomposition_exists(g, k, rooted)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(eulerian_graphs(max_n=4, max_edges=7)), st.integers(1, 3))
def test_signed_matches_naive_assignment(sg, k):
    assert (brute_force_exists(sg, k, rooted=True) is not None) == naive_decomposition_exists(sg, k, True)


@settings(max_examples=60, deadline=None)
@given(eulerian_graphs(max_n=6, max_edges=12), st.integers(1, 3))
def test_witnesses_verify(g, k):
    dec = brute_force_exists(g, k, rooted=True)
    if dec is not None:
        assert verify_decomposition(g, dec, k=k, rooted=True)


def test_scan_k5():
    scan = scan_roots(complete(5), 2)
    assert scan.roots == {v: True for v in range(5)}
    assert not scan.counterexample


def test_scan_with_processes():
    assert scan_roots(complete(5), 2, jobs=2).roots == scan_roots(complete(5), 2).roots


def test_scan_preconditions():
    with pytest.raises(PreconditionError, match="regular"):
        scan_roots(cycle(5), 2)
    with pytest.raises(PreconditionError, match="even order"):
        scan_roots(build(2, [(0, 1)] * 4), 2)
