import pytest
from hypothesis import given, settings

from oddtrails.decomp import absence_reason, rooted_2_odd
from oddtrails.errors import PreconditionError
from oddtrails.oracle import brute_force_exists
from oddtrails.verify import verify_decomposition
from support import complete, cycle, eulerian_graphs


def test_c4_absent_bipartite():
    assert rooted_2_odd(cycle(4)) is None
    assert absence_reason(cycle(4)) == "bipartite"


def test_triangle_absent_odd_size():
    assert rooted_2_odd(cycle(3)) is None
    assert absence_reason(cycle(3)) == "odd number of edges"


def test_k5_rooted():
    g = complete(5)
    dec = rooted_2_odd(g)
    assert verify_decomposition(g, dec, k=2, rooted=True)


def test_non_eulerian_rejected():
    with pytest.raises(PreconditionError):
        rooted_2_odd(complete(4))


@settings(max_examples=200, deadline=None)
@given(eulerian_graphs(max_n=6, max_edges=12))
def test_iff_oracle(g):
    dec = rooted_2_odd(g)
    oracle = brute_force_exists(g, 2, rooted=True)
    assert (dec is None) == (oracle is None)
    if dec is not None:
        assert verify_decomposition(g, dec, k=2, rooted=True)
