import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddtrails.errors import GraphError, PreconditionError
from oddtrails.euler import Trail, check_trail, iter_circuits
from oddtrails.graph import build
from oddtrails.signed import (
    SignedGraph,
    is_balanced,
    is_tightly_unbalanced,
    is_unbalanced_circuit,
    negative_parity,
    sign_product,
    switch,
    three_disjoint_unbalanced_circuits,
    two_disjoint_unbalanced_circuits,
)
from support import bouquet, complete, cycle, eulerian_graphs, signed_graphs


def test_signs_validated():
    with pytest.raises(GraphError):
        SignedGraph(cycle(3), (1, 1))
    with pytest.raises(GraphError, match="edge 1"):
        SignedGraph(cycle(3), (1, 0, 1))


def test_switch_flips_cut_edges():
    sg = SignedGraph.all_positive(cycle(4))
    assert switch(sg, {0}).signs == (-1, 1, 1, -1)
    assert switch(sg, {0, 1, 2, 3}).signs == sg.signs


def test_negative_parity():
    sg = SignedGraph(cycle(3), (-1, 1, -1))
    assert negative_parity(sg) == "even"
    assert negative_parity(sg, [0]) == "odd"
    assert sign_product(sg, [0, 1]) == -1


@settings(max_examples=100, deadline=None)
@given(signed_graphs(eulerian_graphs(max_n=5, max_edges=10)), st.data())
def test_switching_preserves_circuit_signs(sg, data):
    U = data.draw(st.sets(st.integers(0, sg.n - 1)))
    other = switch(sg, U)
    for c in iter_circuits(sg.graph):
        assert sign_product(sg, c.edges) == sign_product(other, c.edges)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(eulerian_graphs(max_n=6, max_edges=12)))
def test_balance_certificate(sg):
    cert = is_balanced(sg)
    if cert.balanced:
        # switching at the negative-potential vertices makes every edge positive
        U = {v for v, p in enumerate(cert.potentials) if p < 0}
        assert switch(sg, U).negative_count == 0
        assert all(sign_product(sg, c.edges) == 1 for c in iter_circuits(sg.graph))
    else:
        check_trail(sg.graph, cert.witness, circuit=True)
        assert is_unbalanced_circuit(sg, cert.witness)


def test_balance_of_known_graphs():
    assert is_balanced(SignedGraph.all_negative(cycle(4)))
    odd = is_balanced(SignedGraph.all_negative(cycle(5)))
    assert not odd and sorted(odd.witness.edges) == [0, 1, 2, 3, 4]
    loop = is_balanced(SignedGraph.all_negative(bouquet(1)))
    assert loop.witness == Trail(0, ((0, 0),))


def test_tightly_vs_amply():
    # one negative edge on a 4-cycle: deleting it balances the graph
    assert is_tightly_unbalanced(SignedGraph(cycle(4), (1, -1, 1, 1))) == 0
    assert is_tightly_unbalanced(SignedGraph.all_negative(bouquet(3))) is None
    with pytest.raises(PreconditionError):
        is_tightly_unbalanced(SignedGraph.all_positive(cycle(3)))


def test_k4_non_eulerian_counterexample():
    # amply unbalanced but any two odd circuits of K4 share an edge
    sg = SignedGraph.all_negative(complete(4))
    assert is_tightly_unbalanced(sg) is None
    assert two_disjoint_unbalanced_circuits(sg) is None


def test_two_disjoint_unbalanced_circuits_found():
    sg = SignedGraph.all_negative(complete(5))
    c1, c2 = two_disjoint_unbalanced_circuits(sg)
    assert not c1.edge_set() & c2.edge_set()
    for c in (c1, c2):
        check_trail(sg.graph, c, circuit=True)
        assert is_unbalanced_circuit(sg, c)


@settings(max_examples=150, deadline=None)
@given(signed_graphs(eulerian_graphs(max_n=6, max_edges=12)))
def test_two_circuits_iff_amply_unbalanced_on_eulerian(sg):
    if is_balanced(sg):
        return
    two = two_disjoint_unbalanced_circuits(sg) is not None
    assert two == (is_tightly_unbalanced(sg) is None)


def test_three_disjoint_unbalanced_circuits():
    sg = SignedGraph.all_negative(complete(7))
    c1, c2 = two_disjoint_unbalanced_circuits(sg)
    trio = three_disjoint_unbalanced_circuits(sg, (c1, c2))
    sets = [c.edge_set() for c in trio]
    assert not (sets[0] & sets[1] or sets[0] & sets[2] or sets[1] & sets[2])
    assert all(is_unbalanced_circuit(sg, c) for c in trio)


def test_three_circuits_preconditions():
    sg = SignedGraph.all_negative(build(1, [(0, 0)] * 4))
    loops = (Trail(0, ((0, 0),)), Trail(0, ((1, 0),)))
    with pytest.raises(PreconditionError, match="even"):
        three_disjoint_unbalanced_circuits(sg, loops)
    sg = SignedGraph.all_negative(bouquet(3))
    with pytest.raises(PreconditionError, match="share"):
        three_disjoint_unbalanced_circuits(sg, (loops[0], loops[0]))
    assert len(three_disjoint_unbalanced_circuits(sg, loops)) == 3
