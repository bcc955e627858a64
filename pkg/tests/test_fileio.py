import pytest
from hypothesis import given, settings

from oddtrails.decomp import Decomposition, rooted_3_odd
from oddtrails.errors import ParseError
from oddtrails.fileio import (
    format_decomposition,
    format_graph,
    parse_decomposition,
    parse_graph,
    read_graph,
    to_dot,
    write_decomposition,
    write_graph,
    read_decomposition,
)
from oddtrails.graph import MultiGraph
from oddtrails.signed import SignedGraph
from support import complete, cycle, multigraphs, signed_graphs


@settings(max_examples=50, deadline=None)
@given(multigraphs())
def test_graph_round_trip(g):
    text = format_graph(g)
    back = parse_graph(text)
    assert isinstance(back, MultiGraph) and back == g
    assert format_graph(back) == text


@settings(max_examples=50, deadline=None)
@given(signed_graphs(multigraphs()))
def test_signed_round_trip(sg):
    text = format_graph(sg)
    back = parse_graph(text)
    if sg.m == 0:
        # no edge line carries a sign, so the file reads back unsigned
        assert back == sg.graph
        return
    assert isinstance(back, SignedGraph) and back.signs == sg.signs
    assert format_graph(back) == text


def test_decomposition_round_trip(tmp_path):
    g = complete(7)
    dec = rooted_3_odd(g)
    write_graph(tmp_path / "k7.g", g)
    write_decomposition(tmp_path / "k7.dec", dec)
    back = read_decomposition(tmp_path / "k7.dec", read_graph(tmp_path / "k7.g"))
    assert back.parts == dec.parts and back.root == dec.root
    assert format_decomposition(back) == (tmp_path / "k7.dec").read_text()


def test_decomposition_text():
    g = cycle(3)
    text = format_decomposition(Decomposition(g, (frozenset({0, 1, 2}),), root=1))
    assert text.splitlines()[0] == "root 1"
    assert text.splitlines()[1] == "part 0: 0 1 2"
    assert text.splitlines()[2].startswith("# trail: 1 ")
    unrooted = format_decomposition(Decomposition(g, (frozenset({0, 1, 2}),)))
    assert unrooted.startswith("root -\n")


def test_comments_and_default_sign():
    sg = parse_graph("# a triangle\ngraph 3\ne 0 1 -\ne 1 2  # plus\n\ne 2 0 +\n")
    assert sg.signs == (-1, 1, 1)


@pytest.mark.parametrize(
    "text,line",
    [
        ("graph 2\ne 0 2\n", 2),
        ("graph 2\ne 0 1 *\n", 2),
        ("e 0 1\n", 1),
        ("graph 2\ngraph 2\n", 2),
        ("graph x\n", 1),
        ("graph 2\ne 0\n", 2),
        ("graph 2\n\nvertex 1\n", 3),
    ],
)
def test_graph_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_missing_header():
    with pytest.raises(ParseError, match="missing"):
        parse_graph("# nothing\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("part 0: 0 1 2\n", None),
        ("root 0\npart 1: 0 1 2\n", 2),
        ("root 0\npart 0: 0 a\n", 2),
        ("root 0\nroot 1\n", 2),
        ("root x\n", 1),
        ("root 0\nfoo\n", 2),
    ],
)
def test_decomposition_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_decomposition(text, cycle(3))
    assert info.value.line == line


def test_dot():
    sg = SignedGraph(cycle(3), (-1, 1, 1))
    dec = Decomposition(sg, (frozenset({0, 1, 2}),), root=2)
    dot = to_dot(sg, dec)
    assert dot.startswith("graph G {\n") and dot.endswith("}\n")
    assert "2 [shape=doublecircle];" in dot
    assert '0 -- 1 [label="0", color=red, style=dashed];' in dot
    assert "style=dashed" not in to_dot(cycle(3))
