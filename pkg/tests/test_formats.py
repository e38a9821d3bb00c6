import pytest
from hypothesis import given

from reedlab.formats import (
    FormatError,
    emit_dimacs,
    emit_edge_list,
    emit_graph6,
    parse_dimacs,
    parse_edge_list,
    parse_graph6,
)
from reedlab.graph import Graph, complete, cycle, gnp

from helpers import graphs
from oracles import all_labeled_graphs


def test_graph6_hand_decoded_star():
    # 'D' -> n=5; '?{' -> bits 000000 111100: the 4 edges into vertex 4
    g = parse_graph6("D?{")
    assert g == Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    assert emit_graph6(g) == "D?{"


def test_graph6_hand_decoded_cycle():
    # 'h' = 41 = 101001, 'c' = 36 = 100100 -> edges 01 12 23 04 34
    g = parse_graph6("Dhc")
    assert g == cycle(5)
    assert emit_graph6(g) == "Dhc"


def test_graph6_smallest():
    assert parse_graph6("@") == Graph.from_edges(1, [])
    assert emit_graph6(complete(1)) == "@"
    assert emit_graph6(Graph(0, ())) == "?"


def test_graph6_header_and_newline():
    assert parse_graph6(">>graph6<<Dhc\n") == cycle(5)


def test_graph6_long_form():
    g = gnp(70, 0.3, seed=5)
    s = emit_graph6(g)
    assert s[0] == "~" and s[1] != "~"
    assert parse_graph6(s) == g
    # the 18-bit form for a small n is accepted too
    assert parse_graph6("~??D" + "hc") == cycle(5)


@pytest.mark.parametrize(
    "bad, offset",
    [
        ("D h", 1),  # space is below '?'
        ("Dh", 2),  # needs two body chars
        ("Dhcc", 3),  # trailing data
        ("Dhd", 2),  # nonzero padding
        ("~?", 2),  # truncated long header
        ("", 0),
    ],
)
def test_graph6_errors_report_offset(bad, offset):
    with pytest.raises(FormatError) as e:
        parse_graph6(bad)
    assert e.value.offset == offset


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_exhaustive_small():
    for n in range(6):
        for g in all_labeled_graphs(n):
            s = emit_graph6(g)
            assert parse_graph6(s) == g
            assert emit_graph6(parse_graph6(s)) == s


def test_dimacs():
    assert parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == complete(3)
    assert parse_dimacs("c hi\np edge 2 2\ne 1 2\ne 1 2\n").m == 1
    with pytest.raises(FormatError, match="loop"):
        parse_dimacs("p edge 2 1\ne 1 1\n")
    with pytest.raises(FormatError) as e:
        parse_dimacs("p edge 2 1\ne 1 3\n")
    assert e.value.line == 2
    with pytest.raises(FormatError) as e:
        parse_dimacs("p edge 2 1\nx\n")
    assert e.value.line == 2
    g = gnp(9, 0.4, seed=2)
    assert parse_dimacs(emit_dimacs(g)) == g


def test_edge_list():
    assert parse_edge_list("3\n0 1\n1 2\n0 2\n") == complete(3)
    with pytest.raises(FormatError, match="loop"):
        parse_edge_list("3\n1 1\n")
    with pytest.raises(FormatError) as e:
        parse_edge_list("3\n0 1\n0 5\n")
    assert e.value.line == 3
    with pytest.raises(FormatError):
        parse_edge_list("3\n0 1 2\n")
    g = gnp(9, 0.4, seed=3)
    assert parse_edge_list(emit_edge_list(g)) == g
