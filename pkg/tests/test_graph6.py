import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from helpers import to_nx
from lapgirth.graph import Graph, complete, cycle
from lapgirth.graph6 import Graph6Error, emit_graph6, parse_graph6


def test_k2():
    assert emit_graph6(complete(2)) == "A_"


def test_roundtrip_text():
    g = parse_graph6("D?{")
    assert g.order == 5
    assert emit_graph6(g) == "D?{"


def test_header_accepted():
    assert parse_graph6(">>graph6<<A_") == complete(2)


def test_long_order_prefix():
    g = cycle(70)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("D?{!", 3), ("D?", 2), ("A`", 1)],
)
def test_errors(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


@given(graphs(max_order=12))
def test_roundtrip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(graphs(max_order=12))
def test_agrees_with_networkx(g):
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert Graph(back.number_of_nodes(), back.edges()) == g
