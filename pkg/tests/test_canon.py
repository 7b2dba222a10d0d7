import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, graphs_with_perm
from helpers import to_nx
from lapgirth.canon import canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from lapgirth.families import make
from lapgirth.graph import complete_bipartite, cycle, relabel


def test_c4_is_k22():
    assert is_isomorphic(cycle(4), complete_bipartite(2, 2))


def test_distinct_y_graphs():
    assert not is_isomorphic(make("Y(8,3)"), make("Y(8,4)"))
    assert not is_isomorphic(make("K23Star"), make("K23DoubleStar"))


@given(graphs_with_perm(max_order=10))
def test_invariant_under_relabelling(gp):
    g, perm = gp
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@given(graphs(max_order=10))
def test_labeling_is_a_permutation(g):
    lab = canonical_labeling(g)
    assert sorted(lab) == list(range(g.order))
    assert is_isomorphic(canonical_graph(g), g)


@given(st.data())
def test_agrees_with_networkx(data):
    n = data.draw(st.integers(1, 7))
    g = data.draw(graphs(n, n))
    h = data.draw(graphs(n, n))
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
