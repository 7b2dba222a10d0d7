import pytest

from lapgirth.families import make
from lapgirth.generate import enumerate_connected
from lapgirth.graph import complete, cycle, path, star
from lapgirth.lemmas import (
    EXACT_CHECKS,
    SMALL_CHECKS,
    closed_forms,
    complement_identity,
    connectivity_upper,
    lemma_suite,
    pendant_multiplicity,
)
from lapgirth.spectra import charpoly


def test_suite_small_is_clean():
    rep = lemma_suite(6)
    assert rep.ok, {k: v[:3] for k, v in rep.counterexamples.items() if v}
    assert set(rep.counterexamples) >= set(EXACT_CHECKS) | set(SMALL_CHECKS) | {"closed_forms", "weyl"}


def test_complement_on_all_small_graphs():
    graphs = [g for n in range(2, 6) for g in enumerate_connected(n)]
    assert len(graphs) == 1 + 2 + 6 + 21
    assert all(complement_identity(g, charpoly(g)) is None for g in graphs)


def test_closed_forms():
    assert closed_forms() == []


@pytest.mark.parametrize("g", [star(4), make("U(6)"), path(5), make("Y(8,1)")])
def test_pendant_bound_examples(g):
    assert pendant_multiplicity(g, charpoly(g)) is None


def test_connectivity_skips_complete():
    assert connectivity_upper(complete(5), charpoly(complete(5))) is None
    assert connectivity_upper(cycle(6), charpoly(cycle(6))) is None


def test_checks_detect_a_wrong_polynomial():
    # feeding the polynomial of another graph must trip the exact checks
    g = make("U(6)")
    wrong = charpoly(cycle(6))
    assert complement_identity(g, wrong) is not None
    assert EXACT_CHECKS["cut_edge_recursion"](g, wrong) is not None
