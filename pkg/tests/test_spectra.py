import math

import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from lapgirth.families import make
from lapgirth.generate import enumerate_connected
from lapgirth.graph import GraphError, complete, complete_bipartite, cycle, path
from lapgirth.interval import IntervalSpec
from lapgirth.poly import IntegerPolynomial as P
from lapgirth.spectra import (
    Ordering,
    charpoly,
    charpoly_matrix,
    charpoly_vertex_deleted,
    charpoly_via_cut_edge,
    count_in_interval,
    eigenvalues_numeric,
    jacobi_eigenvalues,
    laplacian,
    m_interval,
    mu_k,
    mu_k_compare,
    multiplicity,
    spectrum_is_valid,
)


def test_laplacian_examples():
    assert laplacian(complete(2)) == [[1, -1], [-1, 1]]
    L = laplacian(cycle(3))
    assert all(L[i][i] == 2 for i in range(3)) and all(L[i][j] == -1 for i in range(3) for j in range(3) if i != j)
    assert [laplacian(path(3))[i][i] for i in range(3)] == [1, 2, 1]


def test_charpoly_examples():
    assert charpoly(complete(2)) == P([0, -2, 1])
    assert charpoly(cycle(4)) == P([0, -16, 20, -8, 1])
    assert charpoly(complete_bipartite(2, 3)) == P.from_roots([5, 3, 2, 2, 0])
    assert charpoly(complete_bipartite(2, 3)).coeffs[2] == -92


def test_charpoly_bound():
    with pytest.raises(ValueError):
        charpoly(path(13))


def test_counting_examples():
    assert count_in_interval(charpoly(complete_bipartite(2, 3)), IntervalSpec.closed(4, 5)) == 1
    assert count_in_interval(charpoly(cycle(6)), IntervalSpec.point(4)) == 1
    assert m_interval(complete(6), IntervalSpec.point(6)) == 5
    assert m_interval(make("FamilyA(7,2)"), IntervalSpec.closed(6, 7)) == 4
    assert multiplicity(path(4), 0) == 1


@given(graphs(max_order=8))
def test_all_roots_in_zero_n(g):
    assert count_in_interval(charpoly(g), IntervalSpec.closed(0, g.order)) == g.order


def test_mu_k_compare_examples():
    assert mu_k_compare(complete_bipartite(2, 4), 2, 4) is Ordering.EQUAL
    assert mu_k_compare(make("G1"), 3, 4) is Ordering.EQUAL
    assert mu_k_compare(cycle(5), 1, 4) is Ordering.LESS
    assert mu_k_compare(complete(4), 1, 3) is Ordering.GREATER


def test_vertex_deleted_examples():
    assert charpoly_vertex_deleted(complete(2), 0) == P([-1, 1])
    x2 = P([-2, 1])
    for v in range(4):
        assert charpoly_vertex_deleted(cycle(4), v) == x2**3 - P([2]) * x2
    assert charpoly_vertex_deleted(path(3), 1) == P([1, -2, 1])
    with pytest.raises(GraphError):
        charpoly_vertex_deleted(path(3), 3)


def test_cut_edge_examples():
    assert charpoly_via_cut_edge(path(2), (0, 1)) == P([0, -2, 1])
    assert charpoly_via_cut_edge(make("U(6)"), (0, 5)) == charpoly(make("U(6)"))
    y = make("Y(8,1)")
    assert charpoly_via_cut_edge(y, (0, 6)) == charpoly(y)
    with pytest.raises(GraphError):
        charpoly_via_cut_edge(cycle(5), (0, 1))


@given(graphs(max_order=8))
def test_charpoly_matches_numpy(g):
    ours = charpoly(g).coeffs
    if g.order == 0:
        return
    ref = np.poly(np.array(laplacian(g), dtype=float))[::-1]
    assert np.allclose(ours, ref, atol=1e-6 * max(1.0, np.abs(ref).max()))


def test_charpoly_matrix_nonsymmetric():
    assert charpoly_matrix([[1, 2], [3, 4]]) == P([-2, -5, 1])


def test_jacobi_agrees_with_eigvalsh_exhaustive():
    for n in range(1, 8):
        for g in enumerate_connected(n):
            ours = eigenvalues_numeric(g)
            ref = np.sort(np.linalg.eigvalsh(np.array(laplacian(g), dtype=float)))[::-1]
            assert np.max(np.abs(ours - ref)) < 1e-10
            assert spectrum_is_valid(g, ours)


def test_jacobi_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[1.0, 2.0], [0.0, 1.0]])


def test_closed_form_cycle_and_path():
    for n in range(3, 13):
        want = sorted(2 - 2 * math.cos(2 * j * math.pi / n) for j in range(n))
        assert np.allclose(sorted(eigenvalues_numeric(cycle(n))), want, atol=1e-8)
        assert abs(mu_k(path(n), 1) - (2 + 2 * math.cos(math.pi / n))) < 1e-8


def test_mu_k_range():
    with pytest.raises(ValueError):
        mu_k(path(3), 4)
    with pytest.raises(ValueError):
        mu_k_compare(path(3), 0, 1)
