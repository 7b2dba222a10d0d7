import json
import math
from importlib import resources

import jsonschema
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapgirth.canon import canonical_form, is_isomorphic
from lapgirth.families import make
from lapgirth.graph import Graph, cycle, path
from lapgirth.graph6 import parse_graph6
from lapgirth.spectra import mu_k
from lapgirth.verify import (
    PreconditionError,
    TheoremReport,
    Which,
    check_girth_bound,
    classify_girth3,
    exhaustive_equality_search,
    exhaustive_mult_n,
    exhaustive_thr,
    verify_y1_factorization,
    y1_factorization,
    y1_uniqueness_search,
)

SCHEMA = json.loads(resources.files("lapgirth").joinpath("schemas/theorem_report.schema.json").read_text())


@pytest.mark.parametrize(
    "name, k, count",
    [("K(2,3)", 1, 1), ("Y(9,3)", 2, 2), ("K(3,4)", 3, 3), ("G1", 3, 3), ("G2", 4, 4)],
)
def test_equality_examples(name, k, count):
    res = check_girth_bound(make(name), k)
    assert res.holds and res.is_equality and res.count == count


def test_strict_example():
    res = check_girth_bound(make("Y(9,1)"), 2)
    assert res.holds and not res.is_equality


@pytest.mark.parametrize(
    "graph, k, reason",
    [
        (cycle(6), 1, "outside"),
        (path(5), 1, "forest"),
        (make("K(4)"), 1, "girth 3"),
        (make("K(3,4)"), 4, "outside"),
    ],
)
def test_preconditions(graph, k, reason):
    with pytest.raises(PreconditionError, match=reason):
        check_girth_bound(graph, k)


def test_disconnected_precondition():
    with pytest.raises(PreconditionError, match="connected"):
        check_girth_bound(parse_graph6("E??W"), 1)


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 1, ["K(2,3)", "U(5)"]), (6, 1, ["U(6)"]), (6, 2, ["K(2,4)", "K23Star"]), (7, 2, ["K23DoubleStar", "Y(7,3)"])],
)
def test_sweeps_small(n, k, expected):
    rep = exhaustive_equality_search(n, k)
    assert rep.match and not rep.violations
    assert {canonical_form(make(e)) for e in expected} == set(rep.equality_witnesses)


def test_witnesses_reproduce():
    rep = exhaustive_equality_search(7, 3)
    assert rep.match
    for text in rep.equality_witnesses:
        assert check_girth_bound(parse_graph6(text), 3).is_equality
    assert canonical_form(make("K(3,4)")) in rep.equality_witnesses


def test_parallel_matches_serial():
    a = exhaustive_equality_search(7, 1, jobs=1)
    b = exhaustive_equality_search(7, 1, jobs=3)
    assert a.to_dict() == b.to_dict()


reports = st.builds(
    TheoremReport,
    theorem_id=st.just("GEN_K"),
    params=st.just({"n": 6, "k": 1}),
    graphs_checked=st.integers(0, 100),
    violations=st.lists(st.sampled_from(["E?~o", "EIIW", "E_lo"]), unique=True),
    equality_witnesses=st.lists(st.sampled_from(["E?~o", "EIIW", "E_lo", "Er~w"]), unique=True),
)


@given(reports, reports, reports)
def test_merge_is_associative_and_commutative(a, b, c):
    left = a.merge(b).merge(c).to_dict()
    right = a.merge(b.merge(c)).to_dict()
    assert left == right
    assert a.merge(b).to_dict() == b.merge(a).to_dict()


def test_merge_rejects_mismatched():
    with pytest.raises(ValueError):
        TheoremReport("GEN_K", {"n": 6, "k": 1}).merge(TheoremReport("GEN_K", {"n": 6, "k": 2}))


def test_json_roundtrip_and_schema():
    for rep in (exhaustive_equality_search(6, 2), exhaustive_thr(5), exhaustive_mult_n(5), y1_uniqueness_search(7)):
        d = json.loads(rep.to_json())
        jsonschema.validate(d, SCHEMA)
        assert TheoremReport.from_dict(d).to_dict() == rep.to_dict()


def test_classify_examples():
    k6 = classify_girth3(make("K(6)"), Which.MULT_N)
    assert (k6.label, k6.value) == ("Kn", 5)
    e = classify_girth3(make("KnMinusE(6)"), "mult_n")
    assert (e.label, e.value) == ("Kn_minus_e", 4)
    h = classify_girth3(make("H(6,1)"), Which.TOP_INTERVAL)
    assert (h.label, h.value, h.witness_params) == ("HA", 3, (6, 1))
    triangle_with_tail = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    other = classify_girth3(triangle_with_tail, Which.TOP_INTERVAL)
    assert other.label == "OTHER"


def test_classify_labels_families():
    assert classify_girth3(make("KnMinusStar(7,3)"), Which.TOP_INTERVAL).label == "KN_MINUS_STAR"
    assert classify_girth3(make("FamilyA(7,3)"), Which.TOP_INTERVAL).label == "A"
    assert classify_girth3(make("H(7)"), Which.TOP_INTERVAL).label == "H"
    assert classify_girth3(make("KJoin3K1(7)"), Which.MULT_N).label == "THREE_JOIN"


def test_classify_preconditions():
    with pytest.raises(PreconditionError):
        classify_girth3(cycle(5), Which.MULT_N)
    with pytest.raises(PreconditionError):
        classify_girth3(make("K(4)"), Which.MULT_N)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_thr_top_interval(n):
    rep = exhaustive_thr(n)
    assert rep.match
    assert any("FamilyA" in note for note in rep.notes)


def test_thr_six_contains_h_graphs():
    rep = exhaustive_thr(6)
    assert canonical_form(make("H(6)")) in rep.equality_witnesses
    assert canonical_form(make("H(6,1)")) in rep.equality_witnesses


@pytest.mark.parametrize("n", [5, 6, 7])
def test_mult_n_corrected_list(n):
    assert exhaustive_mult_n(n, corrected=True).match
    stated = exhaustive_mult_n(n)
    assert not stated.violations and not stated.match


@pytest.mark.parametrize("n", range(6, 13))
def test_y1_factorization(n):
    assert verify_y1_factorization(n)


def test_y1_odd_closed_form():
    res = y1_factorization(11)
    assert res.mu2_closed_form_error is not None and res.mu2_closed_form_error < 1e-8
    assert abs(mu_k(make("Y(11,1)"), 2) - (2 + 2 * math.cos(math.pi / 9))) < 1e-8


def test_y1_uniqueness_exploratory():
    for n in (7, 8):
        rep = y1_uniqueness_search(n)
        assert rep.match
        assert is_isomorphic(parse_graph6(rep.equality_witnesses[0]), make(f"Y({n},1)"))
