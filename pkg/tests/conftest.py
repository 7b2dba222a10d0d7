import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lapgirth.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="run the long exhaustive sweeps (n = 8 classification)")


def slow_enabled(config) -> bool:
    return config.getoption("--run-slow") or os.environ.get("LAPGIRTH_SLOW") == "1"


def pytest_collection_modifyitems(config, items):
    if slow_enabled(config):
        return
    skip = pytest.mark.skip(reason="slow sweep; use --run-slow or LAPGIRTH_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_perm(draw, min_order: int = 1, max_order: int = 8):
    g = draw(graphs(min_order, max_order))
    perm = draw(st.permutations(list(range(g.order))))
    return g, list(perm)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS, line

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, detail in sorted(RESULTS):
        terminalreporter.write_line(line(cid, ok, detail))
