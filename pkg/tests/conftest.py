import pytest
from hypothesis import strategies as st

from amnesiac.graph import Graph

# Filled by test_acceptance.py; printed at the end of the session.
ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {number:>2} {status} {title} ({report.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """Random spanning tree plus a random extra edge subset."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if others:
        edges |= set(draw(st.lists(st.sampled_from(others), unique=True)))
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def graphs_with_sources(draw, min_n=2, max_n=8):
    g = draw(connected_graphs(min_n, max_n))
    sources = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n, unique=True))
    return g, sorted(sources)
