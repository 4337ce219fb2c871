"""Acceptance criteria 1-12, each at its stated scope.

A pass/fail line per criterion is printed in the terminal summary.
"""

import math
import time

import pytest

from amnesiac.centers import flood_k, k_radius, ni_k_radius
from amnesiac.cli import main
from amnesiac.flood import flood_rounds
from amnesiac.graph import Graph, radius_diameter
from amnesiac.reductions import validate_reduction
from amnesiac.verify import enumerate_connected, run_suite


def cycle_closed_form(n, k):
    if n % 2 == 1:
        return math.ceil(n / k)
    if k <= n // 2:
        return math.ceil(n / (2 * k))
    return 1 if k == n else 2


def assert_suites(names, n_max, n_min=2):
    results = [run_suite(name, n_max, n_min=n_min) for name in names]
    for res in results:
        print(res.line())
    bad = [r for r in results if r.failures]
    assert not bad, [(r.name, r.failures[:2]) for r in bad]
    assert all(r.checked > 0 for r in results)
    return results


@pytest.mark.criterion(1, "cycle closed forms, n in 3..16, all k")
def test_cycle_closed_forms():
    start = time.perf_counter()
    wrong = [(n, k, flood_k(Graph.cycle(n), k).value)
             for n in range(3, 17) for k in range(1, n + 1)
             if flood_k(Graph.cycle(n), k).value != cycle_closed_form(n, k)]
    assert wrong == []
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(2, "complete graphs n in 3..8; Flood_n = 1 for all graphs n <= 6")
def test_complete_graphs_and_all_sources():
    for n in range(3, 9):
        g = Graph.complete(n)
        assert [flood_k(g, k).value for k in range(1, n + 1)] == [3] + [2] * (n - 2) + [1]
    count = 0
    for n in range(2, 7):
        for g in enumerate_connected(n):
            assert flood_rounds(g, range(n)) == 1, g
            count += 1
    assert count == 1 + 4 + 38 + 728 + 26704


@pytest.mark.criterion(3, "P_12 triple: Flood_3 = 2, r^ni_3 = 5, r_3 = 2")
def test_path_twelve():
    g = Graph.path(12)
    assert flood_k(g, 3).value == 2
    assert ni_k_radius(g, 3).value == 5
    assert k_radius(g, 3).value == 2


@pytest.mark.criterion(4, "odd cycles: Rad = Diam = (n-1)/2, Flood_1 = n")
def test_odd_cycle_sharpness():
    for n in (3, 5, 7, 9, 11):
        g = Graph.cycle(n)
        assert radius_diameter(g) == ((n - 1) // 2, (n - 1) // 2)
        assert flood_k(g, 1).value == n


@pytest.mark.criterion(5, "auxiliary-graph equivalence, n <= 5 all S, n = 6 restricted S")
def test_aux_equivalence_suite():
    start = time.perf_counter()
    small, six = assert_suites(["thm1-equivalence"], 5) + assert_suites(
        ["thm1-equivalence"], 6, n_min=6)
    assert small.graphs == 1 + 4 + 38 + 728 and six.graphs == 26704
    assert time.perf_counter() - start < 600


@pytest.mark.criterion(6, "single-source suites, n <= 6")
def test_single_source_suites():
    assert_suites(["cor1-bipartite", "thm6-single-source"], 6)


@pytest.mark.criterion(7, "k-source bounds suite, n <= 6")
def test_k_source_bounds_suite():
    # every part is checked at n = 6, which covers the n <= 5 requirement
    assert_suites(["thm2-bounds"], 6)


@pytest.mark.criterion(8, "non-bipartite suite with per-set monotonicity, n <= 5")
def test_non_bipartite_suite():
    assert_suites(["thm3-nonbip"], 5)


@pytest.mark.criterion(9, "bipartite gap suite, n <= 6")
def test_bipartite_gap_suite():
    assert_suites(["thm4-bipartite-gap"], 6)


@pytest.mark.criterion(10, "radius, spanning-tree and domination suites: trees n <= 7, others n <= 6")
def test_tree_and_domination_suites():
    (trees,) = assert_suites(["lemma-tree-radius"], 7)
    assert trees.graphs == sum(n ** (n - 2) for n in range(2, 8))
    assert_suites(["lemma-span-tree", "lemma-ni-half"], 6)
    assert_suites(["bound-total-domination"], 6, n_min=3)


@pytest.mark.criterion(11, "reduction validation, n <= 5")
def test_reduction_validation():
    start = time.perf_counter()
    report = validate_reduction(5)
    print(report.summary())
    assert report.passed, report.counterexamples[:3]
    assert report.instances > 0
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(12, "exploratory reports emitted; conjecture scan clean for k < n")
def test_exploratory_reports(tmp_path, capsys):
    conj = tmp_path / "conjecture-scan.txt"
    anti = tmp_path / "anticenter-search.txt"
    assert main(["verify", "--suite", "conjecture-scan", "--n-max", "5", "--report", str(conj)]) == 0
    assert main(["verify", "--suite", "anticenter-search", "--n-max", "6", "--report", str(anti)]) == 0
    out = capsys.readouterr().out
    assert "suite=conjecture-scan" in out and "suite=anticenter-search" in out
    conj_text = conj.read_text()
    assert conj_text.startswith("suite=conjecture-scan") and " failures=0 " in conj_text.splitlines()[0]
    assert anti.read_text().startswith("suite=anticenter-search")
