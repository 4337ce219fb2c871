import pytest

from amnesiac import verify
from amnesiac.flood import run_mask
from amnesiac.graph import Graph, GraphError, is_bipartite, is_connected
from amnesiac.verify import (
    SUITES,
    check_conjecture,
    check_thm1,
    default_workers,
    enumerate_connected,
    find_anticenter,
    random_bipartite_connected,
    random_connected,
    random_tree,
    run_suite,
)

from oracles import connected_labeled_count


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_match_inclusion_exclusion(self, n):
        # 1, 1, 4, 38, 728, 26704 labeled connected graphs
        assert sum(1 for _ in enumerate_connected(n)) == connected_labeled_count(n)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_tree_counts_match_cayley(self, n):
        trees = list(enumerate_connected(n, edges=n - 1))
        assert len(trees) == n ** (n - 2)
        assert all(g.m == n - 1 and is_connected(g) for g in trees)

    def test_ascending_edge_mask_and_distinct(self):
        masks = [g.edge_mask() for g in enumerate_connected(5)]
        assert masks == sorted(set(masks))

    def test_fixed_edge_count(self):
        assert [g.m for g in enumerate_connected(4, edges=6)] == [6]
        assert list(enumerate_connected(4, edges=2)) == []

    def test_range(self):
        with pytest.raises(GraphError):
            next(enumerate_connected(8))
        with pytest.raises(GraphError):
            next(enumerate_connected(0))


class TestRandom:
    def test_connected_deterministic(self):
        a, b = random_connected(8, 0.3, 7), random_connected(8, 0.3, 7)
        assert a == b and is_connected(a)

    def test_tree(self):
        t = random_tree(9, 3)
        assert t.m == 8 and is_connected(t) and t == random_tree(9, 3)

    def test_bipartite(self):
        for seed in range(20):
            g = random_bipartite_connected(7, 0.5, seed)
            assert is_connected(g) and is_bipartite(g)

    def test_bad_parameters(self):
        with pytest.raises(GraphError):
            random_connected(1, 0.5, 0)
        with pytest.raises(GraphError):
            random_connected(5, 0.0, 0)


class TestChecks:
    def test_thm1_triangle(self):
        checked, failures = check_thm1(Graph.cycle(3))
        assert checked == 7 and failures == []

    def test_thm1_detects_broken_simulator(self, monkeypatch):
        def off_by_one(masks, n, smask, record=False):
            rounds, msgs, trace = run_mask(masks, n, smask, record)
            return rounds + 1, msgs, trace

        monkeypatch.setattr(verify, "run_mask", off_by_one)
        _, failures = check_thm1(Graph.cycle(4))
        assert failures and "ecc_aux" in failures[0]["expected"]

    def test_conjecture_flags_k_equals_n_only_as_finding(self):
        _, failures, findings = check_conjecture(Graph.cycle(5))
        assert failures == []
        assert findings and all(f["params"]["k"] == 5 for f in findings)

    def test_anticenter_reports_findings(self):
        checked, findings = find_anticenter(Graph.path(4))
        assert checked > 0
        assert isinstance(findings, list)


class TestRunSuite:
    def test_registry(self):
        assert {"thm1-equivalence", "cor1-bipartite", "thm6-single-source", "thm2-bounds",
                "thm3-nonbip", "thm4-bipartite-gap", "lemma-tree-radius", "lemma-ni-half",
                "lemma-span-tree", "corr-trianglefree", "conjecture-scan",
                "anticenter-search"} <= set(SUITES)

    def test_unknown(self):
        with pytest.raises(KeyError):
            run_suite("nope", 4)

    def test_bad_range(self):
        with pytest.raises(GraphError):
            run_suite("thm2-bounds", 8)

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_every_suite_passes_small(self, name):
        res = run_suite(name, 4, workers=1)
        assert res.passed or SUITES[name].exploratory
        assert not res.gating_failure
        assert res.line() == f"suite={name} checked={res.checked} failures={len(res.failures)}"
        assert res.report().startswith(res.line())

    def test_random_mode_is_reproducible(self):
        a = run_suite("thm1-equivalence", 8, seed=3, samples=20, workers=1)
        b = run_suite("thm1-equivalence", 8, seed=3, samples=20, workers=1)
        assert a.passed and a.report() == b.report() and a.graphs == 20

    def test_random_mode_unsupported(self):
        with pytest.raises(ValueError):
            run_suite("thm2-bounds", 5, samples=3)

    def test_parallel_matches_sequential(self):
        seq = run_suite("cor1-bipartite", 5, workers=1)
        par = run_suite("cor1-bipartite", 5, workers=2)
        assert seq.report() == par.report()

    def test_workers_from_env(self, monkeypatch):
        monkeypatch.setenv("FLOOD_THREADS", "3")
        assert default_workers() == 3
        monkeypatch.delenv("FLOOD_THREADS")
        assert default_workers() >= 1
