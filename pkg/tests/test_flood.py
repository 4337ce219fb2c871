import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amnesiac.flood import (
    FloodTrace,
    RoundCapExceeded,
    flood_rounds,
    last_receipt_rounds,
    message_count,
    run_mask,
    simulate,
)
from amnesiac.graph import Graph, GraphError, bfs, is_bipartite

from conftest import connected_graphs, graphs_with_sources
from oracles import floyd_warshall, naive_flood, neighbors


class TestExamples:
    def test_complete_single_source(self):
        # Flood_1(K_n) = 3
        for n in range(3, 8):
            assert simulate(Graph.complete(n), [0]).rounds_count == 3

    def test_odd_cycle_single_source(self):
        # Flood_1(C_n) = n for odd n
        for n in (3, 5, 7, 9):
            assert flood_rounds(Graph.cycle(n), [0]) == n

    def test_path_center(self):
        t = simulate(Graph.path(3), [1])
        assert (t.rounds_count, t.total_messages) == (1, 2)

    def test_triangle_hand_trace(self):
        # hand simulation
        t = simulate(Graph.cycle(3), [0])
        assert t.rounds == (((0, 1), (0, 2)), ((1, 2), (2, 1)), ((1, 0), (2, 0)))
        assert t.total_messages == 6

    def test_even_cycle_one_side(self):
        # bipartite with |V_1| = k gives one round
        assert flood_rounds(Graph.cycle(6), [0, 2, 4]) == 1

    def test_complete_three_sources(self):
        assert flood_rounds(Graph.complete(5), [0, 1, 2]) == 2

    def test_all_sources_one_round(self):
        for g in (Graph.cycle(5), Graph.complete(4), Graph.path(6)):
            assert flood_rounds(g, range(g.n)) == 1

    def test_message_counts(self):
        assert message_count(Graph.path(3), [0]) == 2
        assert message_count(Graph.cycle(3), [0]) == 6
        assert message_count(Graph.cycle(4), [0, 1]) == 8

    def test_single_node_graph_is_silent(self):
        t = simulate(Graph(1), [0])
        assert t.rounds_count == 0 and t.total_messages == 0


class TestValidation:
    @pytest.mark.parametrize("sources", [[], [3], [0, 0], [-1]])
    def test_bad_sources(self, sources):
        with pytest.raises(GraphError):
            simulate(Graph.path(3), sources)

    def test_disconnected_rejected_unless_allowed(self):
        g = Graph(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphError):
            simulate(g, [0])
        assert flood_rounds(g, [0], allow_disconnected=True) == 1

    def test_round_cap_guard(self):
        # Fake adjacency that is not symmetric: 0 -> 1 -> 2 -> 0 forever.
        masks = (0b010, 0b100, 0b001)
        with pytest.raises(RoundCapExceeded):
            run_mask(masks, 3, 0b001)


class TestTraceInvariants:
    @settings(max_examples=150, deadline=None)
    @given(graphs_with_sources(max_n=9))
    def test_matches_naive_simulator(self, case):
        # literal transcription of the forwarding rule
        g, sources = case
        t = simulate(g, sources)
        assert [list(r) for r in t.rounds] == naive_flood(g.n, g.edges, sources)

    @settings(max_examples=100, deadline=None)
    @given(graphs_with_sources(max_n=9))
    def test_round_rules(self, case):
        g, sources = case
        nbr = neighbors(g.n, g.edges)
        t = simulate(g, sources)
        assert set(t.round(1)) == {(s, u) for s in sources for u in nbr[s]}
        for i in range(2, t.rounds_count + 2):
            heard = {}
            for w, v in t.round(i - 1):
                heard.setdefault(v, set()).add(w)
            expected = {(v, u) for v, hs in heard.items() if hs != nbr[v] for u in nbr[v] - hs}
            assert set(t.round(i)) == expected
        assert t.rounds[-1]
        assert t.round(t.rounds_count + 1) == ()
        for events in t.rounds:
            assert list(events) == sorted(events)

    @settings(max_examples=100, deadline=None)
    @given(graphs_with_sources(max_n=9))
    def test_termination_bound_and_message_count(self, case):
        g, sources = case
        t = simulate(g, sources)
        d = floyd_warshall(g.n, g.edges)
        cover = max(min(d[s][v] for s in sources) for v in range(g.n))
        diam = max(max(row) for row in d)
        assert t.rounds_count <= cover + 1 + diam
        assert t.total_messages in (g.m, 2 * g.m)

    @settings(max_examples=50, deadline=None)
    @given(graphs_with_sources(max_n=9))
    def test_counts_agree_across_entry_points(self, case):
        g, sources = case
        t = simulate(g, sources)
        assert flood_rounds(g, sources) == t.rounds_count
        assert message_count(g, sources) == t.total_messages


class TestJsonl:
    def test_format(self):
        text = simulate(Graph.path(3), [1]).to_jsonl()
        assert text == ('{"round": 1, "messages": [[1, 0], [1, 2]]}\n'
                        '{"summary": {"rounds": 1, "messages": 2}}\n')

    @settings(max_examples=50, deadline=None)
    @given(graphs_with_sources(max_n=8))
    def test_deterministic_roundtrip(self, case):
        g, sources = case
        a, b = simulate(g, sources), simulate(g, list(reversed(sources)))
        assert a.to_jsonl() == b.to_jsonl()
        assert FloodTrace.from_jsonl(a.to_jsonl()) == a

    def test_summary_mismatch(self):
        bad = '{"round": 1, "messages": [[0, 1]]}\n{"summary": {"rounds": 1, "messages": 5}}\n'
        with pytest.raises(ValueError):
            FloodTrace.from_jsonl(bad)

    def test_out_of_sequence(self):
        with pytest.raises(ValueError):
            FloodTrace.from_jsonl('{"round": 2, "messages": []}\n')


class TestLastReceipt:
    def test_triangle(self):
        assert last_receipt_rounds(Graph.cycle(3), 0) == {0: 3, 1: 2, 2: 2}

    def test_edge(self):
        assert last_receipt_rounds(Graph.path(2), 0) == {0: 0, 1: 1}

    @settings(max_examples=60, deadline=None)
    @given(connected_graphs(max_n=9), st.data())
    def test_bipartite_equals_distance(self, g, data):
        # on bipartite graphs each node hears the message exactly once
        if not is_bipartite(g):
            return
        v0 = data.draw(st.integers(0, g.n - 1))
        last = last_receipt_rounds(g, v0)
        dist = bfs(g, [v0])
        assert all(last[w] == dist[w] for w in range(g.n) if w != v0)
        assert last[v0] == 0
