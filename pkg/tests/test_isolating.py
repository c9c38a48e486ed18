import pytest

from cutkit import (
    FlowMeter,
    InputError,
    VertexSet,
    bipartition_schedule,
    build_graph,
    enumerate_cuts,
    minimum_isolating_cuts,
    naive_isolating,
)

from helpers import rand_graph, rand_terminals


def star_graph(leaves, weight=1):
    n = leaves + 1
    return build_graph(n, [(0, v, weight) for v in range(1, n)])


def test_schedule_sizes():
    assert len(bipartition_schedule(VertexSet.from_ids(8, [2, 5]))) == 1
    assert len(bipartition_schedule(VertexSet.from_ids(8, [0, 2, 5, 7]))) == 2
    assert len(bipartition_schedule(VertexSet.from_ids(8, [0, 2, 4, 5, 7]))) == 3


def test_schedule_separates_every_pair():
    terminals = VertexSet.from_ids(12, [1, 3, 4, 8, 9, 11])
    schedule = bipartition_schedule(terminals)
    members = terminals.members()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            assert any(
                (u in a and v in b) or (u in b and v in a) for a, b in schedule
            ), (u, v)
    for a, b in schedule:
        assert a.union(b) == terminals
        assert a.isdisjoint(b)


def test_schedule_needs_two_terminals():
    with pytest.raises(InputError):
        bipartition_schedule(VertexSet.from_ids(5, [2]))


def test_star_leaves(any_engine):
    g = star_graph(4)
    terminals = VertexSet.from_ids(5, [1, 2, 3, 4])
    res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
    for v in (1, 2, 3, 4):
        entry = res.entries[v]
        assert entry.cut.side.members() == [v]
        assert entry.cut.weight == 1
        assert v in entry.component
    assert len(res.phase_a_calls) == 2
    assert len(res.phase_b_calls) == 4
    assert res.total_calls == 6
    assert res.best().vertex == 1


def test_two_triangles_bridge(any_engine):
    g = build_graph(
        6,
        [(0, 1, 2), (1, 2, 2), (0, 2, 2), (3, 4, 2), (4, 5, 2), (3, 5, 2), (2, 3, 1)],
    )
    terminals = VertexSet.from_ids(6, [0, 4])
    res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
    assert res.cut_for(0).weight == 1
    assert res.cut_for(0).side.members() == [0, 1, 2]
    assert res.cut_for(4).weight == 1
    assert res.cut_for(4).side.members() == [3, 4, 5]


def test_matches_naive_oracle(any_engine):
    for seed in range(15):
        g = rand_graph(10, seed, p=0.45)
        terminals = rand_terminals(10, 4, seed)
        fast = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
        slow = naive_isolating(any_engine, g, terminals)
        for v in terminals:
            assert fast.cut_for(v).weight == slow.cut_for(v).weight, (seed, v)
            assert fast.cut_for(v).side == slow.cut_for(v).side, (seed, v)


def test_matches_enumeration_minimal_side(any_engine):
    for seed in range(8):
        g = rand_graph(9, seed + 50, p=0.4)
        terminals = rand_terminals(9, 3, seed + 50)
        res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
        for v in terminals:
            best = enumerate_cuts(g, isolate=(v, terminals))
            assert res.cut_for(v).weight == best.weight
            assert res.cut_for(v).side == best.side


def test_each_side_inside_own_component(any_engine):
    g = rand_graph(11, 7, p=0.35)
    terminals = rand_terminals(11, 5, 7)
    res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
    for v in terminals:
        entry = res.entries[v]
        assert entry.cut.side.issubset(entry.component)
        assert v in entry.cut.side
        assert entry.cut.side.intersection(terminals).members() == [v]


def test_flow_call_size_bounds(any_engine):
    g = rand_graph(12, 3, p=0.5)
    terminals = rand_terminals(12, 6, 3)
    res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
    n, m, r = g.n, g.m, len(terminals)
    assert sum(c[0] for c in res.phase_b_calls) <= n + r
    assert sum(c[1] for c in res.phase_b_calls) <= 2 * m + r
    assert len(res.phase_a_calls) == (r - 1).bit_length()
    assert len(res.phase_b_calls) == r


def test_isolated_terminal_gets_zero_cut(any_engine):
    g = build_graph(5, [(0, 1, 3), (1, 2, 3)])
    terminals = VertexSet.from_ids(5, [0, 4])
    res = minimum_isolating_cuts(any_engine, g, terminals, FlowMeter())
    assert res.cut_for(4).weight == 0
    assert res.cut_for(4).side.members() == [4]
    assert res.cut_for(0).weight == 0
    assert res.cut_for(0).side.members() == [0, 1, 2]


def test_deterministic_across_runs(dinic):
    g = rand_graph(10, 9, p=0.4)
    terminals = rand_terminals(10, 4, 9)
    first = minimum_isolating_cuts(dinic, g, terminals, FlowMeter())
    second = minimum_isolating_cuts(dinic, g, terminals, FlowMeter())
    assert first.entries == second.entries
    assert first.phase_a_calls == second.phase_a_calls


def test_terminal_universe_must_match(dinic):
    g = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    with pytest.raises(InputError):
        minimum_isolating_cuts(dinic, g, VertexSet.from_ids(5, [0, 3]), FlowMeter())
    with pytest.raises(InputError):
        minimum_isolating_cuts(dinic, g, VertexSet.from_ids(4, [2]), FlowMeter())
