import pytest

from cutkit import (
    FlowMeter,
    InputError,
    VertexSet,
    build_graph,
    enumerate_cuts,
    get_engine,
    max_flow,
    min_cut_separating,
    parse_dimacs,
    write_dimacs,
)

from helpers import rand_graph, st_pair


def test_path_graph_flow(any_engine):
    g = build_graph(4, [(0, 1, 5), (1, 2, 3), (2, 3, 7)])
    meter = FlowMeter()
    res = max_flow(any_engine, g, 0, 3, meter)
    assert res.value == 3
    assert res.min_side.members() == [0, 1]
    assert meter.call_count == 1
    assert meter.calls == [(4, 3)]


def test_disconnected_pair_flow_zero(any_engine):
    g = build_graph(4, [(0, 1, 2), (2, 3, 2)])
    res = max_flow(any_engine, g, 0, 2, FlowMeter())
    assert res.value == 0
    assert res.min_side.members() == [0, 1]


def test_source_sink_validation(dinic):
    g = build_graph(3, [(0, 1, 1), (1, 2, 1)])
    with pytest.raises(InputError):
        max_flow(dinic, g, 0, 3, FlowMeter())
    with pytest.raises(InputError):
        max_flow(dinic, g, 1, 1, FlowMeter())


def test_unknown_engine_rejected():
    with pytest.raises(InputError):
        get_engine("edmonds-karp")


def test_engines_agree_on_random_graphs(dinic, scipy_eng):
    for seed in range(30):
        g = rand_graph(9, seed)
        s, t = st_pair(9, seed)
        a = max_flow(dinic, g, s, t, FlowMeter())
        b = max_flow(scipy_eng, g, s, t, FlowMeter())
        assert a.value == b.value
        assert a.min_side == b.min_side


def test_min_side_matches_enumeration(any_engine):
    for seed in range(12):
        g = rand_graph(8, seed, p=0.4)
        s, t = st_pair(8, seed)
        res = max_flow(any_engine, g, s, t, FlowMeter())
        best = enumerate_cuts(g, source=s, sink=t)
        assert res.value == best.weight
        assert res.min_side == best.side


def test_dinic_handles_huge_weights(dinic):
    w = 1 << 40
    g = build_graph(3, [(0, 1, w), (1, 2, w)])
    res = max_flow(dinic, g, 0, 2, FlowMeter())
    assert res.value == w


def test_scipy_rejects_weights_beyond_int32(scipy_eng):
    w = 1 << 40
    g = build_graph(3, [(0, 1, w), (1, 2, w)])
    with pytest.raises(InputError):
        max_flow(scipy_eng, g, 0, 2, FlowMeter())


def test_meter_snapshot_delta_merge(dinic):
    g = build_graph(3, [(0, 1, 2), (1, 2, 3)])
    meter = FlowMeter()
    max_flow(dinic, g, 0, 2, meter)
    mark = meter.snapshot()
    max_flow(dinic, g, 0, 1, meter)
    assert meter.delta(mark) == [(3, 2)]
    assert meter.call_count == 2
    assert meter.aggregate_vertices == 6
    assert meter.aggregate_edges == 4
    other = FlowMeter()
    other.record(10, 20)
    meter.merge(other)
    assert meter.call_count == 3
    assert meter.aggregate_edges == 24


def test_min_cut_separating_contracts_sides(any_engine):
    g = build_graph(6, [(0, 1, 4), (1, 2, 1), (2, 3, 4), (3, 4, 4), (4, 5, 1), (5, 0, 4)])
    meter = FlowMeter()
    cut = min_cut_separating(
        any_engine, g, VertexSet.from_ids(6, [0, 1]), VertexSet.from_ids(6, [3]), meter
    )
    assert cut.weight == 2
    assert cut.side.members() == [0, 1, 5]
    assert cut.verify(g)
    assert meter.calls == [(5, 5)]


def test_min_cut_separating_matches_enumeration(any_engine):
    for seed in range(10):
        g = rand_graph(8, seed + 100, p=0.5)
        side_a = VertexSet.from_ids(8, [0, 3])
        side_b = VertexSet.from_ids(8, [5])
        cut = min_cut_separating(any_engine, g, side_a, side_b, FlowMeter())
        best = enumerate_cuts(g, side_a=side_a, side_b=side_b)
        assert cut.weight == best.weight
        assert cut.side == best.side


def test_min_cut_separating_validation(dinic):
    g = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    with pytest.raises(InputError):
        min_cut_separating(dinic, g, VertexSet.empty(4), VertexSet.from_ids(4, [1]), FlowMeter())
    with pytest.raises(InputError):
        min_cut_separating(
            dinic, g, VertexSet.from_ids(4, [0, 1]), VertexSet.from_ids(4, [1]), FlowMeter()
        )


def test_dimacs_round_trip():
    g = build_graph(4, [(0, 1, 5), (1, 3, 2)])
    text = write_dimacs(g, 0, 3)
    g2, s, t = parse_dimacs(text)
    assert g2 == g
    assert (s, t) == (0, 3)


def test_dimacs_parse_errors():
    with pytest.raises(InputError):
        parse_dimacs("a 1 2 3\n")
    with pytest.raises(InputError):
        parse_dimacs("p max 3 1\na 1 2 3\n")
    with pytest.raises(InputError):
        parse_dimacs("p max 3 1\nn 1 s\nn 3 t\nx 0\n")
    with pytest.raises(InputError):
        parse_dimacs("p flow 3 1\n")
