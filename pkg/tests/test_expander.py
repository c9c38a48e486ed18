import itertools
from fractions import Fraction

import pytest

from cutkit import (
    DemandVector,
    InputError,
    VertexSet,
    augmented_demands,
    build_graph,
    clusters_cut_by,
    cut_weight,
    expander_decompose,
    induced_subgraph,
    sparsity,
    split_terminal_sum,
    verify_expander,
)
from cutkit.generators import clique_graph, cycle_graph, dumbbell_graph

from helpers import rand_graph


def two_triangles_bridge():
    return build_graph(
        6,
        [(0, 1, 2), (1, 2, 2), (0, 2, 2), (3, 4, 2), (4, 5, 2), (3, 5, 2), (2, 3, 1)],
    )


def test_demand_vector_validation():
    with pytest.raises(InputError):
        DemandVector((1, -1))
    with pytest.raises(InputError):
        DemandVector((1.5, 2))
    d = DemandVector.uniform(4, 3)
    assert d.total == 12
    assert d.mass(VertexSet.from_ids(4, [0, 2])) == 6
    sup = DemandVector.uniform(4, 3, support=VertexSet.from_ids(4, [1, 3]))
    assert sup.values == (0, 3, 0, 3)
    with pytest.raises(InputError):
        DemandVector.uniform(4, 1, support=VertexSet.from_ids(5, [0]))


def test_degree_demands():
    g = build_graph(3, [(0, 1, 2), (1, 2, 5)])
    assert DemandVector.degrees(g).values == (2, 7, 5)


def test_sparsity_on_clique():
    g = clique_graph(4)
    d = DemandVector.degrees(g)
    assert sparsity(g, VertexSet.from_ids(4, [0]), d) == Fraction(1)
    assert sparsity(g, VertexSet.from_ids(4, [0, 1]), d) == Fraction(2, 3)


def test_sparsity_none_without_demand():
    g = cycle_graph(4)
    d = DemandVector.uniform(4, 1, support=VertexSet.from_ids(4, [0, 1]))
    assert sparsity(g, VertexSet.from_ids(4, [2]), d) is None
    assert sparsity(g, VertexSet.from_ids(4, [1, 2]), d) == Fraction(2, 1)


def test_verify_accepts_clique():
    g = clique_graph(6)
    check = verify_expander(g, DemandVector.degrees(g), Fraction(1, 3))
    assert check.ok and check.certified
    assert check.witness is None


def test_verify_refutes_bridge_graph():
    g = two_triangles_bridge()
    check = verify_expander(g, DemandVector.uniform(6, 1), Fraction(1, 2))
    assert not check.ok
    assert check.certified
    assert check.witness.members() == [0, 1, 2]
    assert check.witness_sparsity == Fraction(1, 3)


def test_verify_witness_is_sparsest_cut():
    g = rand_graph(8, 4, p=0.5)
    d = DemandVector.degrees(g)
    check = verify_expander(g, d, Fraction(1, 1))
    if check.ok:
        pytest.skip("random draw was an expander at phi=1")
    best = min(
        (
            sparsity(g, VertexSet(8, mask), d)
            for mask in range(1, (1 << 8) - 1)
            if sparsity(g, VertexSet(8, mask), d) is not None
        ),
    )
    assert check.witness_sparsity == best


def test_phi_validation():
    g = clique_graph(3)
    d = DemandVector.degrees(g)
    with pytest.raises(InputError):
        verify_expander(g, d, Fraction(0))
    with pytest.raises(InputError):
        verify_expander(g, d, Fraction(3, 2))
    with pytest.raises(InputError):
        verify_expander(g, d, 0.5)


def test_decompose_splits_dumbbell():
    g = dumbbell_graph(10)
    dec = expander_decompose(g, DemandVector.uniform(10, 1), Fraction(1, 2))
    assert [c.members() for c in dec.clusters] == [[0, 1, 2, 3, 4], [5, 6, 7, 8, 9]]
    assert dec.inter_weight == 1
    assert dec.certified == (True, True)
    assert dec.splits == 1
    assert dec.labels() == [0] * 5 + [1] * 5
    assert dec.inter_weight <= dec.budget


def test_decompose_keeps_expander_whole():
    g = clique_graph(8)
    dec = expander_decompose(g, DemandVector.degrees(g), Fraction(1, 4))
    assert len(dec.clusters) == 1
    assert dec.inter_weight == 0
    assert dec.splits == 0


def test_decompose_cluster_cuts_not_sparse():
    g = rand_graph(12, 2, p=0.3)
    d = DemandVector.uniform(12, 2)
    phi = Fraction(1, 3)
    dec = expander_decompose(g, d, phi)
    for cluster, certified in zip(dec.clusters, dec.certified):
        assert certified
        if len(cluster) == 1:
            continue
        sub, ids = induced_subgraph(g, cluster)
        aug = augmented_demands(g, cluster, d)
        aug_vec = DemandVector(tuple(aug))
        for r in range(1, len(ids)):
            for combo in itertools.combinations(range(len(ids)), r):
                s = VertexSet.from_ids(sub.n, combo)
                val = sparsity(sub, s, aug_vec)
                assert val is None or val >= phi, (cluster.members(), combo)


def test_augmentation_identity():
    g = rand_graph(10, 6, p=0.4)
    d = DemandVector.uniform(10, 3)
    cluster = VertexSet.from_ids(10, [0, 2, 3, 7, 8])
    aug = augmented_demands(g, cluster, d)
    boundary = cut_weight(g, cluster)
    base = [d.values[v] for v in cluster.members()]
    assert sum(a - b for a, b in zip(aug, base)) == boundary


def test_decompose_heuristic_above_limit():
    g = dumbbell_graph(50)
    dec = expander_decompose(g, DemandVector.uniform(50, 1), Fraction(1, 2))
    assert len(dec.clusters) == 2
    labels = dec.labels()
    assert labels[0] != labels[49]
    assert dec.certified == (False, False)
    halves = {tuple(c.members()) for c in dec.clusters}
    assert tuple(range(25)) in halves
    assert tuple(range(25, 50)) in halves
    assert dec.inter_weight == 1


def test_decompose_budget_formula_and_validation():
    g = dumbbell_graph(10)
    d = DemandVector.uniform(10, 1)
    dec = expander_decompose(g, d, Fraction(1, 2), c_b=2)
    lg = 9 .bit_length()
    assert dec.budget == 2 * Fraction(1, 2) * d.total * lg * lg
    with pytest.raises(InputError):
        expander_decompose(g, d, Fraction(1, 2), c_b=0)
    with pytest.raises(InputError):
        expander_decompose(g, DemandVector.uniform(9, 1), Fraction(1, 2))


def test_decompose_deterministic():
    g = rand_graph(14, 11, p=0.3)
    d = DemandVector.uniform(14, 1)
    a = expander_decompose(g, d, Fraction(1, 2))
    b = expander_decompose(g, d, Fraction(1, 2))
    assert a.clusters == b.clusters
    assert a.inter_weight == b.inter_weight


def test_cluster_cut_helpers():
    clusters = (
        VertexSet.from_ids(6, [0, 1, 2]),
        VertexSet.from_ids(6, [3, 4]),
        VertexSet.from_ids(6, [5]),
    )
    side = VertexSet.from_ids(6, [0, 1, 3])
    assert clusters_cut_by(clusters, side) == 2
    terminals = VertexSet.from_ids(6, [0, 1, 3, 4, 5])
    assert split_terminal_sum(clusters, terminals, side) == 1
    assert split_terminal_sum(clusters, terminals, VertexSet.from_ids(6, [5])) == 0
