"""Demand-weighted expander decomposition by recursive sparse-cut removal.

Sparsity of a cut S inside a cluster is w(E(S, S-bar)) / min(d(S), d(S-bar))
for a nonnegative integer demand vector d; a cluster is a phi-expander when
no cut has sparsity below phi. Decomposition repeatedly removes the sparsest
violating cut, re-deriving each sub-cluster's demands as base demand plus
the weight to the rest of the whole graph, so earlier cut edges show up as
demand in later rounds.

Clusters of at most EXHAUSTIVE_LIMIT vertices are certified by enumerating
every cut exactly; larger clusters fall back to a deterministic spectral
sweep plus single-vertex local moves and are flagged as uncertified.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DecompositionError, InputError
from .graph import (
    MAX_TOTAL_WEIGHT,
    VertexSet,
    WeightedGraph,
    cut_weight,
    induced_subgraph,
)

EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class DemandVector:
    values: tuple[int, ...]

    def __post_init__(self):
        for d in self.values:
            if not isinstance(d, int) or d < 0:
                raise InputError(f"demands must be nonnegative integers, got {d!r}")
        if sum(self.values) > MAX_TOTAL_WEIGHT:
            raise InputError("total demand too large")

    @classmethod
    def uniform(cls, n: int, value: int, support: VertexSet | None = None) -> "DemandVector":
        if support is None:
            return cls((value,) * n)
        if support.n != n:
            raise InputError("support universe mismatch")
        return cls(tuple(value if v in support else 0 for v in range(n)))

    @classmethod
    def degrees(cls, graph: WeightedGraph) -> "DemandVector":
        return cls(tuple(graph.degree_weight(v) for v in range(graph.n)))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def mass(self, side: VertexSet) -> int:
        return sum(self.values[v] for v in side)


def sparsity(
    graph: WeightedGraph, side: VertexSet, demands: DemandVector
) -> Fraction | None:
    """Demand-weighted sparsity of a cut, or None for an infinite ratio.

    None means the lighter side carries zero demand, so the cut does not
    constrain expansion at all.
    """
    if demands.n != graph.n:
        raise InputError("demand vector length must match graph")
    cross = cut_weight(graph, side)
    d_in = demands.mass(side)
    denom = min(d_in, demands.total - d_in)
    if denom == 0:
        return None
    return Fraction(cross, denom)


def _check_phi(phi: Fraction) -> None:
    if not isinstance(phi, Fraction) or not 0 < phi <= 1:
        raise InputError(f"phi must be a Fraction in (0, 1], got {phi!r}")


def _exhaustive_violating(
    graph: WeightedGraph, demands: list[int], phi: Fraction
) -> int | None:
    """Mask of the exact sparsest violating cut, or None if none exists.

    Candidate masks are preselected by float ratio with slack, then compared
    with exact rationals; ties go to fewer vertices, then lower member ids.
    """
    n = graph.n
    masks = np.arange(1 << n, dtype=np.int64)
    cross = np.zeros(1 << n, dtype=np.int64)
    for u, v, w in graph.edges:
        cross += (((masks >> u) ^ (masks >> v)) & 1) * w
    dsum = np.zeros(1 << n, dtype=np.int64)
    for v, d in enumerate(demands):
        if d:
            dsum += ((masks >> v) & 1) * d
    total = sum(demands)
    mindem = np.minimum(dsum, total - dsum)
    violating = cross * phi.denominator < phi.numerator * mindem
    if not violating.any():
        return None
    ratio = np.where(violating, cross / np.maximum(mindem, 1), np.inf)
    fmin = ratio.min()
    cand = np.nonzero(ratio <= fmin * (1 + 1e-9) + 1e-12)[0]
    best_mask = None
    best_key = None
    for m in cand:
        m = int(m)
        key = (
            Fraction(int(cross[m]), int(mindem[m])),
            m.bit_count(),
            VertexSet(n, m).members(),
        )
        if best_key is None or key < best_key:
            best_key = key
            best_mask = m
    return best_mask


def _side_stats(graph: WeightedGraph, demands: list[int], mask: int) -> tuple[int, int]:
    """(crossing weight, demand mass) of the side given by mask."""
    cross = 0
    for u, v, w in graph.edges:
        if ((mask >> u) ^ (mask >> v)) & 1:
            cross += w
    d_in = sum(d for v, d in enumerate(demands) if (mask >> v) & 1)
    return cross, d_in


def _heuristic_violating(
    graph: WeightedGraph, demands: list[int], phi: Fraction
) -> int | None:
    """Spectral sweep plus first-improvement vertex moves; may miss cuts.

    Floats appear only in the vertex ordering; every sparsity that decides
    anything is computed with exact integers.
    """
    n = graph.n
    total = sum(demands)
    if total == 0:
        return None
    w = np.zeros((n, n), dtype=np.float64)
    for u, v, wt in graph.edges:
        w[u, v] = wt
        w[v, u] = wt
    deg = w.sum(axis=1)
    inv_sqrt = 1.0 / np.sqrt(np.maximum(deg, 1.0))
    lap = np.eye(n) - inv_sqrt[:, None] * w * inv_sqrt[None, :]
    _, vecs = np.linalg.eigh(lap)
    fiedler = vecs[:, 1]
    for x in fiedler:
        if x != 0:
            if x < 0:
                fiedler = -fiedler
            break
    order = np.lexsort((np.arange(n), fiedler))

    best_mask = None
    best_s: Fraction | None = None
    mask = 0
    d_in = 0
    cross = 0
    for idx in range(n - 1):
        v = int(order[idx])
        for x, wt in graph.adj[v]:
            cross += -wt if (mask >> x) & 1 else wt
        mask |= 1 << v
        d_in += demands[v]
        denom = min(d_in, total - d_in)
        if denom > 0:
            s = Fraction(cross, denom)
            if best_s is None or s < best_s:
                best_s = s
                best_mask = mask

    if best_mask is None:
        return None
    mask = best_mask
    cross, d_in = _side_stats(graph, demands, mask)
    current = Fraction(cross, min(d_in, total - d_in))
    full = (1 << n) - 1
    for _ in range(4 * n):
        improved = False
        for v in range(n):
            inside = (mask >> v) & 1
            new_mask = mask ^ (1 << v)
            if new_mask == 0 or new_mask == full:
                continue
            delta = 0
            for x, wt in graph.adj[v]:
                delta += -wt if ((mask >> x) & 1) != inside else wt
            new_cross = cross + delta
            new_din = d_in - demands[v] if inside else d_in + demands[v]
            denom = min(new_din, total - new_din)
            if denom <= 0:
                continue
            s = Fraction(new_cross, denom)
            if s < current:
                mask, cross, d_in, current = new_mask, new_cross, new_din, s
                improved = True
        if not improved:
            break
    return mask if current < phi else None


@dataclass(frozen=True)
class ExpanderCheck:
    ok: bool
    certified: bool
    witness: VertexSet | None
    witness_sparsity: Fraction | None


def verify_expander(
    graph: WeightedGraph,
    demands: DemandVector,
    phi: Fraction,
    certify_limit: int = EXHAUSTIVE_LIMIT,
) -> ExpanderCheck:
    """Check whether every cut of the graph has sparsity at least phi.

    Exhaustive (and therefore a certificate) up to certify_limit vertices;
    above that the spectral heuristic only ever refutes, so ok=True with
    certified=False is advisory.
    """
    _check_phi(phi)
    if demands.n != graph.n:
        raise InputError("demand vector length must match graph")
    if graph.n <= certify_limit:
        mask = _exhaustive_violating(graph, list(demands.values), phi)
        if mask is None:
            return ExpanderCheck(True, True, None, None)
        side = VertexSet(graph.n, mask)
        return ExpanderCheck(False, True, side, sparsity(graph, side, demands))
    mask = _heuristic_violating(graph, list(demands.values), phi)
    if mask is None:
        return ExpanderCheck(True, False, None, None)
    side = VertexSet(graph.n, mask)
    return ExpanderCheck(False, False, side, sparsity(graph, side, demands))


@dataclass
class ExpanderDecomposition:
    graph: WeightedGraph
    demands: DemandVector
    phi: Fraction
    clusters: tuple[VertexSet, ...]
    certified: tuple[bool, ...]
    inter_weight: int
    budget: Fraction
    splits: int

    def labels(self) -> list[int]:
        """Cluster index of each vertex."""
        out = [-1] * self.graph.n
        for i, cluster in enumerate(self.clusters):
            for v in cluster:
                out[v] = i
        return out


def augmented_demands(
    graph: WeightedGraph, cluster: VertexSet, demands: DemandVector
) -> list[int]:
    """Base demand plus boundary weight, aligned with cluster.members().

    The boundary term is the edge weight from each vertex to everything
    outside the cluster, so the augmentation satisfies the identity
    sum_v (d_aug(v) - d(v)) == w(E(cluster, rest)).
    """
    sub, ids = induced_subgraph(graph, cluster)
    return [
        demands.values[v] + graph.degree_weight(v) - sub.degree_weight(i)
        for i, v in enumerate(ids)
    ]


def expander_decompose(
    graph: WeightedGraph,
    demands: DemandVector,
    phi: Fraction,
    c_b: int = 1,
    certify_limit: int = EXHAUSTIVE_LIMIT,
) -> ExpanderDecomposition:
    """Partition V into clusters with no (detected) cut sparser than phi.

    Raises DecompositionError if the split count passes 4n or the final
    inter-cluster weight exceeds c_b * phi * d(V) * ceil(lg n)^2.
    """
    _check_phi(phi)
    if demands.n != graph.n:
        raise InputError("demand vector length must match graph")
    if c_b < 1:
        raise InputError("budget constant must be at least 1")
    n = graph.n
    cap = 4 * n
    splits = 0
    queue: deque[VertexSet] = deque([graph.full_set])
    done: list[tuple[VertexSet, bool]] = []
    while queue:
        cluster = queue.popleft()
        if len(cluster) == 1:
            done.append((cluster, True))
            continue
        sub, ids = induced_subgraph(graph, cluster)
        aug = augmented_demands(graph, cluster, demands)
        if sub.n <= certify_limit:
            mask = _exhaustive_violating(sub, aug, phi)
            certified = True
        else:
            mask = _heuristic_violating(sub, aug, phi)
            certified = False
        if mask is None:
            done.append((cluster, certified))
            continue
        splits += 1
        if splits > cap:
            raise DecompositionError(f"more than {cap} splits; refinement diverged")
        side = VertexSet.from_ids(n, (ids[i] for i in VertexSet(sub.n, mask)))
        queue.append(side)
        queue.append(cluster.difference(side))

    done.sort(key=lambda item: item[0].smallest())
    clusters = tuple(c for c, _ in done)
    certified_flags = tuple(flag for _, flag in done)
    label = [-1] * n
    for i, cluster in enumerate(clusters):
        for v in cluster:
            label[v] = i
    inter = sum(w for u, v, w in graph.edges if label[u] != label[v])
    lg = (max(n, 1) - 1).bit_length()
    budget = Fraction(c_b) * phi * demands.total * lg * lg
    if inter > budget:
        raise DecompositionError(
            f"inter-cluster weight {inter} exceeds budget {budget}"
        )
    return ExpanderDecomposition(
        graph=graph,
        demands=demands,
        phi=phi,
        clusters=clusters,
        certified=certified_flags,
        inter_weight=inter,
        budget=budget,
        splits=splits,
    )


def clusters_cut_by(clusters: tuple[VertexSet, ...], side: VertexSet) -> int:
    """How many clusters have vertices on both sides of the cut."""
    count = 0
    for cluster in clusters:
        hit = cluster.intersection(side)
        if hit and hit != cluster:
            count += 1
    return count


def split_terminal_sum(
    clusters: tuple[VertexSet, ...], terminals: VertexSet, side: VertexSet
) -> int:
    """Sum over clusters of the smaller terminal count on either side."""
    total = 0
    for cluster in clusters:
        inside = len(cluster.intersection(terminals).intersection(side))
        outside = len(cluster.intersection(terminals)) - inside
        total += min(inside, outside)
    return total
