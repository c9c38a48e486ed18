"""Minimum Steiner cut drivers built on isolating cuts and sparsification.

The deterministic driver guesses the cut weight on a geometric ladder. For
each guess it alternates two moves on a shrinking terminal pool U: fold in
the best isolating cut over a derandomized set family (catches every
minimum cut with at most k terminals on a side), then thin U through a
demand-weighted expander decomposition (provably keeps terminals on both
sides of some minimum cut when the guess is in range). Once U drops below
k it finishes with direct terminal-to-terminal flows. A guess whose
trajectory stops making progress is abandoned; if its value is still small
enough that it could have been the in-range guess, a plain flow-per-terminal
pass over its last pool repairs the guarantee.

The randomized driver replaces the set family with geometric subsampling
of the terminals and needs no decomposition at all.
"""

import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContractViolation, DecompositionError, InputError
from .expander import DemandVector, ExpanderDecomposition, expander_decompose
from .graph import Cut, VertexSet, WeightedGraph, components
from .isolating import minimum_isolating_cuts
from .maxflow import FlowMeter, max_flow
from .oracles import naive_steiner, stoer_wagner
from .splitters import isolator_family_min2


@dataclass(frozen=True)
class SteinerInstance:
    graph: WeightedGraph
    terminals: VertexSet

    def __post_init__(self):
        if self.terminals.n != self.graph.n:
            raise InputError("terminal universe does not match graph")
        if len(self.terminals) < 2:
            raise InputError("need at least two terminals")


@dataclass
class AlgoConfig:
    """Tuning knobs shared by the drivers.

    phi is the expansion parameter; k defaults to the smallest unbalance
    threshold that makes the two driver cases exhaustive, ceil((1+1/phi)^3).
    Overriding k below that threshold trades the worst-case guarantee for
    speed and is only safe together with the fallback. rand_reps defaults
    to ceil(4*lg n) per sampling scale.
    """

    phi: Fraction = Fraction(1, 16)
    k: int | None = None
    c_b: int = 1
    rand_reps: int | None = None
    seed: int = 0
    fallback_enabled: bool = True
    estimator: str = "geometric"
    certify_limit: int = 20
    collect_decompositions: bool = False

    def __post_init__(self):
        if not isinstance(self.phi, Fraction) or not 0 < self.phi <= 1:
            raise InputError(f"phi must be a Fraction in (0, 1], got {self.phi!r}")
        if self.k is not None and self.k < 2:
            raise InputError("k must be at least 2")
        if self.rand_reps is not None and self.rand_reps < 1:
            raise InputError("rand_reps must be positive")
        if self.estimator not in ("geometric", "oracle"):
            raise InputError(f"unknown estimator {self.estimator!r}")

    def k_effective(self) -> int:
        if self.k is not None:
            return self.k
        cube = (1 + 1 / self.phi) ** 3
        return -(-cube.numerator // cube.denominator)

    def reps_for(self, n: int) -> int:
        if self.rand_reps is not None:
            return self.rand_reps
        return max(1, math.ceil(4 * math.log2(max(n, 2))))


@dataclass(frozen=True)
class Estimate:
    """Cut weight estimate: a value, its certified range, and guess ladder."""

    value: int
    lo: int
    hi: int
    guesses: tuple[int, ...]


@dataclass(frozen=True)
class UnbalancedStats:
    family_sets: int
    isolating_runs: int
    equivalent_calls: int


@dataclass
class RoundTrace:
    u_size: int
    family_sets: int
    unbalanced_weight: int
    cluster_count: int | None = None
    sparsified_to: int | None = None


@dataclass
class GuessTrace:
    lambda_guess: int
    rounds: list[RoundTrace] = field(default_factory=list)
    outcome: str = "completed"
    final_u_size: int = 0


@dataclass
class DriverTrace:
    method: str
    zero_cut: bool = False
    lambda_guesses: tuple[int, ...] = ()
    guess_traces: list[GuessTrace] = field(default_factory=list)
    pairwise_sizes: list[int] = field(default_factory=list)
    fallback_runs: list[tuple[int, int]] = field(default_factory=list)
    samples: list[tuple[int, int, int, bool]] = field(default_factory=list)


@dataclass
class DecompositionRecord:
    lambda_guess: int
    pool_before: VertexSet
    pool_after: VertexSet
    decomposition: ExpanderDecomposition


@dataclass
class CutReport:
    cut: Cut
    meter: FlowMeter
    equivalent_calls: int
    trace: DriverTrace
    decompositions: list[DecompositionRecord] = field(default_factory=list)

    @property
    def weight(self) -> int:
        return self.cut.weight

    def fingerprint(self) -> str:
        """Digest of the cut, call sequence, and accounting; equal runs match."""
        payload = "|".join(
            (
                self.trace.method,
                format(self.cut.side.mask, "x"),
                str(self.cut.weight),
                str(self.equivalent_calls),
                ";".join(f"{n},{m}" for n, m in self.meter.calls),
            )
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _terminal_split_component(
    graph: WeightedGraph, terminals: VertexSet
) -> VertexSet | None:
    """Component holding the lowest terminal, if T spans several components."""
    comps = components(graph)
    if len(comps) == 1:
        return None
    t0 = terminals.smallest()
    for comp in comps:
        if t0 in comp:
            return None if terminals.issubset(comp) else comp
    raise ContractViolation("terminal missing from every component")


def approx_mincut_estimate(inst: SteinerInstance, cfg: AlgoConfig | None = None) -> Estimate:
    """Flow-free bracket of the minimum Steiner cut weight, plus guesses.

    The geometric estimator brackets with [1, min terminal degree] and
    returns the power-of-two ladder covering that range; some ladder entry
    is within a factor two above the true weight. The oracle estimator is
    exact but only applies when every vertex is a terminal.
    """
    cfg = cfg or AlgoConfig()
    graph, terminals = inst.graph, inst.terminals
    if _terminal_split_component(graph, terminals) is not None:
        return Estimate(0, 0, 0, ())
    if cfg.estimator == "oracle":
        if terminals != graph.full_set:
            raise InputError("oracle estimator requires every vertex terminal")
        lam = stoer_wagner(graph).weight
        return Estimate(lam, lam, lam, (lam,))
    ub = min(graph.degree_weight(v) for v in terminals)
    guesses = [1]
    while guesses[-1] < ub:
        guesses.append(guesses[-1] * 2)
    return Estimate(ub, 1, ub, tuple(guesses))


def unbalanced_case(
    engine,
    inst: SteinerInstance,
    pool: VertexSet,
    k: int,
    meter: FlowMeter,
) -> tuple[Cut, UnbalancedStats]:
    """Best isolating cut over a family that catches k-unbalanced minimum cuts.

    If some minimum Steiner cut keeps at most k pool terminals on one side,
    some family set meets that side in exactly one terminal and the
    isolating cut for it has exactly the minimum weight. One isolating run
    counts as its phase-A calls plus one equivalent call for phase B.
    """
    if len(pool) < 2:
        raise InputError("pool must have at least two terminals")
    if k < 1:
        raise InputError("k must be positive")
    if not pool.issubset(inst.terminals):
        raise InputError("pool must be a subset of the terminals")
    members = pool.members()
    family = isolator_family_min2(len(members), min(k, len(members) - 1))
    best: Cut | None = None
    eq = 0
    runs = 0
    for fset in family.sets:
        rmask = 0
        for i in fset:
            rmask |= 1 << members[i]
        iso = minimum_isolating_cuts(
            engine, inst.graph, VertexSet(inst.graph.n, rmask), meter
        )
        runs += 1
        eq += len(iso.phase_a_calls) + 1
        entry = iso.best()
        if best is None or entry.cut.weight < best.weight:
            best = entry.cut
    assert best is not None
    return best, UnbalancedStats(len(family.sets), runs, eq)


def sparsify_terminals(
    graph: WeightedGraph,
    pool: VertexSet,
    phi: Fraction,
    lam_guess: int,
    *,
    c_b: int = 1,
    certify_limit: int = 20,
) -> tuple[VertexSet, ExpanderDecomposition]:
    """Thin the pool to a few lowest-id representatives per expander cluster.

    Decomposes under uniform demand lam_guess on the pool. Clusters with at
    most 1/phi^2 pool terminals keep one representative, larger ones keep
    ceil(1 + 1/phi). When lam_guess is at least the true minimum weight,
    the kept set still touches both sides of some minimum Steiner cut.
    """
    if len(pool) < 2:
        raise InputError("pool must have at least two terminals")
    if lam_guess < 1:
        raise InputError("weight guess must be positive")
    demands = DemandVector.uniform(graph.n, lam_guess, support=pool)
    dec = expander_decompose(graph, demands, phi, c_b=c_b, certify_limit=certify_limit)
    small_pick = 1
    large_pick = 1 + (phi.denominator + phi.numerator - 1) // phi.numerator
    num2 = phi.numerator * phi.numerator
    den2 = phi.denominator * phi.denominator
    kept: list[int] = []
    for cluster in dec.clusters:
        inside = cluster.intersection(pool)
        count = len(inside)
        if count == 0:
            continue
        take = small_pick if count * num2 <= den2 else large_pick
        kept.extend(inside.members()[:take])
    return VertexSet.from_ids(graph.n, kept), dec


def _pairwise_mincut(
    engine, graph: WeightedGraph, pool: VertexSet, meter: FlowMeter
) -> tuple[Cut, int]:
    """Exact minimum cut separating the pool, via |pool|-1 flows.

    Fixing the lowest pool vertex as the source is enough: whenever the
    pool touches both sides of some minimum cut, the source sits on one
    side and some other pool vertex on the other.
    """
    members = pool.members()
    s = members[0]
    best: Cut | None = None
    for t in members[1:]:
        res = max_flow(engine, graph, s, t, meter)
        if best is None or res.value < best.weight:
            best = Cut(res.min_side, res.value)
    assert best is not None
    return best, len(members) - 1


def _check_steiner_cut(cut: Cut, inst: SteinerInstance) -> None:
    inside = cut.side.intersection(inst.terminals)
    if not inside or inside == inst.terminals:
        raise ContractViolation("reported side does not separate the terminals")
    if not cut.verify(inst.graph):
        raise ContractViolation("reported weight does not match the side")


def steiner_mincut_det(engine, inst: SteinerInstance, cfg: AlgoConfig | None = None) -> CutReport:
    """Deterministic exact minimum Steiner cut.

    Uses polylogarithmically many flows (in the metered, size-normalized
    sense) when the unbalance threshold k is at its derived default.
    """
    cfg = cfg or AlgoConfig()
    graph, terminals = inst.graph, inst.terminals
    meter = FlowMeter()
    trace = DriverTrace(method="det")
    records: list[DecompositionRecord] = []

    split = _terminal_split_component(graph, terminals)
    if split is not None:
        trace.zero_cut = True
        report = CutReport(Cut(split, 0), meter, 0, trace, records)
        _check_steiner_cut(report.cut, inst)
        return report

    k = cfg.k_effective()
    eq = 0
    best: Cut | None = None

    def fold(cut: Cut | None) -> None:
        nonlocal best
        if cut is not None and (best is None or cut.weight < best.weight):
            best = cut

    unbal_memo: dict[int, tuple[Cut, UnbalancedStats]] = {}
    pair_memo: dict[int, Cut] = {}

    def run_unbalanced(pool: VertexSet) -> tuple[Cut, UnbalancedStats]:
        nonlocal eq
        hit = unbal_memo.get(pool.mask)
        if hit is None:
            hit = unbalanced_case(engine, inst, pool, k, meter)
            unbal_memo[pool.mask] = hit
            eq += hit[1].equivalent_calls
        return hit

    def run_pairwise(pool: VertexSet) -> Cut:
        nonlocal eq
        hit = pair_memo.get(pool.mask)
        if hit is None:
            hit, calls = _pairwise_mincut(engine, graph, pool, meter)
            pair_memo[pool.mask] = hit
            eq += calls
        trace.pairwise_sizes.append(len(pool))
        return hit

    if len(terminals) < k:
        fold(run_pairwise(terminals))
    else:
        estimate = approx_mincut_estimate(inst, cfg)
        trace.lambda_guesses = estimate.guesses
        dead: list[tuple[int, VertexSet]] = []
        for guess in estimate.guesses:
            gtrace = GuessTrace(lambda_guess=guess)
            trace.guess_traces.append(gtrace)
            pool = terminals
            while len(pool) >= k:
                cut, stats = run_unbalanced(pool)
                fold(cut)
                rtrace = RoundTrace(len(pool), stats.family_sets, cut.weight)
                gtrace.rounds.append(rtrace)
                try:
                    thinned, dec = sparsify_terminals(
                        graph,
                        pool,
                        cfg.phi,
                        guess,
                        c_b=cfg.c_b,
                        certify_limit=cfg.certify_limit,
                    )
                except DecompositionError:
                    gtrace.outcome = "decomposition-failed"
                    dead.append((guess, pool))
                    break
                rtrace.cluster_count = len(dec.clusters)
                rtrace.sparsified_to = len(thinned)
                if cfg.collect_decompositions:
                    records.append(DecompositionRecord(guess, pool, thinned, dec))
                if len(thinned) < 2:
                    gtrace.outcome = "collapsed"
                    dead.append((guess, pool))
                    break
                if 2 * len(thinned) > len(pool):
                    gtrace.outcome = "not-halved"
                    dead.append((guess, pool))
                    break
                pool = thinned
            else:
                fold(run_pairwise(pool))
            gtrace.final_u_size = len(pool)

        if cfg.fallback_enabled and dead:
            assert best is not None
            resolved: set[int] = set()
            progress = True
            while progress:
                progress = False
                for idx, (guess, pool) in enumerate(dead):
                    if idx in resolved or guess >= 2 * best.weight:
                        continue
                    fold(naive_steiner(engine, SteinerInstance(graph, pool), meter))
                    eq += len(pool) - 1
                    trace.fallback_runs.append((guess, len(pool)))
                    resolved.add(idx)
                    progress = True

    assert best is not None
    report = CutReport(best, meter, eq, trace, records)
    _check_steiner_cut(report.cut, inst)
    return report


def steiner_mincut_rand(engine, inst: SteinerInstance, cfg: AlgoConfig | None = None) -> CutReport:
    """Randomized minimum Steiner cut; exact with high probability.

    Samples terminal subsets at geometric rates (the full set at scale
    zero), folds the best isolating cut of each distinct sample, and adds
    one direct flow between the two lowest terminals. Deterministic for a
    fixed seed; repeated samples cost nothing extra.
    """
    cfg = cfg or AlgoConfig()
    graph, terminals = inst.graph, inst.terminals
    meter = FlowMeter()
    trace = DriverTrace(method="rand")

    split = _terminal_split_component(graph, terminals)
    if split is not None:
        trace.zero_cut = True
        report = CutReport(Cut(split, 0), meter, 0, trace)
        _check_steiner_cut(report.cut, inst)
        return report

    members = terminals.members()
    reps = cfg.reps_for(graph.n)
    rng = random.Random(cfg.seed)
    scales = len(members).bit_length() - 1
    eq = 0
    best: Cut | None = None
    seen: set[int] = set()

    def fold(cut: Cut | None) -> None:
        nonlocal best
        if cut is not None and (best is None or cut.weight < best.weight):
            best = cut

    for scale in range(scales + 1):
        for rep in range(reps):
            if scale == 0:
                rmask = terminals.mask
            else:
                rmask = 0
                rate = 1.0 / (1 << scale)
                for v in members:
                    if rng.random() < rate:
                        rmask |= 1 << v
            size = rmask.bit_count()
            fresh = size >= 2 and rmask not in seen
            trace.samples.append((scale, rep, size, fresh))
            if not fresh:
                continue
            seen.add(rmask)
            iso = minimum_isolating_cuts(
                engine, graph, VertexSet(graph.n, rmask), meter
            )
            eq += len(iso.phase_a_calls) + 1
            fold(iso.best().cut)

    s, t = members[0], members[1]
    res = max_flow(engine, graph, s, t, meter)
    eq += 1
    fold(Cut(res.min_side, res.value))

    assert best is not None
    report = CutReport(best, meter, eq, trace)
    _check_steiner_cut(report.cut, inst)
    return report


def global_mincut_det(engine, graph: WeightedGraph, cfg: AlgoConfig | None = None) -> CutReport:
    """Deterministic exact global minimum cut (every vertex a terminal)."""
    if graph.n < 2:
        raise InputError("global cut needs at least two vertices")
    return steiner_mincut_det(engine, SteinerInstance(graph, graph.full_set), cfg)
