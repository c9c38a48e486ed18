"""Flow-call benchmark: the fast driver versus the naive baseline.

Counts are reported two ways. Raw calls is the plain number of max-flow
invocations. Equivalent calls normalizes an isolating run to its phase-A
calls plus one, which is fair because the phase-B instances of one run sum
to at most the size of a single instance; the budget below is stated in
equivalent calls.
"""

import csv
import io
import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolation, InputError
from .generators import clique_graph, cycle_graph, dumbbell_graph, gnp_graph, grid_graph
from .graph import WeightedGraph
from .maxflow import FlowMeter, get_engine
from .oracles import naive_steiner, stoer_wagner
from .splitters import family_size_bound
from .steiner import AlgoConfig, SteinerInstance, steiner_mincut_det, steiner_mincut_rand

BENCH_FAMILIES = ("dumbbell", "cycle", "clique", "grid", "gnp")
BENCH_METHODS = ("det", "naive", "rand", "stoer-wagner")
CSV_COLUMNS = (
    "family",
    "n",
    "m",
    "method",
    "weight",
    "raw_calls",
    "equivalent_calls",
    "agg_vertices",
    "agg_edges",
    "seconds",
    "budget",
    "within_budget",
)


def default_bench_config() -> AlgoConfig:
    """Small k and moderate phi keep the family sizes sane at bench scale."""
    return AlgoConfig(phi=Fraction(1, 4), k=2)


def det_call_budget(n: int, cfg: AlgoConfig) -> int:
    """Closed-form cap on the driver's equivalent calls for n terminals.

    Rounds times family size times per-run cost, plus the final pairwise
    phase, one slot per round, and n for fallback passes. The dominant term
    is polylogarithmic in n, so budget divided by n shrinks as n grows.
    """
    if n < 2:
        raise InputError("budget needs at least two terminals")
    k = cfg.k_effective()
    if n < k:
        return n - 1
    rounds = n.bit_length()
    fam = family_size_bound(n, min(k, n - 1), min2=True)
    per_run = (n - 1).bit_length() + 1
    return rounds * fam * per_run + math.comb(min(k, n), 2) + rounds + n


@dataclass
class BenchRow:
    family: str
    n: int
    m: int
    method: str
    weight: int
    raw_calls: int
    equivalent_calls: int
    agg_vertices: int
    agg_edges: int
    seconds: float
    budget: int | None = None
    within_budget: bool | None = None


@dataclass
class BenchReport:
    engine: str
    phi: str
    k: int
    rows: list[BenchRow]


def bench_graph(family: str, n: int, seed: int = 0) -> WeightedGraph:
    if family == "dumbbell":
        return dumbbell_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "clique":
        return clique_graph(n)
    if family == "grid":
        rows = max(2, int(math.isqrt(n)))
        if n % rows:
            raise InputError(f"grid bench size {n} must be divisible by {rows}")
        return grid_graph(rows, n // rows)
    if family == "gnp":
        return gnp_graph(n, p=min(1.0, 4.0 / max(n - 1, 1)), seed=seed)
    raise InputError(f"unknown bench family {family!r}; choose from {BENCH_FAMILIES}")


def run_bench(
    families=("dumbbell", "cycle"),
    sizes=(64, 128, 256),
    methods=("det", "naive"),
    engine_name: str = "scipy",
    cfg: AlgoConfig | None = None,
    seed: int = 0,
) -> BenchReport:
    """Time and meter each method on each instance; exact methods must agree."""
    cfg = cfg or default_bench_config()
    engine = get_engine(engine_name)
    unknown = [m for m in methods if m not in BENCH_METHODS]
    if unknown:
        raise InputError(f"unknown methods {unknown}; choose from {BENCH_METHODS}")
    rows: list[BenchRow] = []
    for family in families:
        for n in sizes:
            graph = bench_graph(family, n, seed)
            inst = SteinerInstance(graph, graph.full_set)
            exact_weights: dict[str, int] = {}
            for method in methods:
                start = time.perf_counter()
                budget = None
                within = None
                if method == "det":
                    report = steiner_mincut_det(engine, inst, cfg)
                    meter, weight = report.meter, report.weight
                    eq = report.equivalent_calls
                    budget = det_call_budget(len(inst.terminals), cfg)
                    within = eq <= budget
                elif method == "rand":
                    report = steiner_mincut_rand(engine, inst, cfg)
                    meter, weight = report.meter, report.weight
                    eq = report.equivalent_calls
                elif method == "naive":
                    meter = FlowMeter()
                    cut = naive_steiner(engine, inst, meter)
                    weight = cut.weight
                    eq = meter.call_count
                else:
                    meter = FlowMeter()
                    weight = stoer_wagner(graph).weight
                    eq = 0
                seconds = time.perf_counter() - start
                if method != "rand":
                    exact_weights[method] = weight
                rows.append(
                    BenchRow(
                        family=family,
                        n=n,
                        m=graph.m,
                        method=method,
                        weight=weight,
                        raw_calls=meter.call_count,
                        equivalent_calls=eq,
                        agg_vertices=meter.aggregate_vertices,
                        agg_edges=meter.aggregate_edges,
                        seconds=round(seconds, 6),
                        budget=budget,
                        within_budget=within,
                    )
                )
            if len(set(exact_weights.values())) > 1:
                raise ContractViolation(
                    f"exact methods disagree on {family} n={n}: {exact_weights}"
                )
    return BenchReport(
        engine=engine_name,
        phi=f"{cfg.phi.numerator}/{cfg.phi.denominator}",
        k=cfg.k_effective(),
        rows=rows,
    )


def report_to_json(report: BenchReport) -> dict:
    return {
        "schema": 1,
        "engine": report.engine,
        "phi": report.phi,
        "k": report.k,
        "rows": [
            {
                "family": r.family,
                "n": r.n,
                "m": r.m,
                "method": r.method,
                "weight": r.weight,
                "raw_calls": r.raw_calls,
                "equivalent_calls": r.equivalent_calls,
                "agg_vertices": r.agg_vertices,
                "agg_edges": r.agg_edges,
                "seconds": r.seconds,
                "budget": r.budget,
                "within_budget": r.within_budget,
            }
            for r in report.rows
        ],
    }


def report_to_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow(
            [
                r.family,
                r.n,
                r.m,
                r.method,
                r.weight,
                r.raw_calls,
                r.equivalent_calls,
                r.agg_vertices,
                r.agg_edges,
                r.seconds,
                "" if r.budget is None else r.budget,
                "" if r.within_budget is None else str(r.within_budget).lower(),
            ]
        )
    return buf.getvalue()
