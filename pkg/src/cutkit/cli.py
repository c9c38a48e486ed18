"""Command line access to the generators, flow engines, and cut algorithms.

Exit codes: 0 on success, 2 for bad input (including unreadable files and
malformed arguments), 3 when an internal invariant or decomposition budget
check fails. JSON payloads all carry a schema field, currently 1.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bench import (
    BENCH_FAMILIES,
    BENCH_METHODS,
    default_bench_config,
    report_to_csv,
    report_to_json,
    run_bench,
)
from .errors import ContractViolation, DecompositionError, InputError
from .expander import DemandVector, expander_decompose
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import VertexSet, WeightedGraph, parse_edgelist, write_edgelist
from .isolating import minimum_isolating_cuts
from .maxflow import ENGINE_NAMES, FlowMeter, get_engine, max_flow, parse_dimacs, write_dimacs
from .oracles import enumerate_cuts, naive_isolating, naive_steiner, stoer_wagner
from .splitters import isolator_family, isolator_family_min2, verify_isolator
from .steiner import (
    AlgoConfig,
    SteinerInstance,
    steiner_mincut_det,
    steiner_mincut_rand,
)

SCHEMA = 1


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _read_graph_full(args) -> tuple[WeightedGraph, int | None, int | None]:
    """Graph plus the source/sink designations when the format carries them."""
    text = _read_text(args.graph)
    if args.format == "dimacs":
        return parse_dimacs(text)
    return parse_edgelist(text), None, None


def _read_graph(args) -> WeightedGraph:
    return _read_graph_full(args)[0]


def _parse_ids(spec: str, n: int) -> VertexSet:
    try:
        ids = [int(part) for part in spec.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad vertex list {spec!r}") from exc
    if not ids:
        raise InputError("vertex list is empty")
    return VertexSet.from_ids(n, ids)


def _parse_phi(spec: str) -> Fraction:
    try:
        phi = Fraction(spec)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad phi {spec!r}") from exc
    if not 0 < phi <= 1:
        raise InputError(f"phi must be in (0, 1], got {phi}")
    return phi


def _emit(payload: dict, out: str | None = None) -> None:
    _write_text(out, json.dumps({"schema": SCHEMA, **payload}, indent=2))


def _cut_payload(cut) -> dict:
    return {"weight": cut.weight, "side": cut.side.members()}


def _config_from(args) -> AlgoConfig:
    kwargs = {}
    if getattr(args, "phi", None) is not None:
        kwargs["phi"] = _parse_phi(args.phi)
    if getattr(args, "k", None) is not None:
        kwargs["k"] = args.k
    if getattr(args, "seed", None) is not None:
        kwargs["seed"] = args.seed
    if getattr(args, "reps", None) is not None:
        kwargs["rand_reps"] = args.reps
    if getattr(args, "no_fallback", False):
        kwargs["fallback_enabled"] = False
    if getattr(args, "estimator", None) is not None:
        kwargs["estimator"] = args.estimator
    return AlgoConfig(**kwargs)


def cmd_gen(args) -> int:
    spec = GeneratorSpec(
        family=args.family,
        n=args.n,
        seed=args.seed,
        p=args.p,
        w_min=args.w_min,
        w_max=args.w_max,
        weight=args.weight,
        rows=args.rows,
        side_size=args.side_size,
    )
    graph = generate(spec)
    if args.format == "dimacs":
        text = write_dimacs(graph, 0, graph.n - 1)
    else:
        text = write_edgelist(graph)
    _write_text(args.out, text)
    return 0


def cmd_maxflow(args) -> int:
    graph, file_s, file_t = _read_graph_full(args)
    source = args.source if args.source is not None else file_s
    sink = args.sink if args.sink is not None else file_t
    if source is None or sink is None:
        raise InputError("source and sink are required unless the file names them")
    engine = get_engine(args.engine)
    meter = FlowMeter()
    result = max_flow(engine, graph, source, sink, meter)
    _emit(
        {
            "value": result.value,
            "min_side": result.min_side.members(),
            "calls": meter.call_count,
        },
        args.out,
    )
    return 0


def cmd_isolating(args) -> int:
    graph = _read_graph(args)
    terminals = _parse_ids(args.terminals, graph.n)
    engine = get_engine(args.engine)
    meter = FlowMeter()
    if args.method == "naive":
        result = naive_isolating(engine, graph, terminals, meter)
    else:
        result = minimum_isolating_cuts(engine, graph, terminals, meter)
    _emit(
        {
            "terminals": terminals.members(),
            "cuts": [
                {"vertex": v, **_cut_payload(e.cut)}
                for v, e in sorted(result.entries.items())
            ],
            "phase_a_calls": len(result.phase_a_calls),
            "phase_b_calls": len(result.phase_b_calls),
        },
        args.out,
    )
    return 0


def cmd_splitter_gen(args) -> int:
    if args.min2:
        family = isolator_family_min2(args.n, args.k)
    else:
        family = isolator_family(args.n, args.k)
    verified = False
    if args.verify:
        if args.n > 16:
            raise InputError("exhaustive verification is limited to n <= 16")
        verify_isolator(family)
        verified = True
    _emit(
        {
            "n": args.n,
            "k": args.k,
            "variant": family.variant,
            "size_bound": family.size_bound,
            "set_count": len(family),
            "sets": [s.members() for s in family],
            "verified": verified,
        },
        args.out,
    )
    return 0


def cmd_expander_decomp(args) -> int:
    graph = _read_graph(args)
    phi = _parse_phi(args.phi)
    if args.demand_support == "all":
        support = None
    else:
        support = _parse_ids(args.demand_support, graph.n)
    demands = DemandVector.uniform(graph.n, args.demand_value, support)
    dec = expander_decompose(graph, demands, phi, c_b=args.c_b)
    _emit(
        {
            "phi": str(phi),
            "clusters": [c.members() for c in dec.clusters],
            "certified": list(dec.certified),
            "inter_weight": dec.inter_weight,
            "budget": str(dec.budget),
            "splits": dec.splits,
        },
        args.out,
    )
    return 0


def cmd_mincut(args) -> int:
    graph = _read_graph(args)
    inst = SteinerInstance(graph, graph.full_set)
    return _solve(args, inst)


def cmd_steiner(args) -> int:
    graph = _read_graph(args)
    inst = SteinerInstance(graph, _parse_ids(args.terminals, graph.n))
    return _solve(args, inst)


def _solve(args, inst: SteinerInstance) -> int:
    engine = get_engine(args.engine)
    cfg = _config_from(args)
    payload: dict
    if args.method == "det":
        report = steiner_mincut_det(engine, inst, cfg)
        payload = {
            **_cut_payload(report.cut),
            "raw_calls": report.meter.call_count,
            "equivalent_calls": report.equivalent_calls,
            "fingerprint": report.fingerprint(),
        }
    elif args.method == "rand":
        report = steiner_mincut_rand(engine, inst, cfg)
        payload = {
            **_cut_payload(report.cut),
            "raw_calls": report.meter.call_count,
            "equivalent_calls": report.equivalent_calls,
            "fingerprint": report.fingerprint(),
        }
    elif args.method == "naive":
        meter = FlowMeter()
        cut = naive_steiner(engine, inst, meter)
        payload = {**_cut_payload(cut), "raw_calls": meter.call_count}
    else:
        if inst.terminals != inst.graph.full_set:
            raise InputError("stoer-wagner applies only when every vertex is terminal")
        cut = stoer_wagner(inst.graph)
        payload = {**_cut_payload(cut), "raw_calls": 0}
    payload["method"] = args.method
    payload["terminals"] = inst.terminals.members()
    _emit(payload, args.out)
    return 0


def cmd_verify(args) -> int:
    graph = _read_graph(args)
    engine = get_engine(args.engine)
    if args.terminals is not None:
        terminals = _parse_ids(args.terminals, graph.n)
    else:
        terminals = graph.full_set
    inst = SteinerInstance(graph, terminals)
    checks: list[dict] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        checks.append({"name": name, "ok": bool(ok), "detail": detail})

    det = steiner_mincut_det(engine, inst)
    rand = steiner_mincut_rand(engine, inst)
    naive = naive_steiner(engine, inst)
    check(
        "det-matches-naive",
        det.weight == naive.weight,
        f"det={det.weight} naive={naive.weight}",
    )
    check(
        "rand-matches-naive",
        rand.weight == naive.weight,
        f"rand={rand.weight} naive={naive.weight}",
    )
    if terminals == graph.full_set and graph.n >= 2:
        sw = stoer_wagner(graph)
        check(
            "det-matches-contraction",
            det.weight == sw.weight,
            f"det={det.weight} contraction={sw.weight}",
        )
    if graph.n <= 12:
        enum = enumerate_cuts(graph, terminals=terminals)
        check(
            "det-matches-enumeration",
            det.weight == enum.weight,
            f"det={det.weight} enumeration={enum.weight}",
        )
    all_ok = all(c["ok"] for c in checks)
    _emit({"checks": checks, "all_ok": all_ok}, args.out)
    return 0 if all_ok else 3


def cmd_bench(args) -> int:
    cfg = default_bench_config()
    if args.phi is not None or args.k is not None:
        cfg = AlgoConfig(
            phi=_parse_phi(args.phi) if args.phi is not None else Fraction(1, 4),
            k=args.k if args.k is not None else 2,
        )
    report = run_bench(
        families=args.families,
        sizes=args.sizes,
        methods=args.methods,
        engine_name=args.engine,
        cfg=cfg,
        seed=args.seed,
    )
    if args.csv is not None:
        _write_text(args.csv, report_to_csv(report))
    _emit(report_to_json(report), args.out)
    return 0


def _add_graph_args(sub) -> None:
    sub.add_argument("--graph", required=True, help="path to the graph, or - for stdin")
    sub.add_argument(
        "--format",
        choices=("edgelist", "dimacs"),
        default="edgelist",
        help="graph file format (default edgelist)",
    )


def _add_engine_arg(sub) -> None:
    sub.add_argument(
        "--engine",
        choices=ENGINE_NAMES,
        default="dinic",
        help="max-flow engine (default dinic)",
    )


def _add_out_arg(sub) -> None:
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def _add_config_args(sub) -> None:
    sub.add_argument("--phi", default=None, help="expansion parameter, e.g. 1/16")
    sub.add_argument("--k", type=int, default=None, help="unbalance threshold override")
    sub.add_argument("--seed", type=int, default=None, help="seed for the randomized driver")
    sub.add_argument("--reps", type=int, default=None, help="sampling repetitions per scale")
    sub.add_argument(
        "--no-fallback",
        action="store_true",
        help="disable the naive fallback for abandoned weight guesses",
    )
    sub.add_argument(
        "--estimator",
        choices=("geometric", "oracle"),
        default=None,
        help="weight estimator feeding the guess ladder",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutkit",
        description="Minimum cuts, isolating cuts, and expander decompositions.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate a test graph")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--p", type=float, default=0.5)
    gen.add_argument("--w-min", type=int, default=1)
    gen.add_argument("--w-max", type=int, default=8)
    gen.add_argument("--weight", type=int, default=1)
    gen.add_argument("--rows", type=int, default=None)
    gen.add_argument("--side-size", type=int, default=None)
    gen.add_argument(
        "--format", choices=("edgelist", "dimacs"), default="edgelist"
    )
    _add_out_arg(gen)
    gen.set_defaults(func=cmd_gen)

    mf = subs.add_parser("maxflow", help="single source-sink max flow / min cut")
    _add_graph_args(mf)
    mf.add_argument("--source", type=int, default=None)
    mf.add_argument("--sink", type=int, default=None)
    _add_engine_arg(mf)
    _add_out_arg(mf)
    mf.set_defaults(func=cmd_maxflow)

    iso = subs.add_parser("isolating", help="minimum isolating cuts for terminals")
    _add_graph_args(iso)
    iso.add_argument("--terminals", required=True, help="comma separated vertex ids")
    iso.add_argument("--method", choices=("fast", "naive"), default="fast")
    _add_engine_arg(iso)
    _add_out_arg(iso)
    iso.set_defaults(func=cmd_isolating)

    sg = subs.add_parser("splitter-gen", help="derandomized isolator set family")
    sg.add_argument("--n", type=int, required=True)
    sg.add_argument("--k", type=int, required=True)
    sg.add_argument("--min2", action="store_true", help="pad singletons to pairs")
    sg.add_argument("--verify", action="store_true", help="exhaustive check (n <= 16)")
    _add_out_arg(sg)
    sg.set_defaults(func=cmd_splitter_gen)

    ed = subs.add_parser("expander-decomp", help="demand-weighted expander decomposition")
    _add_graph_args(ed)
    ed.add_argument("--phi", required=True, help="expansion parameter, e.g. 1/4")
    ed.add_argument("--demand-value", type=int, required=True)
    ed.add_argument(
        "--demand-support",
        default="all",
        help="comma separated vertex ids, or 'all'",
    )
    ed.add_argument("--c-b", type=int, default=1, help="inter-cluster budget constant")
    _add_out_arg(ed)
    ed.set_defaults(func=cmd_expander_decomp)

    mc = subs.add_parser("mincut", help="global minimum cut (terminals = all)")
    _add_graph_args(mc)
    mc.add_argument(
        "--method",
        choices=("det", "rand", "naive", "stoer-wagner"),
        default="det",
    )
    _add_engine_arg(mc)
    _add_config_args(mc)
    _add_out_arg(mc)
    mc.set_defaults(func=cmd_mincut)

    st = subs.add_parser("steiner", help="minimum cut separating given terminals")
    _add_graph_args(st)
    st.add_argument("--terminals", required=True, help="comma separated vertex ids")
    st.add_argument("--method", choices=("det", "rand", "naive"), default="det")
    _add_engine_arg(st)
    _add_config_args(st)
    _add_out_arg(st)
    st.set_defaults(func=cmd_steiner)

    ver = subs.add_parser("verify", help="cross-check the solvers on one instance")
    _add_graph_args(ver)
    ver.add_argument("--terminals", default=None, help="comma separated vertex ids")
    _add_engine_arg(ver)
    _add_out_arg(ver)
    ver.set_defaults(func=cmd_verify)

    be = subs.add_parser("bench", help="meter the drivers against the naive baseline")
    be.add_argument("--families", nargs="+", default=["dumbbell", "cycle"], choices=BENCH_FAMILIES)
    be.add_argument("--sizes", nargs="+", type=int, default=[64, 128, 256])
    be.add_argument("--methods", nargs="+", default=["det", "naive"], choices=BENCH_METHODS)
    be.add_argument("--engine", choices=ENGINE_NAMES, default="scipy")
    be.add_argument("--phi", default=None)
    be.add_argument("--k", type=int, default=None)
    be.add_argument("--seed", type=int, default=0)
    be.add_argument("--csv", default=None, help="also write rows as CSV to this path")
    _add_out_arg(be)
    be.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractViolation, DecompositionError) as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
