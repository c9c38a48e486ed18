"""Exact s-t maximum flow / minimum cut with call metering.

The default engine is a pure-Python Dinic (blocking flows) working on
arbitrary Python integers. A scipy-backed engine is available for speed on
instances whose capacities fit in int32. Both are deterministic and return
the inclusion-minimal minimum cut side (the residual-reachable set of s).
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .graph import Cut, VertexSet, WeightedGraph, contract

INT32_LIMIT = 1 << 31


@dataclass(frozen=True)
class FlowResult:
    """Max-flow value plus the minimal min-cut side containing s."""

    value: int
    min_side: VertexSet


@dataclass
class FlowMeter:
    """Counts max-flow invocations and the size of each solved instance."""

    calls: list[tuple[int, int]] = field(default_factory=list)

    def record(self, n: int, m: int) -> None:
        self.calls.append((n, m))

    @property
    def call_count(self) -> int:
        return len(self.calls)

    @property
    def aggregate_vertices(self) -> int:
        return sum(n for n, _ in self.calls)

    @property
    def aggregate_edges(self) -> int:
        return sum(m for _, m in self.calls)

    def merge(self, other: "FlowMeter") -> None:
        self.calls.extend(other.calls)

    def snapshot(self) -> int:
        """Marker for later delta(); returns the current call index."""
        return len(self.calls)

    def delta(self, mark: int) -> list[tuple[int, int]]:
        return self.calls[mark:]


class DinicEngine:
    """Blocking-flow max flow on adjacency arrays; exact for any int weights.

    Undirected edges become paired arcs (u->v, v->u) each carrying the edge
    weight, so a unit-weight input graph yields a unit-capacity instance.
    """

    name = "dinic"

    def solve(self, graph: WeightedGraph, s: int, t: int) -> FlowResult:
        n = graph.n
        to: list[int] = []
        cap: list[int] = []
        first = [-1] * n
        nxt: list[int] = []

        def add_arc(u: int, v: int, c: int) -> None:
            to.append(v)
            cap.append(c)
            nxt.append(first[u])
            first[u] = len(to) - 1

        for u, v, w in graph.edges:
            add_arc(u, v, w)
            add_arc(v, u, w)

        level = [-1] * n
        it = [0] * n
        total = 0
        while True:
            for i in range(n):
                level[i] = -1
            level[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                a = first[u]
                while a != -1:
                    v = to[a]
                    if cap[a] > 0 and level[v] < 0:
                        level[v] = level[u] + 1
                        q.append(v)
                    a = nxt[a]
            if level[t] < 0:
                break
            for i in range(n):
                it[i] = first[i]
            # blocking flow: walk the level graph with a current-arc pointer
            path: list[int] = []
            u = s
            while True:
                if u == t:
                    pushed = min(cap[a] for a in path)
                    total += pushed
                    for a in path:
                        cap[a] -= pushed
                        cap[a ^ 1] += pushed
                    k = next(i for i, a in enumerate(path) if cap[a] == 0)
                    del path[k:]
                    u = s if not path else to[path[-1]]
                    continue
                a = it[u]
                while a != -1 and not (cap[a] > 0 and level[to[a]] == level[u] + 1):
                    a = nxt[a]
                it[u] = a
                if a != -1:
                    path.append(a)
                    u = to[a]
                elif u == s:
                    break
                else:
                    last = path.pop()
                    u = to[last ^ 1]
                    it[u] = nxt[last]

        reach_mask = 1 << s
        q = deque([s])
        seen = [False] * n
        seen[s] = True
        while q:
            u = q.popleft()
            a = first[u]
            while a != -1:
                v = to[a]
                if cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    reach_mask |= 1 << v
                    q.append(v)
                a = nxt[a]
        return FlowResult(total, VertexSet(n, reach_mask))


class ScipyEngine:
    """scipy.sparse.csgraph.maximum_flow engine; capacities must fit int32."""

    name = "scipy"

    def solve(self, graph: WeightedGraph, s: int, t: int) -> FlowResult:
        from scipy.sparse import csr_matrix
        from scipy.sparse.csgraph import maximum_flow

        n = graph.n
        if graph.m == 0:
            return FlowResult(0, _component_of(graph, s))
        us, vs, ws = graph.edge_arrays
        if int(ws.max()) >= INT32_LIMIT:
            raise InputError("capacity exceeds int32 range; use the dinic engine")
        rows = np.concatenate([us, vs])
        cols = np.concatenate([vs, us])
        data = np.concatenate([ws, ws]).astype(np.int32)
        mat = csr_matrix((data, (rows, cols)), shape=(n, n))
        res = maximum_flow(mat, s, t)
        residual = mat - res.flow
        residual.data = np.maximum(residual.data, 0)
        residual.eliminate_zeros()
        seen = np.zeros(n, dtype=bool)
        seen[s] = True
        frontier = [s]
        indptr, indices, rdata = residual.indptr, residual.indices, residual.data
        while frontier:
            nxt = []
            for u in frontier:
                for idx in range(indptr[u], indptr[u + 1]):
                    if rdata[idx] > 0:
                        v = indices[idx]
                        if not seen[v]:
                            seen[v] = True
                            nxt.append(v)
            frontier = nxt
        mask = 0
        for v in np.flatnonzero(seen):
            mask |= 1 << int(v)
        return FlowResult(int(res.flow_value), VertexSet(n, mask))


def _component_of(graph: WeightedGraph, s: int) -> VertexSet:
    stack = [s]
    mask = 1 << s
    while stack:
        u = stack.pop()
        for v, _ in graph.adj[u]:
            if not (mask >> v) & 1:
                mask |= 1 << v
                stack.append(v)
    return VertexSet(graph.n, mask)


_ENGINES = {"dinic": DinicEngine, "scipy": ScipyEngine}
ENGINE_NAMES = tuple(sorted(_ENGINES))


def get_engine(name: str = "dinic"):
    try:
        return _ENGINES[name]()
    except KeyError:
        raise InputError(f"unknown engine {name!r}; choose from {sorted(_ENGINES)}")


def max_flow(engine, graph: WeightedGraph, s: int, t: int, meter: FlowMeter) -> FlowResult:
    """Solve one s-t max flow, recording exactly one meter entry (n, m)."""
    if not (0 <= s < graph.n and 0 <= t < graph.n):
        raise InputError("source or sink id outside graph")
    if s == t:
        raise InputError("source equals sink")
    result = engine.solve(graph, s, t)
    meter.record(graph.n, graph.m)
    if t in result.min_side:
        raise InputError("engine returned sink inside source side")
    return result


def min_cut_separating(
    engine,
    graph: WeightedGraph,
    side_a: VertexSet,
    side_b: VertexSet,
    meter: FlowMeter,
) -> Cut:
    """Minimum cut with all of A on the source side, all of B on the sink side.

    A and B are contracted to single vertices, so the flow instance has
    n - |A| - |B| + 2 vertices and at most m edges; one metered call. The
    returned side is the inclusion-minimal minimizer containing A.
    """
    if not side_a or not side_b:
        raise InputError("separation sides must be nonempty")
    if not side_a.isdisjoint(side_b):
        raise InputError("separation sides overlap")
    rest = side_a.complement().difference(side_b)
    classes = [side_a, side_b]
    classes.extend(VertexSet(graph.n, 1 << v) for v in rest)
    cmap = contract(graph, classes)
    result = max_flow(engine, cmap.graph, 0, 1, meter)
    side = cmap.lift(result.min_side)
    return Cut(side, result.value)


# ---------------------------------------------------------------------------
# DIMACS max-flow format (1-based ids):
#   c comment
#   p max <n> <m>
#   n <id> s / n <id> t
#   a <u> <v> <cap>
# Arcs are read as undirected edges (parallel arcs merge).
# ---------------------------------------------------------------------------


def parse_dimacs(text: str) -> tuple[WeightedGraph, int, int]:
    n = None
    source = sink = None
    triples: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if len(parts) != 4 or parts[1] != "max":
                raise InputError(f"line {lineno}: header must be 'p max <n> <m>'")
            n = int(parts[2])
        elif tag == "n":
            if len(parts) != 3 or parts[2] not in ("s", "t"):
                raise InputError(f"line {lineno}: node line must be 'n <id> s|t'")
            if parts[2] == "s":
                source = int(parts[1]) - 1
            else:
                sink = int(parts[1]) - 1
        elif tag == "a":
            if len(parts) != 4:
                raise InputError(f"line {lineno}: arc line must be 'a <u> <v> <cap>'")
            triples.append((int(parts[1]) - 1, int(parts[2]) - 1, int(parts[3])))
        else:
            raise InputError(f"line {lineno}: unknown line tag {tag!r}")
    if n is None:
        raise InputError("missing 'p max' header")
    if source is None or sink is None:
        raise InputError("missing source or sink designation")
    return WeightedGraph(n, triples), source, sink


def write_dimacs(graph: WeightedGraph, s: int, t: int) -> str:
    lines = [f"p max {graph.n} {graph.m}", f"n {s + 1} s", f"n {t + 1} t"]
    lines.extend(f"a {u + 1} {v + 1} {w}" for u, v, w in graph.edges)
    return "\n".join(lines) + "\n"
