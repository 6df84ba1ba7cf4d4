"""Benchmark harness: update-sequence generation, graph families, timed runs."""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .dbs import DepthBasedSearch
from .dsnca import DynamicSNCA
from .engine import DynamicEngine, RecomputeSLT
from .graph import FlowGraph, GraphError, OpKind, UpdateOp, UpdateSequence
from .rng import SplitMix64
from .sgl import SreedharGaoLee
from .static import oracle_dominators, snca

ENGINES: dict[str, type[DynamicEngine]] = {
    "slt": RecomputeSLT,
    "dsnca": DynamicSNCA,
    "dbs": DepthBasedSearch,
    "sgl": SreedharGaoLee,
}

# below this size the brute-force oracle is the verification reference
ORACLE_LIMIT = 200

CSV_COLUMNS = ["graph", "n", "m", "algo", "ifrac", "dfrac", "seed", "insertions",
               "deletions", "build_ms", "update_ms", "total_ms", "affected",
               "scanned", "verified"]


# -- sequence generation ------------------------------------------------------

@dataclass(frozen=True)
class GeneratorConfig:
    i_frac: int = 0
    d_frac: int = 0
    seed: int = 0
    query_frac: int = 0

    def __post_init__(self):
        for name in ("i_frac", "d_frac", "query_frac"):
            val = getattr(self, name)
            if not 0 <= val <= 100:
                raise GraphError(f"{name} must be in [0, 100], got {val}")


def split_counts(m: int, cfg: GeneratorConfig) -> tuple[int, int, int]:
    """(insertions, deletions, queries) for a graph file with m edges."""
    return (cfg.i_frac * m // 100, cfg.d_frac * m // 100, cfg.query_frac * m // 100)


def generate_sequence(n: int, edges: list[tuple[int, int]], cfg: GeneratorConfig
                      ) -> tuple[list[tuple[int, int]], UpdateSequence]:
    """Split the file edges into an initial graph and a random update sequence.

    The last m_i file edges are held back and inserted in file order. Each
    next operation type is drawn with probability proportional to how many
    of that type remain; deletions pick uniformly among the current edges.
    """
    m = len(edges)
    m_i, m_d, m_q = split_counts(m, cfg)
    initial = list(edges[: m - m_i])
    payload = edges[m - m_i:]
    rng = SplitMix64(cfg.seed)
    current = list(initial)
    seq = UpdateSequence(len(initial), [], cfg.seed, cfg.i_frac, cfg.d_frac)
    ri, rd, rq = m_i, m_d, m_q
    k = 0
    while ri + rd + rq:
        r = rng.below(ri + rd + rq)
        if r < ri:
            u, v = payload[k]
            k += 1
            ri -= 1
            current.append((u, v))
            seq.ops.append(UpdateOp(OpKind.INSERT, u, v))
        elif r < ri + rd:
            rd -= 1
            if not current:
                seq.empty_deletes += 1
                continue
            j = rng.below(len(current))
            u, v = current[j]
            current[j] = current[-1]
            current.pop()
            seq.ops.append(UpdateOp(OpKind.DELETE, u, v))
        else:
            rq -= 1
            u = rng.below(n) + 1
            v = rng.below(n) + 1
            seq.ops.append(UpdateOp(OpKind.QUERY, u, v))
    return initial, seq


def format_sequence(seq: UpdateSequence) -> str:
    lines = [f"s {seq.seed} {seq.i_frac} {seq.d_frac} {seq.initial_edge_count}"]
    if seq.empty_deletes:
        lines.append(f"c empty_deletes {seq.empty_deletes}")
    lines.extend(f"{op.kind.value} {op.u} {op.v}" for op in seq.ops)
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> UpdateSequence:
    seq = None
    kinds = {k.value: k for k in OpKind}
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        tag = parts[0]
        if tag == "c":
            if len(parts) == 3 and parts[1] == "empty_deletes" and seq is not None:
                seq.empty_deletes = int(parts[2])
            continue
        try:
            if tag == "s":
                if seq is not None or len(parts) != 5:
                    raise GraphError(f"line {lineno}: bad sequence header")
                seed, ifrac, dfrac, m0 = (int(x) for x in parts[1:])
                seq = UpdateSequence(m0, [], seed, ifrac, dfrac)
            elif tag in kinds:
                if seq is None or len(parts) != 3:
                    raise GraphError(f"line {lineno}: bad operation line")
                seq.ops.append(UpdateOp(kinds[tag], int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"line {lineno}: unknown tag {tag!r}")
        except ValueError as e:
            if isinstance(e, GraphError):
                raise
            raise GraphError(f"line {lineno}: {e}") from None
    if seq is None:
        raise GraphError("missing 's' header")
    return seq


def read_sequence(path) -> UpdateSequence:
    return parse_sequence(Path(path).read_text(encoding="ascii"))


def write_sequence(path, seq: UpdateSequence) -> None:
    Path(path).write_text(format_sequence(seq), encoding="ascii")


# -- graph families -------------------------------------------------------------

def gen_family(kind: str, n: int, m: int | None = None, seed: int = 0
               ) -> tuple[int, int, list[tuple[int, int]]]:
    """Return (n, s, edges). Vertex v_i of the families is numbered i + 1."""
    if kind in ("fig1", "fig2"):
        if n < 3:
            raise GraphError(f"{kind} needs n >= 3")
        edges = _fig1(n) if kind == "fig1" else _fig2(n)
        return n, 1, edges
    if kind not in ("random", "randdag"):
        raise GraphError(f"unknown graph kind {kind!r}")
    if n < 1:
        raise GraphError("n must be positive")
    if m is None or m < 0:
        raise GraphError(f"{kind} needs m >= 0")
    rng = SplitMix64(seed)
    if kind == "random":
        edges = [(rng.below(n) + 1, rng.below(n) + 1) for _ in range(m)]
        return n, 1, edges
    return _randdag(n, m, rng)


def _fig1(n: int) -> list[tuple[int, int]]:
    # path v0 -> ... -> v_{n-1}, plus back edges v_j -> v_{j-1} for j >= 3
    edges = [(i + 1, i + 2) for i in range(n - 1)]
    edges += [(j + 1, j) for j in range(n - 1, 2, -1)]
    return edges


def _fig2(n: int) -> list[tuple[int, int]]:
    # path v0 .. v_{h-1}, fan from v_{h-1} to every v_i with i >= h, and a
    # backward chain v_{i+1} -> v_i through the fan so that a shortcut into
    # v_{n-1} reaches every fan vertex
    h = n // 2
    edges = [(i + 1, i + 2) for i in range(h - 1)]
    edges += [(h, i + 1) for i in range(h, n)]
    edges += [(i + 2, i + 1) for i in range(n - 2, h - 1, -1)]
    return edges


def _randdag(n: int, m: int, rng: SplitMix64) -> tuple[int, int, list[tuple[int, int]]]:
    """Random DAG under a random vertex order; the first vertex is the root.

    When m >= n - 1 every vertex gets one edge from an earlier vertex, so the
    whole graph is reachable; the remaining edges are random forward pairs.
    """
    order = list(range(1, n + 1))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    edges = []
    if n > 1 and m >= n - 1:
        for i in range(1, n):
            edges.append((order[rng.below(i)], order[i]))
    while len(edges) < m and n > 1:
        a = rng.below(n)
        b = rng.below(n)
        if a == b:
            continue
        if a > b:
            a, b = b, a
        edges.append((order[a], order[b]))
    return n, order[0], edges


# -- runs -----------------------------------------------------------------------

class VerificationError(Exception):
    def __init__(self, update: int, vertex: int, expected: int, got: int, algo: str = ""):
        self.update = update
        self.vertex = vertex
        self.expected = expected
        self.got = got
        self.algo = algo
        who = f"{algo}: " if algo else ""
        super().__init__(f"{who}mismatch after update {update}: vertex {vertex} "
                         f"expected parent {expected}, got {got}")


def reference_parents(g: FlowGraph) -> list[int]:
    if g.n <= ORACLE_LIMIT:
        return oracle_dominators(g).parent
    return snca(g)[0].parent


def _compare(expected: list[int], got: list[int], update: int, algo: str = "") -> None:
    for v in range(1, len(expected)):
        if expected[v] != got[v]:
            raise VerificationError(update, v, expected[v], got[v], algo)


@dataclass
class RunReport:
    graph: str
    n: int
    m: int
    algo: str
    ifrac: int
    dfrac: int
    seed: int
    insertions: int
    deletions: int
    build_ms: float
    update_ms: float
    total_ms: float
    affected: int
    scanned: int
    verified: str
    queries: int = 0

    def row(self) -> dict:
        d = asdict(self)
        for key in ("build_ms", "update_ms", "total_ms"):
            d[key] = f"{d[key]:.3f}"
        return {c: d[c] for c in CSV_COLUMNS}


def _apply(engine: DynamicEngine, op: UpdateOp) -> None:
    if op.kind is OpKind.INSERT:
        engine.insert_edge(op.u, op.v)
    elif op.kind is OpKind.DELETE:
        engine.delete_edge(op.u, op.v)
    else:
        engine.dominates(op.u, op.v)


def run(algo: str, n: int, s: int, edges: list[tuple[int, int]], seq: UpdateSequence,
        verify_every: int = 0, graph_name: str = "") -> RunReport:
    """Build on the initial graph, replay the sequence, time both phases.

    With verify_every = K > 0 the tree is checked against the reference
    after every K-th update and after the last one; checks are not timed.
    """
    if algo not in ENGINES:
        raise GraphError(f"unknown algorithm {algo!r}")
    if seq.initial_edge_count > len(edges):
        raise GraphError("sequence expects more initial edges than the graph has")
    g = FlowGraph(n, s, edges[: seq.initial_edge_count])

    t0 = time.perf_counter()
    engine = ENGINES[algo](g)
    build = time.perf_counter() - t0
    if verify_every:
        _compare(reference_parents(g), engine.parents(), 0, algo)

    update = 0.0
    queries = 0
    ops = seq.ops
    for idx, op in enumerate(ops, 1):
        t0 = time.perf_counter()
        _apply(engine, op)
        update += time.perf_counter() - t0
        if op.kind is OpKind.QUERY:
            queries += 1
        if verify_every and (idx % verify_every == 0 or idx == len(ops)):
            _compare(reference_parents(g), engine.parents(), idx, algo)

    st = engine.stats
    return RunReport(
        graph=graph_name, n=n, m=len(edges), algo=algo,
        ifrac=seq.i_frac, dfrac=seq.d_frac, seed=seq.seed,
        insertions=st.insertions, deletions=st.deletions,
        build_ms=build * 1000, update_ms=update * 1000,
        total_ms=(build + update) * 1000,
        affected=st.affected, scanned=st.scanned,
        verified="ok" if verify_every else "off", queries=queries)


def verify_lockstep(n: int, s: int, edges: list[tuple[int, int]], seq: UpdateSequence,
                    algos: list[str]) -> int:
    """Run several engines side by side, each on its own graph copy.

    After every update all parent arrays must equal the reference. Returns
    the number of checkpoints compared.
    """
    for a in algos:
        if a not in ENGINES:
            raise GraphError(f"unknown algorithm {a!r}")
    base = FlowGraph(n, s, edges[: seq.initial_edge_count])
    engines = [(a, ENGINES[a](base.copy())) for a in algos]
    checks = 0
    for idx in range(len(seq.ops) + 1):
        if idx:
            op = seq.ops[idx - 1]
            for _, e in engines:
                _apply(e, op)
            if op.kind is OpKind.QUERY:
                continue
            if op.kind is OpKind.INSERT:
                base.add_edge(op.u, op.v)
            else:
                base.remove_edge(op.u, op.v)
        ref = reference_parents(base)
        for a, e in engines:
            _compare(ref, e.parents(), idx, a)
        checks += 1
    return checks


def append_csv(path, reports: list[RunReport]) -> None:
    path = Path(path)
    new = not path.exists() or path.stat().st_size == 0
    with path.open("a", newline="", encoding="ascii") as f:
        w = csv.DictWriter(f, fieldnames=CSV_COLUMNS)
        if new:
            w.writeheader()
        for r in reports:
            w.writerow(r.row())

