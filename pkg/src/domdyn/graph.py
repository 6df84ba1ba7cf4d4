"""Mutable flow graphs and the plain-text graph file format.

Vertices are the integers ``1..n``; index 0 is a sentinel meaning "none".
Edges form a multiset: duplicates are stored and removed one occurrence at a
time, self-loops are stored as-is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed input: bad vertex ids, absent edges, bad files."""


class FlowGraph:
    """Directed multigraph with a distinguished start vertex."""

    def __init__(self, n: int, s: int = 1, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        if not 1 <= s <= n:
            raise GraphError(f"start vertex {s} outside [1, {n}]")
        self.n = n
        self.s = s
        self.out_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.m = 0
        for u, v in edges:
            self.add_edge(u, v)

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} outside [1, {self.n}]")

    def add_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        self.out_adj[u].append(v)
        self.in_adj[v].append(u)
        self.m += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        # the latest occurrence goes, so add_edge + remove_edge is a no-op
        out = self.out_adj[u]
        i = _rindex(out, v)
        if i < 0:
            raise GraphError(f"edge ({u}, {v}) not in graph")
        _swap_remove(out, i)
        inc = self.in_adj[v]
        _swap_remove(inc, _rindex(inc, u))
        self.m -= 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    def count_edge(self, u: int, v: int) -> int:
        return self.out_adj[u].count(v)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self.out_adj[u]:
                yield u, v

    def copy(self) -> FlowGraph:
        g = FlowGraph.__new__(FlowGraph)
        g.n, g.s, g.m = self.n, self.s, self.m
        g.out_adj = [list(a) for a in self.out_adj]
        g.in_adj = [list(a) for a in self.in_adj]
        return g

    def reachable(self, root: int | None = None, banned: int = 0) -> list[bool]:
        """Vertices reachable from ``root`` (default ``s``) avoiding ``banned``."""
        root = self.s if root is None else root
        seen = [False] * (self.n + 1)
        if root == banned:
            return seen
        seen[root] = True
        stack = [root]
        out = self.out_adj
        while stack:
            u = stack.pop()
            for v in out[u]:
                if not seen[v] and v != banned:
                    seen[v] = True
                    stack.append(v)
        return seen

    def __repr__(self) -> str:
        return f"FlowGraph(n={self.n}, s={self.s}, m={self.m})"


def _rindex(lst: list[int], x: int) -> int:
    for i in range(len(lst) - 1, -1, -1):
        if lst[i] == x:
            return i
    return -1


def _swap_remove(lst: list[int], i: int) -> None:
    last = lst.pop()
    if i < len(lst):
        lst[i] = last


def is_reachable(g: FlowGraph, v: int, tree) -> bool:
    """Reachability read off a current dominator tree of ``g``."""
    return v == tree.root or tree.parent[v] != 0


class OpKind(Enum):
    INSERT = "i"
    DELETE = "d"
    QUERY = "q"


@dataclass(frozen=True)
class UpdateOp:
    kind: OpKind
    u: int
    v: int


@dataclass
class UpdateSequence:
    initial_edge_count: int
    ops: list[UpdateOp] = field(default_factory=list)
    seed: int = 0
    i_frac: int = 0
    d_frac: int = 0
    # delete tokens drawn while the simulated graph was empty
    empty_deletes: int = 0

    def count(self, kind: OpKind) -> int:
        return sum(1 for op in self.ops if op.kind is kind)


# -- graph files ----------------------------------------------------------

def parse_graph(text: str) -> tuple[int, int, list[tuple[int, int]]]:
    """Parse ``p <n> <m> <s>`` + ``a <u> <v>`` lines; ``c`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            if tag == "p":
                if header is not None or len(parts) != 4:
                    raise GraphError(f"line {lineno}: bad header")
                header = tuple(int(x) for x in parts[1:])
            elif tag == "a":
                if header is None or len(parts) != 3:
                    raise GraphError(f"line {lineno}: bad edge line")
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphError(f"line {lineno}: unknown tag {tag!r}")
        except ValueError as e:
            if isinstance(e, GraphError):
                raise
            raise GraphError(f"line {lineno}: {e}") from None
    if header is None:
        raise GraphError("missing 'p' header")
    n, m, s = header
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    if n < 1 or not 1 <= s <= n:
        raise GraphError(f"bad header: n={n}, s={s}")
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge ({u}, {v}) outside [1, {n}]")
    return n, s, edges


def read_graph(path) -> tuple[int, int, list[tuple[int, int]]]:
    with open(path, encoding="ascii") as f:
        return parse_graph(f.read())


def format_graph(n: int, s: int, edges: list[tuple[int, int]]) -> str:
    lines = [f"p {n} {len(edges)} {s}"]
    lines.extend(f"a {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_graph(path, n: int, s: int, edges: list[tuple[int, int]]) -> None:
    Path(path).write_text(format_graph(n, s, edges), encoding="ascii")
