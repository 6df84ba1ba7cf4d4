import random

import pytest

from domdyn.graph import FlowGraph

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


# G1: s=1, a=2, b=3, c=4, d=5
S, A, B, C, D = 1, 2, 3, 4, 5
G1_EDGES = [(S, A), (S, B), (A, C), (B, C), (C, D)]
G1_PARENTS = [0, 0, S, S, S, C]


def g1() -> FlowGraph:
    return FlowGraph(5, S, G1_EDGES)


@pytest.fixture
def G1():
    return g1()


# Deletion-test example: s, x, c, u, y, w. Deleting (x, y) makes c the new
# dominator of both y and w, and x is the DFS parent or the witness of y.
F3 = dict(s=1, x=2, c=3, u=4, y=5, w=6)


def fig3_graph(order: str = "xc") -> FlowGraph:
    s, x, c, u, y, w = (F3[k] for k in "sxcuyw")
    first = [(s, x), (s, c)] if order == "xc" else [(s, c), (s, x)]
    edges = first + [(x, y), (c, u), (u, y), (y, w), (c, w), (w, y)]
    return FlowGraph(6, s, edges)


def random_edges(rng: random.Random, n: int, m: int, dag: bool = False):
    edges = []
    while len(edges) < m:
        u = rng.randint(1, n)
        v = rng.randint(1, n)
        if dag:
            if u == v:
                continue
            u, v = min(u, v), max(u, v)
        edges.append((u, v))
    return edges


def random_updates(rng: random.Random, n: int, edges, k: int, dag: bool = False):
    """Mixed insert/delete ops valid against a simulated edge list."""
    cur = list(edges)
    ops = []
    for _ in range(k):
        if cur and rng.random() < 0.5:
            e = cur.pop(rng.randrange(len(cur)))
            ops.append(("d", e))
        else:
            e = random_edges(rng, n, 1, dag)[0]
            cur.append(e)
            ops.append(("i", e))
    return ops
