import random

import pytest
from hypothesis import given, settings, strategies as st

from domdyn.bench import gen_family
from domdyn.domtree import DominatorTree
from domdyn.graph import FlowGraph
from domdyn.static import (
    chk_iterative, dfs, dominator_sets, is_reducible, oracle_dominators,
    semidominators, slt, snca,
)

from conftest import A, B, C, D, G1_PARENTS, S, g1, random_edges


def family(kind, n):
    n, s, edges = gen_family(kind, n)
    return FlowGraph(n, s, edges)


def path_graph(n):
    return FlowGraph(n, 1, [(i, i + 1) for i in range(1, n)])


# -- dfs --------------------------------------------------------------------

def test_dfs_g1_numbering():
    info = dfs(g1())
    assert [info.pre[v] for v in (S, A, C, D, B)] == [1, 2, 3, 4, 5]
    assert [info.post[v] for v in (D, C, A, B, S)] == [1, 2, 3, 4, 5]
    assert info.parent[C] == A and info.parent[B] == S
    assert info.order == [S, A, C, D, B]


def test_dfs_path():
    info = dfs(path_graph(8))
    assert info.pre[1:] == list(range(1, 9))


def test_dfs_restricted():
    info = dfs(g1(), C, restrict={C, D})
    assert info.pre == [0, 0, 0, 0, 1, 2]
    assert info.count == 2


def test_dfs_restrict_forms_agree():
    g = g1()
    by_set = dfs(g, C, restrict={C, D}).pre
    by_mask = dfs(g, C, restrict=[False, False, False, False, True, True]).pre
    by_pred = dfs(g, C, restrict=lambda v: v >= C).pre
    assert by_set == by_mask == by_pred


# -- semidominators ------------------------------------------------------------

def test_semidominators_g1():
    g = g1()
    semi = semidominators(g, dfs(g))
    assert semi.sd[C] == S
    assert semi.g[C] == B


def test_semidominators_path():
    g = path_graph(8)
    semi = semidominators(g, dfs(g))
    for v in range(2, 9):
        assert semi.sd[v] == v - 1
        assert semi.g[v] == v - 1


def test_semidominators_back_edge_family():
    g = family("fig1", 8)
    semi = semidominators(g, dfs(g))
    for v in range(2, 9):
        assert semi.sd[v] == v - 1


def brute_semidominator(g, info, v):
    """Smallest-preorder u with a path u -> v whose interior is numbered above v."""
    pre = info.pre
    inside = {v}
    stack = [v]
    best = None
    while stack:
        w = stack.pop()
        for u in g.in_adj[w]:
            if pre[u] == 0 or u == w:
                continue
            if pre[u] > pre[v]:
                if u not in inside:
                    inside.add(u)
                    stack.append(u)
            elif pre[u] < pre[v] and (best is None or pre[u] < pre[best]):
                best = u
    return best


def graphs(max_n=12, max_m=30):
    return st.integers(1, max_n).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=max_m)))


@settings(max_examples=300)
@given(graphs())
def test_semidominators_match_path_definition(data):
    n, edges = data
    g = FlowGraph(n, 1, edges)
    info = dfs(g)
    semi = semidominators(g, info)
    for v in info.order[1:]:
        assert semi.sd[v] == brute_semidominator(g, info, v)
        # sanity: never above the DFS parent, and the witness is an in-neighbor
        assert info.pre[semi.sd[v]] <= info.pre[info.parent[v]]
        assert semi.g[v] in g.in_adj[v]
        if g.in_adj[v] == [info.parent[v]]:
            assert semi.sd[v] == info.parent[v]


@settings(max_examples=300)
@given(graphs())
def test_witness_replays_semidominator(data):
    # from g(v), the best candidate is g(v) itself if numbered below v, else the
    # best semidominator on the DFS-tree path above g(v) that is numbered above v
    n, edges = data
    g = FlowGraph(n, 1, edges)
    info = dfs(g)
    semi = semidominators(g, info)
    pre = info.pre
    for v in info.order[1:]:
        w = semi.g[v]
        if pre[w] < pre[v]:
            cand = pre[w]
        else:
            cand = None
            u = w
            while pre[u] > pre[v]:
                c = pre[semi.sd[u]]
                cand = c if cand is None else min(cand, c)
                u = info.parent[u]
        assert cand == pre[semi.sd[v]]


# -- dominator algorithms ---------------------------------------------------------

def test_g1_all_algorithms():
    g = g1()
    assert oracle_dominators(g).parent == G1_PARENTS
    assert slt(g).parent == G1_PARENTS
    assert snca(g)[0].parent == G1_PARENTS
    assert chk_iterative(g).parent == G1_PARENTS


def test_fan_family_tree():
    g = family("fig2", 9)
    expected = [0, 0, 1, 2, 3, 4, 4, 4, 4, 4]
    assert slt(g).parent == expected
    assert oracle_dominators(g).parent == expected


def test_unreachable_component():
    g = FlowGraph(5, 1, [(1, 2), (3, 4), (4, 5)])
    for t in (slt(g), snca(g)[0], chk_iterative(g), oracle_dominators(g)):
        assert t.parent == [0, 0, 1, 0, 0, 0]


def test_back_edge_family_with_shortcut():
    g = family("fig1", 8)
    g.add_edge(1, 8)
    assert snca(g)[0].parent == [0, 0, 1, 1, 1, 1, 1, 1, 1]


def test_star():
    g = FlowGraph(6, 1, [(1, v) for v in range(2, 7)])
    assert oracle_dominators(g).parent == [0, 0, 1, 1, 1, 1, 1]


def test_self_loops_are_ignored():
    g = g1()
    for v in range(1, 6):
        g.add_edge(v, v)
    for t in (slt(g), snca(g)[0], chk_iterative(g)):
        assert t.parent == G1_PARENTS


def test_chk_seeded_with_correct_tree_is_fixpoint():
    g = g1()
    seed = DominatorTree(5, S, G1_PARENTS)
    assert chk_iterative(g, seed_tree=seed, active=[]).parent == G1_PARENTS


def test_chk_seeded_after_deletion():
    g = g1()
    seed = DominatorTree(5, S, G1_PARENTS)
    g.remove_edge(B, C)
    t = chk_iterative(g, seed_tree=seed, active={C, D})
    assert t.parent[C] == A and t.parent[D] == C
    assert t.parent == oracle_dominators(g).parent


def test_dominator_sets_g1():
    sets = dominator_sets(g1())
    assert sets[D] == {S, C, D}
    assert sets[C] == {S, C}
    assert sets[S] == {S}


def test_static_algorithms_agree_with_oracle():
    rng = random.Random(1)
    for _ in range(400):
        n = rng.randint(1, 40)
        g = FlowGraph(n, 1, random_edges(rng, n, rng.randint(0, 150)))
        want = oracle_dominators(g).parent
        assert slt(g).parent == want
        assert snca(g)[0].parent == want
        assert chk_iterative(g).parent == want


def test_static_algorithms_other_roots():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(2, 25)
        g = FlowGraph(n, 1, random_edges(rng, n, rng.randint(0, 60)))
        r = rng.randint(1, n)
        want = oracle_dominators(g, r).parent
        assert slt(g, r).parent == want
        assert snca(g, r)[0].parent == want
        assert chk_iterative(g, r).parent == want


def test_restricted_snca_matches_oracle_on_induced_subgraph():
    rng = random.Random(3)
    checked = 0
    for _ in range(200):
        n = rng.randint(2, 30)
        g = FlowGraph(n, 1, random_edges(rng, n, rng.randint(n, 3 * n)))
        t = oracle_dominators(g)
        for r in range(1, n + 1):
            if not t.is_reachable(r):
                continue
            region = set(t.subtree(r))
            sub = FlowGraph(n, r, [(u, v) for u, v in g.edges() if u in region and v in region])
            assert snca(g, r, restrict=region)[0].parent == oracle_dominators(sub, r).parent
            checked += 1
    assert checked > 1000


# -- reducibility ------------------------------------------------------------------

def test_single_entry_loop_is_reducible():
    s, a, b, t = 1, 2, 3, 4
    assert is_reducible(FlowGraph(4, s, [(s, a), (a, b), (b, a), (a, t)]))


def test_two_entry_loop_is_irreducible():
    s, a, b = 1, 2, 3
    assert not is_reducible(FlowGraph(3, s, [(s, a), (s, b), (a, b), (b, a)]))


@pytest.mark.parametrize("seed", range(20))
def test_dags_are_reducible(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 30)
    assert is_reducible(FlowGraph(n, 1, random_edges(rng, n, rng.randint(0, 80), dag=True)))


def test_nested_loops_are_reducible():
    # s -> h1 -> h2 -> body -> h2, h2 -> latch -> h1, h1 -> exit
    edges = [(1, 2), (2, 3), (3, 4), (4, 3), (3, 5), (5, 2), (2, 6)]
    assert is_reducible(FlowGraph(6, 1, edges))
