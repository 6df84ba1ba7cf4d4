"""Static dominator algorithms.

``slt`` is the simple Lengauer-Tarjan algorithm (link-eval with path
compression, no balancing), ``snca`` the semi-NCA hybrid, ``chk_iterative``
the Cooper-Harvey-Kennedy data-flow iteration and ``oracle_dominators`` the
removal-reachability algorithm used as a test oracle.

Every algorithm accepts a root and an optional ``restrict`` set so that the
dynamic engines can run it on the subgraph induced by a dominator subtree.
Edges leaving the restricted vertex set are ignored.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Collection, Sequence, Union

from .domtree import DominatorTree
from .graph import FlowGraph

Restrict = Union[None, Collection[int], Sequence[bool], Callable[[int], bool]]


@dataclass
class DfsInfo:
    root: int
    pre: list[int]       # 0 = not reached
    post: list[int]
    parent: list[int]    # DFS-tree parent t(v); 0 for the root / unreached
    order: list[int]     # reached vertices by increasing pre

    @property
    def count(self) -> int:
        return len(self.order)


@dataclass
class SemiInfo:
    sd: list[int]        # semidominator (vertex id), 0 if undefined
    g: list[int]         # witness in-neighbor on a semidominator path


def _allowed_mask(n: int, restrict: Restrict) -> list[bool] | None:
    if restrict is None:
        return None
    if callable(restrict):
        return [False] + [bool(restrict(v)) for v in range(1, n + 1)]
    if isinstance(restrict, (list, bytearray)) and len(restrict) == n + 1:
        return [bool(x) for x in restrict]
    mask = [False] * (n + 1)
    for v in restrict:
        mask[v] = True
    return mask


def dfs(g: FlowGraph, root: int | None = None, restrict: Restrict = None) -> DfsInfo:
    """Iterative DFS scanning out-edges in adjacency order."""
    root = g.s if root is None else root
    n = g.n
    allowed = _allowed_mask(n, restrict)
    pre = [0] * (n + 1)
    post = [0] * (n + 1)
    parent = [0] * (n + 1)
    order = [root]
    pre[root] = 1
    out = g.out_adj
    stack = [(root, 0)]
    k = 1
    p = 0
    while stack:
        v, i = stack[-1]
        adj = out[v]
        while i < len(adj):
            w = adj[i]
            i += 1
            if pre[w] == 0 and (allowed is None or allowed[w]):
                stack[-1] = (v, i)
                k += 1
                pre[w] = k
                parent[w] = v
                order.append(w)
                stack.append((w, 0))
                break
        else:
            stack.pop()
            p += 1
            post[v] = p
    return DfsInfo(root, pre, post, parent, order)


# -- semidominators ------------------------------------------------------
#
# The inner loops work on preorder numbers: ``vertex[i]`` is the vertex with
# number i, ``tnum[i]`` the number of its DFS parent. A vertex is "linked"
# into the path-minima forest once its number exceeds the current threshold,
# so linking is implicit; ``anc``/``label`` carry the compressed forest.

def _numbering(info: DfsInfo) -> tuple[list[int], list[int]]:
    vertex = [0] + info.order
    pre, parent = info.pre, info.parent
    tnum = [0] * len(vertex)
    for i in range(2, len(vertex)):
        tnum[i] = pre[parent[vertex[i]]]
    return vertex, tnum


def _eval(u: int, lim: int, anc: list[int], label: list[int], semi: list[int]) -> int:
    """Number of the min-semi vertex on the forest path from u (u > lim)."""
    if anc[u] <= lim:
        return label[u]
    path = []
    x = u
    while anc[x] > lim:
        path.append(x)
        x = anc[x]
    for p in reversed(path):
        a = anc[p]
        if semi[label[a]] < semi[label[p]]:
            label[p] = label[a]
        anc[p] = anc[a]
    return label[u]


def _semi_pass(in_adj, pre, vertex, semi, label, anc, wit, top: int) -> None:
    """Compute semi[i] and witness for i = top..2 in reverse preorder."""
    for i in range(top, 1, -1):
        w = vertex[i]
        best = i
        bw = 0
        for v in in_adj[w]:
            u = pre[v]
            if u == 0 or u == i:
                continue
            if u < i:
                c = u
            else:
                c = semi[_eval(u, i, anc, label, semi)]
            if c < best:
                best = c
                bw = v
        semi[i] = best
        wit[w] = bw


def _fresh_forest(tnum: list[int]) -> tuple[list[int], list[int], list[int]]:
    N = len(tnum) - 1
    semi = list(range(N + 1))
    label = list(range(N + 1))
    anc = list(tnum)
    return semi, label, anc


def semidominators(g: FlowGraph, info: DfsInfo) -> SemiInfo:
    vertex, tnum = _numbering(info)
    semi, label, anc = _fresh_forest(tnum)
    wit = [0] * (g.n + 1)
    _semi_pass(g.in_adj, info.pre, vertex, semi, label, anc, wit, len(vertex) - 1)
    return _semi_info(g.n, vertex, semi, wit)


def _semi_info(n: int, vertex: list[int], semi: list[int], wit: list[int]) -> SemiInfo:
    sd = [0] * (n + 1)
    for i in range(2, len(vertex)):
        sd[vertex[i]] = vertex[semi[i]]
    return SemiInfo(sd, list(wit))


def _nca_phase(semi: list[int], tnum: list[int]) -> list[int]:
    """SNCA phase (b): idom numbers from semidominators, in preorder."""
    N = len(tnum) - 1
    idom = list(tnum)
    for i in range(2, N + 1):
        s = semi[i]
        x = idom[i]
        while x > s:
            x = idom[x]
        idom[i] = x
    return idom


def _tree_from_numbers(n: int, root: int, vertex: list[int], idom: list[int]) -> DominatorTree:
    parent = [0] * (n + 1)
    for i in range(2, len(vertex)):
        parent[vertex[i]] = vertex[idom[i]]
    return DominatorTree(n, root, parent)


def snca(g: FlowGraph, root: int | None = None, restrict: Restrict = None
         ) -> tuple[DominatorTree, DfsInfo, SemiInfo]:
    root = g.s if root is None else root
    info = dfs(g, root, restrict)
    vertex, tnum = _numbering(info)
    semi, label, anc = _fresh_forest(tnum)
    wit = [0] * (g.n + 1)
    _semi_pass(g.in_adj, info.pre, vertex, semi, label, anc, wit, len(vertex) - 1)
    idom = _nca_phase(semi, tnum)
    tree = _tree_from_numbers(g.n, root, vertex, idom)
    return tree, info, _semi_info(g.n, vertex, semi, wit)


def slt(g: FlowGraph, root: int | None = None, restrict: Restrict = None) -> DominatorTree:
    root = g.s if root is None else root
    info = dfs(g, root, restrict)
    pre = info.pre
    vertex, tnum = _numbering(info)
    N = len(vertex) - 1
    semi, label, anc = _fresh_forest(tnum)
    in_adj = g.in_adj
    idom = [0] * (N + 1)
    bucket: list[list[int]] = [[] for _ in range(N + 1)]
    for i in range(N, 1, -1):
        w = vertex[i]
        best = i
        for v in in_adj[w]:
            u = pre[v]
            if u == 0 or u == i:
                continue
            if u < i:
                c = u
            else:
                c = semi[_eval(u, i, anc, label, semi)]
            if c < best:
                best = c
        semi[i] = best
        bucket[best].append(i)
        p = tnum[i]
        # i is now linked to p; resolve everything waiting on p
        for v in bucket[p]:
            y = _eval(v, p, anc, label, semi) if v > p else v
            idom[v] = y if semi[y] < semi[v] else p
        bucket[p] = []
    for i in range(2, N + 1):
        if idom[i] != semi[i]:
            idom[i] = idom[idom[i]]
    return _tree_from_numbers(g.n, root, vertex, idom)


def chk_iterative(g: FlowGraph, root: int | None = None, seed_tree: DominatorTree | None = None,
                  active: Collection[int] | None = None, restrict: Restrict = None
                  ) -> DominatorTree:
    """Cooper-Harvey-Kennedy iteration, optionally limited to ``active`` vertices.

    With ``active`` given, every other reached vertex keeps its parent from
    ``seed_tree`` (which must be correct for it); active vertices restart from
    "undefined" and are iterated to the fixpoint.
    """
    root = g.s if root is None else root
    n = g.n
    info = dfs(g, root, restrict)
    post = info.post
    idom = [0] * (n + 1)
    if active is None:
        work = info.order[1:]
    else:
        act = [False] * (n + 1)
        for v in active:
            act[v] = True
        seed = seed_tree.parent
        for v in info.order[1:]:
            if not act[v]:
                idom[v] = seed[v]
        work = [v for v in info.order[1:] if act[v]]
    idom[root] = root
    work.sort(key=post.__getitem__, reverse=True)
    in_adj = g.in_adj
    changed = True
    while changed:
        changed = False
        for v in work:
            new = 0
            for p in in_adj[v]:
                if p == v or post[p] == 0 or idom[p] == 0:
                    continue
                if new == 0:
                    new = p
                    continue
                a, b = p, new
                while a != b:
                    while post[a] < post[b]:
                        a = idom[a]
                    while post[b] < post[a]:
                        b = idom[b]
                new = a
            if idom[v] != new:
                idom[v] = new
                changed = True
    idom[root] = 0
    return DominatorTree(n, root, idom)


def dominator_sets(g: FlowGraph, root: int | None = None) -> list[set[int]]:
    """Dom(v) for every v by removal-reachability (empty when unreachable)."""
    root = g.s if root is None else root
    reach = g.reachable(root)
    verts = [v for v in range(1, g.n + 1) if reach[v]]
    sets: list[set[int]] = [set() for _ in range(g.n + 1)]
    for v in verts:
        sets[v] = {root, v}
    for w in verts:
        if w == root:
            continue
        without = g.reachable(root, banned=w)
        for v in verts:
            if not without[v]:
                sets[v].add(w)
    return sets


def tree_from_sets(n: int, root: int, sets: list[set[int]]) -> DominatorTree:
    """d(v) is the proper dominator of v that has the most dominators itself."""
    parent = [0] * (n + 1)
    for v in range(1, n + 1):
        if v != root and sets[v]:
            parent[v] = max((w for w in sets[v] if w != v), key=lambda w: len(sets[w]))
    return DominatorTree(n, root, parent)


def oracle_dominators(g: FlowGraph, root: int | None = None) -> DominatorTree:
    """Brute force: w dominates v iff v is unreachable once w is removed."""
    root = g.s if root is None else root
    return tree_from_sets(g.n, root, dominator_sets(g, root))


def is_reducible(g: FlowGraph, root: int | None = None) -> bool:
    """Acyclic after dropping every edge (v, w) where w dominates v."""
    root = g.s if root is None else root
    tree, _, _ = snca(g, root)
    n = g.n
    indeg = [0] * (n + 1)
    kept: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        if not tree.is_reachable(v):
            continue
        for w in g.out_adj[v]:
            if tree.dominates(w, v):
                continue
            kept[v].append(w)
            indeg[w] += 1
    queue = deque(v for v in range(1, n + 1) if tree.is_reachable(v) and indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in kept[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == sum(1 for v in range(1, n + 1) if tree.is_reachable(v))
