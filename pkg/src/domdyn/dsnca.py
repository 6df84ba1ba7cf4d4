"""Dynamic SNCA: partial semidominator recomputation per edge update."""

from __future__ import annotations

from .domtree import DominatorTree
from .engine import DynamicEngine
from .static import (
    _fresh_forest,
    _nca_phase,
    _numbering,
    _semi_info,
    _semi_pass,
    _tree_from_numbers,
    dfs,
)


class DynamicSNCA(DynamicEngine):
    """Keeps the DFS numbering and semidominators of the last SNCA pass.

    Insertions reuse the DFS tree unless the new edge would go from an
    earlier-finished subtree into a later one (or reaches a new vertex).
    Deletions are dismissed outright unless the source is the DFS parent or
    the semidominator witness of the target.
    """

    name = "dsnca"

    def build(self) -> DominatorTree:
        return self._scratch()

    def _scratch(self) -> DominatorTree:
        g = self.graph
        info = dfs(g, self.root)
        self.info = info
        self.vertex, self.tnum = _numbering(info)
        semi, label, anc = _fresh_forest(self.tnum)
        self.wit = [0] * (g.n + 1)
        _semi_pass(g.in_adj, info.pre, self.vertex, semi, label, anc, self.wit,
                   len(self.vertex) - 1)
        self.semi = semi
        self.valid = [info.pre[v] != 0 for v in range(g.n + 1)]
        self.tree = self._nca()
        return self.tree

    def _nca(self) -> DominatorTree:
        idom = _nca_phase(self.semi, self.tnum)
        return _tree_from_numbers(self.graph.n, self.root, self.vertex, idom)

    def _partial(self, top: int) -> None:
        """Redo path-minima for numbers 2..top, then the whole NCA phase."""
        semi = self.semi
        for i in range(1, top + 1):
            semi[i] = i
        label = list(range(len(semi)))
        anc = list(self.tnum)
        _semi_pass(self.graph.in_adj, self.info.pre, self.vertex, semi, label, anc,
                   self.wit, top)
        self.tree = self._nca()

    @property
    def semi_info(self):
        return _semi_info(self.graph.n, self.vertex, self.semi, self.wit)

    def after_insert(self, x: int, y: int) -> None:
        pre, post = self.info.pre, self.info.post
        if pre[x] == 0 or x == y or y == self.root:
            return
        old = self.tree.parent
        if pre[y] == 0 or (pre[x] < pre[y] and post[x] < post[y]):
            self._scratch()
            self.stats.full_rebuilds += 1
        else:
            self._partial(pre[y])
            self.stats.partial_runs += 1
        self._record_diff(old)

    def after_delete(self, x: int, y: int) -> None:
        pre = self.info.pre
        if pre[x] == 0 or x == y or y == self.root:
            return
        old = self.tree.parent
        if not self.valid[y] or x == self.info.parent[y]:
            self._scratch()
            self.stats.full_rebuilds += 1
        elif x == self.wit[y]:
            self._partial(pre[y])
            self.stats.partial_runs += 1
        else:
            self.stats.test_skips += 1
            self.last_test_skip = True
            return
        self._record_diff(old)
