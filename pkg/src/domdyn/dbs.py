"""Depth-based search (DBS) for dynamic dominators.

Insertions locate affected vertices with a bucket-driven search over depths
in the dominator tree; every affected vertex is re-parented to the nearest
common ancestor of the inserted edge's endpoints. Deletions rerun SNCA on the
dominator subtree that can change, after the t/g witness test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domtree import DominatorTree
from .engine import DynamicEngine
from .static import snca


@dataclass
class InsertTrace:
    """What one bucket search did; used to check the search invariants."""

    z_depth: int
    levels: list[int] = field(default_factory=list)
    # (vertex, depth at scan time, affected level at scan time)
    scans: list[tuple[int, int, int]] = field(default_factory=list)
    rescans: int = 0
    affected: list[int] = field(default_factory=list)


class DepthBasedSearch(DynamicEngine):
    name = "dbs"

    def __init__(self, graph, trace: bool = False):
        n = graph.n
        self.buckets: list[list[int]] = [[] for _ in range(n + 1)]
        self.affected_mark = bytearray(n + 1)
        self.scanned_mark = bytearray(n + 1)
        self.traces: list[InsertTrace] | None = [] if trace else None
        self.tpar = [0] * (n + 1)
        self.wit = [0] * (n + 1)
        self.valid = bytearray(n + 1)
        super().__init__(graph)

    def build(self) -> DominatorTree:
        tree, info, semi = snca(self.graph, self.root)
        self._store_witnesses(range(1, self.graph.n + 1), info, semi)
        return tree

    def _store_witnesses(self, verts, info, semi) -> None:
        pre = info.pre
        for v in verts:
            if pre[v] and v != info.root:
                self.tpar[v] = info.parent[v]
                self.wit[v] = semi.g[v]
                self.valid[v] = 1
            else:
                self.valid[v] = 0

    def _rebuild(self) -> None:
        self.tree = self.build()
        self.stats.full_rebuilds += 1

    # -- insertion ------------------------------------------------------

    def after_insert(self, x: int, y: int) -> None:
        t = self.tree
        if x == y or not t.is_reachable(x):
            return
        if not t.is_reachable(y):
            old = t.parent
            self._rebuild()
            self._record_diff(old)
            return
        if y == self.root:
            return
        z = t.nca(x, y)
        if z == y or z == t.parent[y]:
            return
        affected = self._search(z, y)
        t.reattach_many(affected, z)
        for v in affected:
            self.valid[v] = 0
        t.rebuild_order()
        self.last_affected = sorted(affected)
        self.stats.affected += len(affected)

    def _search(self, z: int, y: int) -> list[int]:
        t = self.tree
        depth = t.depth
        out = self.graph.out_adj
        buckets = self.buckets
        affected_mark = self.affected_mark
        scanned_mark = self.scanned_mark
        dz1 = depth[z] + 1
        tr = InsertTrace(depth[z]) if self.traces is not None else None

        affected = [y]
        affected_mark[y] = 1
        buckets[depth[y]].append(y)
        cursor = depth[y]
        scanned = []
        while cursor > dz1:
            bucket = buckets[cursor]
            if not bucket:
                cursor -= 1
                continue
            v = bucket.pop()
            level = cursor
            if tr is not None:
                tr.levels.append(level)
                if scanned_mark[v]:
                    tr.rescans += 1
            scanned_mark[v] = 1
            scanned.append(v)
            stack = [v]
            while stack:
                u = stack.pop()
                if tr is not None:
                    tr.scans.append((u, depth[u], level))
                for w in out[u]:
                    dw = depth[w]
                    if dw > level:
                        if not scanned_mark[w]:
                            scanned_mark[w] = 1
                            scanned.append(w)
                            stack.append(w)
                    elif dw > dz1 and not affected_mark[w]:
                        affected_mark[w] = 1
                        buckets[dw].append(w)
                        affected.append(w)

        for v in scanned:
            scanned_mark[v] = 0
        for v in affected:
            affected_mark[v] = 0
        self.stats.scanned += len(scanned)
        if tr is not None:
            tr.affected = list(affected)
            self.traces.append(tr)
        return affected

    def check_clean(self) -> bool:
        """Search scratch state is empty between updates."""
        return (not any(self.affected_mark) and not any(self.scanned_mark)
                and not any(self.buckets))

    # -- deletion -------------------------------------------------------

    def after_delete(self, x: int, y: int) -> None:
        t = self.tree
        if x == y or y == self.root or not t.is_reachable(x):
            return
        if self._still_reachable(y):
            if self.valid[y] and x != self.tpar[y] and x != self.wit[y]:
                self.stats.test_skips += 1
                self.last_test_skip = True
                return
            self._recompute_below(t.parent[y])
        else:
            pivot = self._pivot(y)
            if pivot is None:
                removed = t.detach(y)
                for v in removed:
                    self.valid[v] = 0
                t.rebuild_order()
                self.last_affected = sorted(removed)
                self.stats.affected += len(removed)
            else:
                self._recompute_below(t.parent[pivot])

    def _still_reachable(self, y: int) -> bool:
        # support(z, y) != y  <=>  y is not an ancestor of z
        t = self.tree
        for z in self.graph.in_adj[y]:
            if t.is_reachable(z) and not t.dominates(y, z):
                return True
        return False

    def _pivot(self, y: int) -> int | None:
        """Shallowest vertex entered from y's region that does not dominate y."""
        t = self.tree
        depth = t.depth
        out = self.graph.out_adj
        dy = depth[y]
        seen = {y}
        stack = [y]
        best = None
        while stack:
            w = stack.pop()
            for v in out[w]:
                dv = depth[v]
                if dv <= dy and not t.dominates(v, y):
                    if best is None or dv < depth[best]:
                        best = v
                if dv >= dy and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return best

    def _recompute_below(self, r: int) -> None:
        t = self.tree
        region = t.subtree(r)
        sub, info, semi = snca(self.graph, r, restrict=region)
        changes = {}
        affected = []
        for v in region:
            if v == r:
                continue
            p = sub.parent[v]
            changes[v] = p
            if p != t.parent[v]:
                affected.append(v)
        t.set_parents(changes, r)
        self._store_witnesses((v for v in region if v != r), info, semi)
        t.rebuild_order()
        self.stats.partial_runs += 1
        self.last_affected = sorted(affected)
        self.stats.affected += len(affected)
