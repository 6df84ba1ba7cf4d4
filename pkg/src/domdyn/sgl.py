"""Sreedhar-Gao-Lee dynamic dominators over a DJ-graph.

The DJ-graph splits the edges with a reachable source into d-edges (the
dominator tree edges) and j-edges (the rest). ``jout[u]`` lists the j-edge
targets of u, one entry per occurrence; for an edge (u, w) with u = d(w) the
first occurrence is the d-edge and is left out.
"""

from __future__ import annotations

from collections import Counter

from .domtree import DominatorTree
from .engine import DynamicEngine
from .static import chk_iterative


class SreedharGaoLee(DynamicEngine):
    name = "sgl"

    def __init__(self, graph):
        n = graph.n
        self.jout: list[list[int]] = [[] for _ in range(n + 1)]
        self.buckets: list[list[int]] = [[] for _ in range(n + 1)]
        self.in_a = bytearray(n + 1)
        self.walked = bytearray(n + 1)
        super().__init__(graph)

    def build(self) -> DominatorTree:
        tree = chk_iterative(self.graph, self.root)
        self.tree = tree
        for u in range(1, self.graph.n + 1):
            self._classify(u)
        return tree

    # -- DJ-graph bookkeeping -------------------------------------------

    def _classify(self, u: int) -> None:
        """Rebuild u's j-edge list from scratch."""
        t = self.tree
        if not t.is_reachable(u):
            self.jout[u] = []
            return
        parent = t.parent
        j = []
        took = set()
        for w in self.graph.out_adj[u]:
            if parent[w] == u and w not in took:
                took.add(w)
            else:
                j.append(w)
        self.jout[u] = j

    def _sync(self, u: int, w: int) -> None:
        """Fix the number of (u, w) j-occurrences after a change to u, w or d(w)."""
        t = self.tree
        j = self.jout[u]
        if not t.is_reachable(u):
            want = 0
        else:
            c = self.graph.count_edge(u, w)
            want = c - 1 if c and t.parent[w] == u else c
        have = j.count(w)
        while have > want:
            j.remove(w)
            have -= 1
        while have < want:
            j.append(w)
            have += 1

    def check_dj(self) -> bool:
        """DJ-graph agrees with the graph and the tree."""
        t = self.tree
        for u in range(1, self.graph.n + 1):
            if not t.is_reachable(u):
                if self.jout[u]:
                    return False
                continue
            want = Counter(self.graph.out_adj[u])
            for w in list(want):
                if t.parent[w] == u:
                    want[w] -= 1
            if +want != Counter(self.jout[u]):
                return False
        return True

    def d_edge_count(self) -> int:
        t = self.tree
        return sum(1 for v in range(1, self.graph.n + 1) if t.parent[v])

    # -- insertion ------------------------------------------------------

    def after_insert(self, x: int, y: int) -> None:
        t = self.tree
        if not t.is_reachable(x):
            return
        if t.is_reachable(y):
            self._insert_reachable(x, y)
        else:
            self._insert_new(x, y)
        if self.last_affected:
            t.rebuild_order()

    def _insert_reachable(self, x: int, y: int) -> None:
        t = self.tree
        self._sync(x, y)
        if x == y or y == self.root:
            return
        z = t.nca(x, y)
        if z == y or z == t.parent[y]:
            return
        affected = self._idf_search(z, y)
        old = {v: t.parent[v] for v in affected}
        t.reattach_many(affected, z)
        for v in affected:
            self._sync(old[v], v)
            self._sync(z, v)
        self.last_affected.extend(affected)
        self.stats.affected += len(affected)

    def _idf_search(self, z: int, y: int) -> list[int]:
        t = self.tree
        depth, children = t.depth, t.children
        jout = self.jout
        buckets, in_a, walked = self.buckets, self.in_a, self.walked
        dz1 = depth[z] + 1
        in_a[y] = 1
        buckets[depth[y]].append(y)
        cursor = depth[y]
        found = []
        walked_list = []
        while cursor > dz1:
            bucket = buckets[cursor]
            if not bucket:
                cursor -= 1
                continue
            v = bucket.pop()
            found.append(v)
            dv = depth[v]
            stack = [v]
            while stack:
                w = stack.pop()
                if walked[w]:
                    continue
                walked[w] = 1
                walked_list.append(w)
                for u in jout[w]:
                    du = depth[u]
                    if dz1 < du <= dv and not in_a[u]:
                        in_a[u] = 1
                        buckets[du].append(u)
                stack.extend(children[w])
        for v in found:
            in_a[v] = 0
        for w in walked_list:
            walked[w] = 0
        self.stats.scanned += len(walked_list)
        return found

    def _insert_new(self, x: int, y: int) -> None:
        """y was unreachable: hang the newly reachable region below x."""
        t = self.tree
        g = self.graph
        region = [y]
        member = {y}
        stack = [y]
        while stack:
            u = stack.pop()
            for w in g.out_adj[u]:
                if w not in member and not t.is_reachable(w):
                    member.add(w)
                    region.append(w)
                    stack.append(w)
        sub = chk_iterative(g, y, restrict=member)
        t.attach(sub.parent, y, x, region)
        self._sync(x, y)
        crossing = []
        for u in region:
            j = []
            took = set()
            for w in g.out_adj[u]:
                if w not in member:
                    crossing.append((u, w))
                elif t.parent[w] == u and w not in took:
                    took.add(w)
                else:
                    j.append(w)
            self.jout[u] = j
        self.last_affected.extend(region)
        self.stats.affected += len(region)
        # crossing edges stay out of the DJ-graph until processed
        for u, w in crossing:
            self._insert_reachable(u, w)

    # -- deletion -------------------------------------------------------

    def after_delete(self, x: int, y: int) -> None:
        t = self.tree
        if not t.is_reachable(x):
            return
        if x == y or y == self.root or self._still_reachable(y):
            self._sync(x, y)
            if x != y and y != self.root:
                self._delete_reachable(y)
        else:
            self._delete_cut(x, y)
        if self.last_affected:
            t.rebuild_order()

    def _still_reachable(self, y: int) -> bool:
        t = self.tree
        for z in self.graph.in_adj[y]:
            if t.is_reachable(z) and not t.dominates(y, z):
                return True
        return False

    def _delete_reachable(self, y: int) -> None:
        """Repair after an edge into y went away while y stays reachable."""
        t = self.tree
        depth, parent = t.depth, t.parent
        r = parent[y]
        dr = depth[r]
        out = self.graph.out_adj
        candidates = [y]
        seen = {y}
        stack = [y]
        while stack:
            w = stack.pop()
            for v in out[w]:
                if v not in seen and depth[v] > dr:
                    seen.add(v)
                    stack.append(v)
                    if parent[v] == r:
                        candidates.append(v)
        active = []
        for v in candidates:
            active.extend(t.subtree(v))
        region = t.subtree(r)
        sub = chk_iterative(self.graph, r, seed_tree=t, active=active, restrict=region)
        changes = {v: sub.parent[v] for v in active if sub.parent[v] != parent[v]}
        if not changes:
            return
        old = {v: parent[v] for v in changes}
        t.set_parents(changes, r)
        for v, p in changes.items():
            self._sync(old[v], v)
            self._sync(p, v)
        self.last_affected.extend(changes)
        self.stats.affected += len(changes)

    def _delete_cut(self, x: int, y: int) -> None:
        """y became unreachable: retire edges leaving its subtree one at a time."""
        t = self.tree
        g = self.graph
        # Replay against the graph that still has (x, y): each edge leaving
        # y's subtree is deleted while y is reachable, then (x, y) goes last.
        g.add_edge(x, y)
        sub = t.subtree(y)
        inside = set(sub)
        crossing = [(u, w) for u in sub for w in g.out_adj[u] if w not in inside]
        crossing.sort(key=lambda e: t.depth[e[1]])
        for u, w in crossing:
            g.remove_edge(u, w)
            self._sync(u, w)
            if not t.dominates(w, u):
                self._delete_reachable(w)
                t.rebuild_order()
        g.remove_edge(x, y)
        removed = t.detach(y)
        for u in removed:
            self.jout[u] = []
        self._sync(x, y)
        for u, w in crossing:
            g.add_edge(u, w)
        self.last_affected.extend(removed)
        self.stats.affected += len(removed)
