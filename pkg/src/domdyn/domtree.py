"""Dominator tree with depths, preorder intervals and certification."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import FlowGraph


class TreeError(ValueError):
    """Raised when a tree operation's precondition does not hold."""


class DominatorTree:
    """Rooted tree over vertices ``1..n`` stored as a parent array.

    ``parent[v] == 0`` means v is not in the tree (unreachable), except for
    the root itself. ``depth`` is -1 outside the tree. ``pre``/``size`` give
    the preorder interval used by :meth:`dominates`; they are refreshed by
    :meth:`rebuild_order` and go stale after :meth:`reattach` until then.
    """

    def __init__(self, n: int, root: int, parent: Sequence[int] | None = None):
        self.n = n
        self.root = root
        self.parent = [0] * (n + 1) if parent is None else list(parent)
        self.parent[root] = 0
        self.children: list[list[int]] = [[] for _ in range(n + 1)]
        for v in range(1, n + 1):
            p = self.parent[v]
            if p:
                self.children[p].append(v)
        self.depth = [-1] * (n + 1)
        self.pre = [0] * (n + 1)
        self.size = [0] * (n + 1)
        self._fix_depths(root, 0)
        self.rebuild_order()

    @classmethod
    def single(cls, n: int, root: int) -> DominatorTree:
        return cls(n, root)

    def copy(self) -> DominatorTree:
        t = DominatorTree.__new__(DominatorTree)
        t.n, t.root = self.n, self.root
        t.parent = list(self.parent)
        t.children = [list(c) for c in self.children]
        t.depth = list(self.depth)
        t.pre = list(self.pre)
        t.size = list(self.size)
        return t

    def is_reachable(self, v: int) -> bool:
        return v == self.root or self.parent[v] != 0

    def idom(self, v: int) -> int | None:
        return self.parent[v] or None

    def vertices(self) -> list[int]:
        """Tree vertices in the preorder that numbers ``pre``."""
        out = []
        stack = [self.root]
        children = self.children
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(children[v])
        return out

    def subtree(self, v: int) -> list[int]:
        out = []
        stack = [v]
        children = self.children
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(children[u])
        return out

    # -- queries --------------------------------------------------------

    def nca(self, u: int, v: int) -> int:
        if not (self.is_reachable(u) and self.is_reachable(v)):
            raise TreeError(f"nca({u}, {v}) on an unreachable vertex")
        depth, parent = self.depth, self.parent
        while depth[u] > depth[v]:
            u = parent[u]
        while depth[v] > depth[u]:
            v = parent[v]
        while u != v:
            u = parent[u]
            v = parent[v]
        return u

    def dominates(self, u: int, v: int) -> bool:
        pu, pv = self.pre[u], self.pre[v]
        return pu != 0 and pv != 0 and pu <= pv < pu + self.size[u]

    def support(self, v: int, w: int) -> int:
        """For edge (v, w): d(w) if v is d(w), else the child of d(w) above v."""
        p = self.parent[w]
        if p == 0 or not self.is_reachable(v):
            raise TreeError(f"support({v}, {w}): endpoint outside the tree")
        if v == p:
            return p
        depth, parent = self.depth, self.parent
        target = depth[p] + 1
        if depth[v] < target:
            raise TreeError(f"support({v}, {w}): {v} is not below d({w})={p}")
        while depth[v] > target:
            v = parent[v]
        if parent[v] != p:
            raise TreeError(f"support: parent property violated at edge into {w}")
        return v

    # -- mutation -------------------------------------------------------

    def _fix_depths(self, v: int, d: int) -> None:
        depth, children = self.depth, self.children
        depth[v] = d
        stack = [v]
        while stack:
            u = stack.pop()
            du = depth[u] + 1
            for c in children[u]:
                depth[c] = du
                stack.append(c)

    def rebuild_order(self) -> None:
        pre = self.pre
        size = self.size
        for v in range(self.n + 1):
            pre[v] = 0
            size[v] = 0
        children = self.children
        order = []
        stack = [self.root]
        k = 0
        while stack:
            v = stack.pop()
            k += 1
            pre[v] = k
            order.append(v)
            stack.extend(children[v])
        parent = self.parent
        for v in reversed(order):
            size[v] += 1
            p = parent[v]
            if p:
                size[p] += size[v]

    def reattach(self, v: int, new_parent: int) -> None:
        """Move v (with its subtree) under ``new_parent``; depths refreshed."""
        if not (self.is_reachable(v) and self.is_reachable(new_parent)) or v == self.root:
            raise TreeError(f"reattach({v}, {new_parent}): vertex outside the tree")
        u = new_parent
        while u:
            if u == v:
                raise TreeError(f"reattach({v}, {new_parent}) would create a cycle")
            u = self.parent[u]
        old = self.parent[v]
        if old == new_parent:
            return
        self.children[old].remove(v)
        self.children[new_parent].append(v)
        self.parent[v] = new_parent
        self._fix_depths(v, self.depth[new_parent] + 1)

    def reattach_many(self, vertices: Iterable[int], new_parent: int) -> None:
        """Make every vertex in ``vertices`` a child of ``new_parent``.

        The vertices must not be ancestors of ``new_parent``.
        """
        vertices = list(vertices)
        children, parent = self.children, self.parent
        for v in vertices:
            old = parent[v]
            if old == new_parent:
                continue
            children[old].remove(v)
            children[new_parent].append(v)
            parent[v] = new_parent
        d = self.depth[new_parent] + 1
        for v in vertices:
            self._fix_depths(v, d)

    def set_parents(self, changes: dict[int, int], depth_root: int) -> None:
        """Apply ``{v: new_parent}`` (0 detaches) inside the subtree of ``depth_root``."""
        children, parent, depth = self.children, self.parent, self.depth
        for v, p in changes.items():
            old = parent[v]
            if old == p:
                continue
            if old:
                children[old].remove(v)
            if p:
                children[p].append(v)
            parent[v] = p
        for v, p in changes.items():
            if p == 0:
                depth[v] = -1
        self._fix_depths(depth_root, depth[depth_root])

    def detach(self, v: int) -> list[int]:
        """Drop v's subtree from the tree; returns the removed vertices."""
        removed = self.subtree(v)
        p = self.parent[v]
        if p:
            self.children[p].remove(v)
        for u in removed:
            self.parent[u] = 0
            self.children[u] = []
            self.depth[u] = -1
            self.pre[u] = 0
            self.size[u] = 0
        return removed

    def attach(self, sub_parent: Sequence[int], sub_root: int, parent: int,
               members: Iterable[int]) -> None:
        """Hang a tree over currently-detached ``members`` below ``parent``."""
        for v in members:
            if v != sub_root:
                p = sub_parent[v]
                self.parent[v] = p
                if p:
                    self.children[p].append(v)
        self.parent[sub_root] = parent
        self.children[parent].append(sub_root)
        self._fix_depths(sub_root, self.depth[parent] + 1)

    # -- output ---------------------------------------------------------

    def parents(self) -> list[int]:
        return list(self.parent)

    def dump(self) -> str:
        return "".join(f"{v} {self.parent[v]}\n" for v in range(1, self.n + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DominatorTree):
            return NotImplemented
        return self.root == other.root and self.parent == other.parent

    def __repr__(self) -> str:
        return f"DominatorTree(root={self.root}, parent={self.parent[1:]})"


def nca(t: DominatorTree, u: int, v: int) -> int:
    return t.nca(u, v)


def dominates(t: DominatorTree, u: int, v: int) -> bool:
    return t.dominates(u, v)


def support(t: DominatorTree, v: int, w: int) -> int:
    return t.support(v, w)


def parse_tree_dump(text: str) -> list[int]:
    """Inverse of :meth:`DominatorTree.dump`: returns a parent array."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    parent = [0] * (len(rows) + 1)
    for v, p in rows:
        parent[int(v)] = int(p)
    return parent


# -- certification ------------------------------------------------------

def _tree_intervals(t: DominatorTree) -> tuple[list[int], list[int]] | None:
    """Preorder intervals recomputed from the parent array alone.

    Returns None if the parent array is not a tree hanging off the root.
    """
    n = t.n
    kids: list[list[int]] = [[] for _ in range(n + 1)]
    for v in range(1, n + 1):
        p = t.parent[v]
        if p:
            if not 1 <= p <= n or v == t.root:
                return None
            kids[p].append(v)
    pre = [0] * (n + 1)
    last = [0] * (n + 1)
    k = 0
    stack = [(t.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            last[v] = k
            continue
        if pre[v]:
            return None
        k += 1
        pre[v] = k
        stack.append((v, True))
        stack.extend((c, False) for c in kids[v])
    for v in range(1, n + 1):
        if t.parent[v] and not pre[v]:
            return None  # cycle detached from the root
    return pre, last


def verify_parent_property(g: FlowGraph, t: DominatorTree) -> bool:
    """Every edge (v, w) with v reachable has v below d(w); tree spans exactly the reachable set."""
    iv = _tree_intervals(t)
    if iv is None:
        return False
    pre, last = iv
    reach = g.reachable(t.root)
    for v in range(1, g.n + 1):
        if reach[v] != (pre[v] != 0):
            return False
    for v in range(1, g.n + 1):
        if not reach[v]:
            continue
        for w in g.out_adj[v]:
            if w == t.root:
                continue
            p = t.parent[w]
            if not (pre[p] <= pre[v] <= last[p]):
                return False
    return True


def verify_sibling_property(g: FlowGraph, t: DominatorTree) -> bool:
    """No tree vertex dominates one of its siblings (checked by removal-reachability)."""
    kids: list[list[int]] = [[] for _ in range(t.n + 1)]
    for v in range(1, t.n + 1):
        if t.parent[v]:
            kids[t.parent[v]].append(v)
    for group in kids:
        if len(group) < 2:
            continue
        for v in group:
            reach = g.reachable(t.root, banned=v)
            for w in group:
                if w != v and not reach[w]:
                    return False
    return True
