"""Common surface of the dynamic dominator engines."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .domtree import DominatorTree
from .graph import FlowGraph
from .static import slt


@dataclass
class EngineStats:
    insertions: int = 0
    deletions: int = 0
    affected: int = 0
    scanned: int = 0
    full_rebuilds: int = 0
    partial_runs: int = 0
    # deletions dismissed by the t/g witness test
    test_skips: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


class DynamicEngine:
    """Maintains ``self.tree`` as the dominator tree of ``self.graph``.

    :meth:`insert_edge` / :meth:`delete_edge` mutate the graph and then repair
    the tree. Subclasses implement :meth:`after_insert` / :meth:`after_delete`,
    which expect the graph to already contain (resp. lack) the edge.
    """

    name = "base"

    def __init__(self, graph: FlowGraph):
        self.graph = graph
        self.root = graph.s
        self.stats = EngineStats()
        # vertices whose parent changed in the last update (when known)
        self.last_affected: list[int] = []
        # True iff the last deletion was dismissed by the witness test
        self.last_test_skip = False
        self.tree: DominatorTree = self.build()

    def build(self) -> DominatorTree:
        raise NotImplementedError

    def insert_edge(self, x: int, y: int) -> None:
        self.graph.add_edge(x, y)
        self.stats.insertions += 1
        self.last_affected = []
        self.last_test_skip = False
        self.after_insert(x, y)

    def delete_edge(self, x: int, y: int) -> None:
        self.graph.remove_edge(x, y)
        self.stats.deletions += 1
        self.last_affected = []
        self.last_test_skip = False
        self.after_delete(x, y)

    def after_insert(self, x: int, y: int) -> None:
        raise NotImplementedError

    def after_delete(self, x: int, y: int) -> None:
        raise NotImplementedError

    def dominates(self, u: int, v: int) -> bool:
        return self.tree.dominates(u, v)

    def idom(self, v: int) -> int | None:
        return self.tree.idom(v)

    def parents(self) -> list[int]:
        return self.tree.parents()

    def _record_diff(self, old: list[int]) -> None:
        new = self.tree.parent
        diff = [v for v in range(1, len(new)) if new[v] != old[v]]
        self.last_affected = diff
        self.stats.affected += len(diff)


class RecomputeSLT(DynamicEngine):
    """Baseline: rerun simple Lengauer-Tarjan after each update whose source is reachable."""

    name = "slt"

    def build(self) -> DominatorTree:
        return slt(self.graph, self.root)

    def _update(self, x: int) -> None:
        if not self.tree.is_reachable(x):
            return
        old = self.tree.parent
        self.tree = slt(self.graph, self.root)
        self.stats.full_rebuilds += 1
        self._record_diff(old)

    def after_insert(self, x: int, y: int) -> None:
        self._update(x)

    def after_delete(self, x: int, y: int) -> None:
        self._update(x)
