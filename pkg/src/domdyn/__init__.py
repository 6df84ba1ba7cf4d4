"""Dominator trees of flow graphs under edge insertions and deletions."""

from .dbs import DepthBasedSearch
from .domtree import DominatorTree, TreeError, verify_parent_property, verify_sibling_property
from .dsnca import DynamicSNCA
from .engine import DynamicEngine, EngineStats, RecomputeSLT
from .graph import FlowGraph, GraphError, OpKind, UpdateOp, UpdateSequence
from .sgl import SreedharGaoLee
from .static import chk_iterative, dfs, is_reducible, oracle_dominators, slt, snca

__all__ = [
    "DepthBasedSearch", "DominatorTree", "DynamicEngine", "DynamicSNCA", "EngineStats",
    "FlowGraph", "GraphError", "OpKind", "RecomputeSLT", "SreedharGaoLee", "TreeError",
    "UpdateOp", "UpdateSequence", "chk_iterative", "dfs", "is_reducible",
    "oracle_dominators", "slt", "snca", "verify_parent_property", "verify_sibling_property",
]
