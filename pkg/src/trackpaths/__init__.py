"""Kernelization for Tracking Paths: reduction rules, quadratic-kernel NO-rules and an exact oracle."""

from .graph import (Graph, GraphError, Instance, edge_on_st_path, forest_decompose,
                    fvs_2approx, has_local_linkage, max_vertex_disjoint_paths,
                    vertex_on_st_path)
from .kernel import KernelOutcome, NoReason, Verdict, kernelize
from .oracle import (enumerate_st_paths, is_tracking_set, min_fvs_exact,
                     min_tracking_set, project_sequence)
from .reduction import ReductionTrace, RuleEvent, exhaust_local_rules

__all__ = [
    "Graph", "GraphError", "Instance", "KernelOutcome", "NoReason", "ReductionTrace",
    "RuleEvent", "Verdict", "edge_on_st_path", "enumerate_st_paths", "exhaust_local_rules",
    "forest_decompose", "fvs_2approx", "has_local_linkage", "is_tracking_set", "kernelize",
    "max_vertex_disjoint_paths", "min_fvs_exact", "min_tracking_set", "project_sequence",
    "vertex_on_st_path",
]
