"""Ordered subgraph isomorphism and maximum common ordered subgraph solvers."""

from .core import (MCOIS, MCOS, CommonSolution, GraphError, GuardExceeded, OrderPreservingMap,
                   OrderedGraph, PreconditionFailed, VerifyReport, complement, induced_subgraph,
                   is_ordered_subgraph_iso, verify_common_solution)
from .orderings import (NicePathDecomposition, OrderingKind, classify_inclusion,
                        nice_decomposition_from_ordering, ordering_pathwidth, verify_ordering)

__all__ = [
    "MCOIS", "MCOS", "CommonSolution", "GraphError", "GuardExceeded", "OrderPreservingMap",
    "OrderedGraph", "PreconditionFailed", "VerifyReport", "complement", "induced_subgraph",
    "is_ordered_subgraph_iso", "verify_common_solution", "NicePathDecomposition", "OrderingKind",
    "classify_inclusion", "nice_decomposition_from_ordering", "ordering_pathwidth",
    "verify_ordering",
]
