"""Discrete no-k-equal configuration spaces on graphs and their
subdivision-invariance machinery."""

from .complex import ComplexView, enumerate_dconf, is_dconf_cell
from .errors import CellBudgetExceeded, GraphError, InsufficientSubdivision, InvariantViolation, ParameterError
from .graph import Graph, check_sufficiently_subdivided, primitive_graph
from .homology import betti_numbers, boundary_matrix
from .kernels import BACKEND
from .morse import build_matching, morse_betti, rank, verify_acyclic, verify_critical_subcomplex
from .subdivision import build_Y, deflate, inflate, is_external, locate_H, subdivide_edge

__all__ = [
    "BACKEND",
    "CellBudgetExceeded",
    "ComplexView",
    "Graph",
    "GraphError",
    "InsufficientSubdivision",
    "InvariantViolation",
    "ParameterError",
    "betti_numbers",
    "boundary_matrix",
    "build_Y",
    "build_matching",
    "check_sufficiently_subdivided",
    "deflate",
    "enumerate_dconf",
    "inflate",
    "is_dconf_cell",
    "is_external",
    "locate_H",
    "morse_betti",
    "primitive_graph",
    "rank",
    "subdivide_edge",
    "verify_acyclic",
    "verify_critical_subcomplex",
]
