"""Exact-arithmetic toolkit for diagram categories of free quantum groups
and truncated certification of topological-generation statements."""

from .diagrams import (
    Diagram,
    DiagramFamily,
    catalan,
    enumerate_diagrams,
    gram_matrix,
    is_matched,
    is_noncrossing,
    loop_count,
)
from .elimination import active_backend
from .exact_linalg import (
    SubspaceBasis,
    contains,
    dim_intersection,
    dim_span,
    intersection_basis,
    iterated_intersection_dim,
    rank,
    subspace_leq,
)
from .fixed_spaces import GroupFamily, GroupSpec, fixed_space, lie_kernel_oracle
from .gencheck import (
    GenerationReport,
    GenerationTask,
    WordFilter,
    run_generation_check,
    run_paper_suite,
)
from .realize import (
    SlotAssignment,
    SparseTensor,
    TorusKind,
    coordinate_tensor,
    insertion_psi,
    realize_diagram,
    torus_fixed_basis,
)
from .words import Color, ColoredWord, conjugate_word, parse_word, uncolored_word

__version__ = "0.1.0"

__all__ = [
    "Color",
    "ColoredWord",
    "Diagram",
    "DiagramFamily",
    "GenerationReport",
    "GenerationTask",
    "GroupFamily",
    "GroupSpec",
    "SlotAssignment",
    "SparseTensor",
    "SubspaceBasis",
    "TorusKind",
    "WordFilter",
    "active_backend",
    "catalan",
    "contains",
    "conjugate_word",
    "coordinate_tensor",
    "dim_intersection",
    "dim_span",
    "enumerate_diagrams",
    "fixed_space",
    "gram_matrix",
    "insertion_psi",
    "intersection_basis",
    "is_matched",
    "is_noncrossing",
    "iterated_intersection_dim",
    "lie_kernel_oracle",
    "loop_count",
    "parse_word",
    "rank",
    "realize_diagram",
    "run_generation_check",
    "run_paper_suite",
    "subspace_leq",
    "torus_fixed_basis",
    "uncolored_word",
]
