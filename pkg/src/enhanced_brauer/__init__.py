"""Enhanced Brauer algebras realized on tensor space, with exact checks of
their Schur-Weyl type dualities for orthogonal and symplectic groups."""

__version__ = "0.1.0"

from .exact_linalg import (
    DimensionMismatchError, OperatorSubspace, SparseOperator, contains, echelonize, equal, nullspace, rank,
)
from .diagrams import (
    BrauerDiagram, NormalizedDiagram, Permutation, build, compose, enumerate_all, enumerate_normalized, factorize,
)
from .forms import FormSpec, GroupSpec, InvalidDimensionError, make_group, make_orthogonal, make_symplectic
from .tensor_ops import TensorSpace
from .algebra import (
    AlgebraHandle, span_B_IJ, span_B_st, span_enhanced, span_enhanced_level, span_plain_brauer,
)
from .duality import ConstraintSet, build_constraints, commutant, hom_space
from .reports import Report

__all__ = [
    "AlgebraHandle", "BrauerDiagram", "ConstraintSet", "DimensionMismatchError", "FormSpec", "GroupSpec",
    "InvalidDimensionError", "NormalizedDiagram", "OperatorSubspace", "Permutation", "Report", "SparseOperator",
    "TensorSpace", "build", "build_constraints", "commutant", "compose", "contains", "echelonize", "enumerate_all",
    "enumerate_normalized", "equal", "factorize", "hom_space", "make_group", "make_orthogonal", "make_symplectic",
    "nullspace", "rank", "span_B_IJ", "span_B_st", "span_enhanced", "span_enhanced_level", "span_plain_brauer",
]
