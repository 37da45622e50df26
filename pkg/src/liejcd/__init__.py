"""Exact abstract Jordan-Chevalley decomposition for Lie algebras over Q."""

from .algebra import (
    Ideal,
    LieAlgebra,
    center,
    derived_algebra,
    from_matrices,
    is_solvable,
    killing_gram,
    solvable_radical,
)
from .decompose import AbstractJordanPair, Decomposer, abstract_jordan_chevalley, verify_decomposition
from .errors import (
    InternalInvariantViolation,
    LieJCDError,
    NotClosed,
    NotInDerivedAlgebra,
    ValidationError,
)
from .levi import LeviDecomposition, levi_decomposition
from .linalg import QMatrix, Subspace, rational
from .matrix_jcd import JordanPair, is_nilpotent_matrix, is_semisimple_matrix, matrix_jordan_chevalley
from .poly import QPoly, minimal_polynomial, squarefree_part
from .reps import Representation, build_representation, check_compatibility

__version__ = "0.1.0"
