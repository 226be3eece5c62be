"""Hochschild cohomology of algebra objects in finitary monoidal categories."""
from .algebra_object import (
    AlgebraObject,
    TwoCochain,
    cd_extension_algebra,
    cell_algebra,
    check_axioms,
    deform,
    graded_group_algebra,
    inflate,
    is_separable,
    unit_algebra,
)
from .errors import HochError, ValidationError
from .exactlin import GF, QQ, field_for
from .findim_algebra import StructureAlgebra, classical_hh_dim, cyclic_group, dual_numbers, matrix_algebra
from .hochschild import build_replacement_resolution, hh0, hh1, hh2, hh_via_resolution, kunneth_check
from .monoidal_backend import BimoduleCategory, GradedCategory

__all__ = [
    "AlgebraObject", "TwoCochain", "cd_extension_algebra", "cell_algebra", "check_axioms", "deform",
    "graded_group_algebra", "inflate", "is_separable", "unit_algebra", "HochError", "ValidationError",
    "GF", "QQ", "field_for", "StructureAlgebra", "classical_hh_dim", "cyclic_group", "dual_numbers",
    "matrix_algebra", "build_replacement_resolution", "hh0", "hh1", "hh2", "hh_via_resolution",
    "kunneth_check", "BimoduleCategory", "GradedCategory",
]
