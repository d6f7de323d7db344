from .roots import (
    GradingSpec,
    RootSystem,
    build_root_system,
    fundamental_cocharacter,
    grading,
)
from .homogeneous import (
    HomogeneousSpace,
    LieActionResult,
    build_action,
    enumerate_fixed_points,
    grassmannian_action,
    grassmannian_model,
    grassmannian_reference,
    homogeneous_dim,
)
from .catalog import Catalog, catalog, verify_row

__all__ = [
    "Catalog",
    "GradingSpec",
    "HomogeneousSpace",
    "LieActionResult",
    "RootSystem",
    "build_action",
    "build_root_system",
    "catalog",
    "enumerate_fixed_points",
    "fundamental_cocharacter",
    "grading",
    "grassmannian_action",
    "grassmannian_model",
    "grassmannian_reference",
    "homogeneous_dim",
    "verify_row",
]
