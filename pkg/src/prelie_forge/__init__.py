"""Exact-arithmetic workbench for pre-Lie bialgebras and Nijenhuis structures."""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import ForgeError
from .scalars import EMPTY_RING, ParamRing, Poly, Scalar, parse_scalar
from .structures import (
    AlgebraStructure,
    BilinearForm,
    Bundle,
    CoalgebraStructure,
    Corepresentation,
    LinearOperator,
    ProductBundle,
    Representation,
    TensorElement,
    comul_apply,
    flip,
    mul_apply,
)
from .fixtures import fixture, fixture_names
from .laws import LAW_IDS, Residual, check, check_composite

__version__ = "0.1.0"

__all__ = [
    "AlgebraStructure",
    "BilinearForm",
    "Bundle",
    "CoalgebraStructure",
    "Corepresentation",
    "EMPTY_RING",
    "ForgeError",
    "KERNEL_BACKEND",
    "LAW_IDS",
    "LinearOperator",
    "ParamRing",
    "Poly",
    "ProductBundle",
    "Representation",
    "Residual",
    "Scalar",
    "TensorElement",
    "check",
    "check_composite",
    "comul_apply",
    "fixture",
    "fixture_names",
    "flip",
    "mul_apply",
    "parse_scalar",
    "__version__",
]
