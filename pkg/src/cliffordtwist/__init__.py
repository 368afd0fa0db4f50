"""Exact Clifford algebras as cocycle-twisted group algebras of Z2^n over Q(i)."""

from .clifford import CliffordAlgebra
from .periodicity import classify, ordinary_tensor, super_tensor
from .process import clifford_spec, iterate_from_field, process_once, rep_extend
from .scalars import I, ONE, ZERO, GaussianRational, parse_scalar, format_scalar
from .twisted import (
    Cochain,
    Multivector,
    Signature,
    TableCochain,
    TwistedAlgebra,
    braiding_R,
    clifford_cochain,
    coboundary3,
    is_cocycle,
)

__version__ = "0.1.0"

__all__ = [
    "CliffordAlgebra",
    "Cochain",
    "GaussianRational",
    "I",
    "Multivector",
    "ONE",
    "Signature",
    "TableCochain",
    "TwistedAlgebra",
    "ZERO",
    "braiding_R",
    "classify",
    "clifford_cochain",
    "clifford_spec",
    "coboundary3",
    "format_scalar",
    "is_cocycle",
    "iterate_from_field",
    "ordinary_tensor",
    "parse_scalar",
    "process_once",
    "rep_extend",
    "super_tensor",
]
