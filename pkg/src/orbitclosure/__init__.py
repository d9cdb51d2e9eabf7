"""Exact verification of Lie algebra orbit closures for h3 and g2 + a1."""

from .exactfield import GF, QQ, FieldMismatchError, PrimeField, RationalField, Scalar
from .polyring import MultiPoly, VarTable
from .structconst import SquareMatrix, StructureVector, act, is_lie, orbit

__all__ = [
    "GF",
    "QQ",
    "FieldMismatchError",
    "MultiPoly",
    "PrimeField",
    "RationalField",
    "Scalar",
    "SquareMatrix",
    "StructureVector",
    "VarTable",
    "act",
    "is_lie",
    "orbit",
]
