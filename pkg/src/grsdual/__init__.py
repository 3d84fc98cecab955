"""MDS self-dual codes over odd-characteristic finite fields via (extended) GRS codes."""

from .construct import (
    Theorem4Params,
    Theorem123Params,
    build_theorem1,
    build_theorem2,
    build_theorem3,
    build_theorem4,
    construct,
)
from .duality import criterion_extended, criterion_grs, verify_code, verify_self_dual
from .gf import FieldContext, FieldSpec, field_create
from .grs import CodeSpec, encode, generator_matrix

__version__ = "0.1.0"
