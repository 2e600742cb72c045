"""Differential, boomerang and algebraic tools for power maps x -> x^d over GF(2^n)."""

from .gf2n import FieldSpec, make_field
from .spectra import (
    ClassificationRecord,
    boomerang_uniformity,
    classify,
    ddt_row,
    differential_uniformity,
    is_apn,
    is_locally_apn,
    is_zero_apn,
)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "make_field", "ClassificationRecord", "boomerang_uniformity", "classify",
    "ddt_row", "differential_uniformity", "is_apn", "is_locally_apn", "is_zero_apn",
]
