"""Polynomial and rational maps whose Julia sets approximate given curves."""

from ._core import (
    AnnulusSpec,
    EscapeCertificate,
    ExteriorMap,
    JordanCurve,
    JShapesError,
    OrbitStatus,
    PreparedShape,
    ShapePolynomial,
    build_exterior_map,
    iterate,
    load_curve,
    offset_annulus,
    prepare_shape,
    render,
    run,
)

__all__ = [
    "AnnulusSpec",
    "EscapeCertificate",
    "ExteriorMap",
    "JordanCurve",
    "JShapesError",
    "OrbitStatus",
    "PreparedShape",
    "ShapePolynomial",
    "build_exterior_map",
    "iterate",
    "load_curve",
    "offset_annulus",
    "prepare_shape",
    "render",
    "run",
]
