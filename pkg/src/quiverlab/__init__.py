"""Moment map flatness, local slices, reflections and Hilbert series for quivers."""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import CapacityError, InadmissibleTypeError, IntegrityError, QuiverlabError, ValidationError
from .flatness import (FlatnessReport, equality_decompositions, equality_types, expected_dimension,
                       flatness_certificate, is_generic, is_indivisible, sigma_condition)
from .quiver import (FRAMING_LABEL, ParamPair, Quiver, build_quiver, cartan_matrix, cartan_pairing,
                     frame, p_fn, quiver_from_matrix, support_components)
from .reflections import reflect_at, reflection_admissibility, reflection_orbit
from .slices import p_identity_sides, parse_rep_type, slice_quiver, validate_rep_type
from .type_a import TypeAQuiver, WalgParams, flat_type_a, walg_dims, walg_flat, walg_identity_checks

__all__ = [
    "CapacityError", "FRAMING_LABEL", "FlatnessReport", "InadmissibleTypeError", "IntegrityError",
    "ParamPair", "Quiver", "QuiverlabError", "TypeAQuiver", "ValidationError", "WalgParams",
    "build_quiver", "cartan_matrix", "cartan_pairing", "equality_decompositions", "equality_types",
    "expected_dimension", "flat_type_a", "flatness_certificate", "frame", "is_generic",
    "is_indivisible", "p_fn", "p_identity_sides", "parse_rep_type", "quiver_from_matrix",
    "reflect_at", "reflection_admissibility", "reflection_orbit", "sigma_condition",
    "slice_quiver", "support_components", "validate_rep_type", "walg_dims", "walg_flat",
    "walg_identity_checks",
]
