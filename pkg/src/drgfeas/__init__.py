"""Feasibility checks and exhaustive enumeration for distance-regular graph intersection arrays."""

from .catalog import Catalog, CatalogRecord, default_catalog
from .core import (
    ArrayParameters,
    ArrayValidationError,
    IntersectionArray,
    derive_parameters,
    format_array,
    parse_array,
)
from .enumeration import Constraints, EnumerationResult, enumerate_arrays, preset
from .feasibility import CHECK_IDS, CheckResult, FeasibilityReport, Profile, run_pipeline
from .spectral import Spectrum, count_above, eigenvalues, krein, multiplicity, theta_min_at_most

__all__ = [
    "ArrayParameters",
    "ArrayValidationError",
    "CHECK_IDS",
    "Catalog",
    "CatalogRecord",
    "CheckResult",
    "Constraints",
    "EnumerationResult",
    "FeasibilityReport",
    "IntersectionArray",
    "Profile",
    "Spectrum",
    "count_above",
    "default_catalog",
    "derive_parameters",
    "eigenvalues",
    "enumerate_arrays",
    "format_array",
    "krein",
    "multiplicity",
    "parse_array",
    "preset",
    "run_pipeline",
    "theta_min_at_most",
]
