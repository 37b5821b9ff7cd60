"""Exact tools for words coding exchanges of three intervals and their amicable Sturmian pairs."""

from .amicability import (
    is_amicable,
    is_amicable_morphisms,
    ternarization_fixed_point,
    ternarize_morphisms,
    ternarize_prefix,
    ternarize_words,
)
from .certify import (
    Certificate,
    Decomposition,
    cross_check,
    decompose,
    infer_epsilon,
    invariance_3iet_check,
    matrix_necessary_check,
    spectral_orbit_check,
    yasutomi_check,
)
from .iet import IetParams, SturmianParams, check_two_step, code, is_nondegenerate, sturmian_params, transform, two_iet_code
from .morphism import E, PHI, PSI, SIGMA01, SIGMA10, Morphism, fixed_point_prefix, incidence, is_primitive, perron
from .qfield import Quadratic, make_quadratic, parse_quadratic, sqrt
from .words import BINARY, TERNARY, BiWindow, classify_profile, complexity_profile, factors

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "BiWindow",
    "Certificate",
    "check_two_step",
    "classify_profile",
    "code",
    "complexity_profile",
    "cross_check",
    "decompose",
    "Decomposition",
    "E",
    "factors",
    "fixed_point_prefix",
    "IetParams",
    "incidence",
    "infer_epsilon",
    "invariance_3iet_check",
    "is_amicable",
    "is_amicable_morphisms",
    "is_nondegenerate",
    "is_primitive",
    "make_quadratic",
    "matrix_necessary_check",
    "Morphism",
    "parse_quadratic",
    "perron",
    "PHI",
    "PSI",
    "Quadratic",
    "SIGMA01",
    "SIGMA10",
    "spectral_orbit_check",
    "sqrt",
    "sturmian_params",
    "SturmianParams",
    "ternarization_fixed_point",
    "ternarize_morphisms",
    "ternarize_prefix",
    "ternarize_words",
    "TERNARY",
    "transform",
    "two_iet_code",
    "yasutomi_check",
]
