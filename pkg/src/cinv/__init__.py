"""Exact invariants, classification and moduli dimensions of complex
complete intersections."""

from cinv.classify import Verdict, ClassificationVerdict, classify_pair, traving_condition
from cinv.invariants import (
    InvariantProfile,
    MultiDegree,
    chern_coefficients,
    euler_characteristic,
    invariant_profile,
    pontrjagin_coefficients,
    total_degree,
)
from cinv.moduli import (
    DEFAULT_PAIR,
    BasePair,
    compose,
    delta_closed_form,
    gamma_table,
    moduli_dimension,
    verify_monotonicity,
)

__version__ = "0.1.0"

__all__ = [
    "BasePair",
    "ClassificationVerdict",
    "DEFAULT_PAIR",
    "InvariantProfile",
    "MultiDegree",
    "Verdict",
    "chern_coefficients",
    "classify_pair",
    "compose",
    "delta_closed_form",
    "euler_characteristic",
    "gamma_table",
    "invariant_profile",
    "moduli_dimension",
    "pontrjagin_coefficients",
    "total_degree",
    "traving_condition",
    "verify_monotonicity",
]
