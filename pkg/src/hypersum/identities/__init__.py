"""Executable catalog of binomial-harmonic summation identities.

62 records (12 theorems, 26 closed forms, 21 transformations, 3 auxiliary
specializations) plus 12 parent binomial families whose exact derivative at
zero re-derives the theorems mechanically.
"""

from .families import FAMILIES, FAMILY_ORDER
from .records import (
    BinomialFamily,
    CheckResult,
    DerivationResult,
    DomainViolation,
    IdentityRecord,
)
from .registry import (
    check_binomial_family,
    check_identity,
    default_n_max,
    default_param_grid,
    derive_via_d0,
    family_lookup,
    lookup,
    manifest,
    registry,
)
from .wellpoised import entry4_closed, omega, xi, xi_via_derivative

__all__ = [
    "BinomialFamily",
    "CheckResult",
    "DerivationResult",
    "DomainViolation",
    "IdentityRecord",
    "FAMILIES",
    "FAMILY_ORDER",
    "check_binomial_family",
    "check_identity",
    "default_n_max",
    "default_param_grid",
    "derive_via_d0",
    "family_lookup",
    "lookup",
    "manifest",
    "registry",
    "entry4_closed",
    "omega",
    "xi",
    "xi_via_derivative",
]
