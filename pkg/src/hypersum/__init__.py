"""hypersum: exact verification of binomial-harmonic summation identities.

A small library built on two exact scalar types (arbitrary-precision
rationals and first-order dual numbers) that evaluates terminating
hypergeometric series, houses an executable catalog of harmonic-number
identities, re-derives each one from its classical parent by exact
differentiation at zero, and probes the decay of antisymmetric
harmonic-weighted sums.
"""

from .combinatorics import (
    HarmonicCache,
    binomial_gen,
    binomial_int,
    harmonic,
    harmonic_gen,
    pochhammer,
)
from .exactnum import (
    Dual,
    DualDivisionError,
    Rational,
    d0_eval,
    dual_div,
    embed,
    format_rational,
    parse_rational,
    rat,
)
from .hyperseries import (
    HypergeometricSpec,
    SeriesDomainError,
    chu_vandermonde_rhs,
    dougall_dixon_rhs,
    eval_pfq,
    saalschutz_rhs,
    whipple_rhs,
)
from .identities import (
    CheckResult,
    DerivationResult,
    DomainViolation,
    check_binomial_family,
    check_identity,
    derive_via_d0,
    entry4_closed,
    lookup,
    manifest,
    omega,
    registry,
    xi,
    xi_via_derivative,
)
from .limits import (
    DecayReport,
    MonicRationalWeight,
    ReflectionFamily,
    binomial_ratio_weights,
    decay_probe,
    limit_sum,
    reflection_check,
    reflex_family,
    unit_weights,
)

__version__ = "0.1.0"

__all__ = [
    "HarmonicCache",
    "binomial_gen",
    "binomial_int",
    "harmonic",
    "harmonic_gen",
    "pochhammer",
    "Dual",
    "DualDivisionError",
    "Rational",
    "d0_eval",
    "dual_div",
    "embed",
    "format_rational",
    "parse_rational",
    "rat",
    "HypergeometricSpec",
    "SeriesDomainError",
    "chu_vandermonde_rhs",
    "dougall_dixon_rhs",
    "eval_pfq",
    "saalschutz_rhs",
    "whipple_rhs",
    "CheckResult",
    "DerivationResult",
    "DomainViolation",
    "check_binomial_family",
    "check_identity",
    "derive_via_d0",
    "entry4_closed",
    "lookup",
    "manifest",
    "omega",
    "registry",
    "xi",
    "xi_via_derivative",
    "DecayReport",
    "MonicRationalWeight",
    "ReflectionFamily",
    "binomial_ratio_weights",
    "decay_probe",
    "limit_sum",
    "reflection_check",
    "reflex_family",
    "unit_weights",
    "__version__",
]
