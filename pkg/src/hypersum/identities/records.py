"""Record types for the identity catalog and its derivation pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from ..exactnum import Dual, Scalar

__all__ = [
    "DomainViolation",
    "CheckResult",
    "DerivationResult",
    "IdentityRecord",
    "BinomialFamily",
]

# Constraint callables receive (params, n) and return the violated
# constraint's name, or None when the cell is in domain.
Constraint = Callable[[dict, int], Optional[str]]


class DomainViolation(ValueError):
    """A (params, n) cell falls outside a record's stated domain."""


@dataclass(frozen=True)
class CheckResult:
    record_id: str
    params: dict
    n: int
    lhs: Scalar
    rhs: Scalar

    @property
    def equal(self) -> bool:
        diff = self.lhs - self.rhs
        return not diff


@dataclass(frozen=True)
class DerivationResult:
    family_id: str
    params: dict
    n: int
    lhs: Dual
    rhs: Dual

    @property
    def value_match(self) -> bool:
        return self.lhs.value == self.rhs.value

    @property
    def deriv_match(self) -> bool:
        return self.lhs.deriv == self.rhs.deriv


@dataclass(frozen=True)
class IdentityRecord:
    """One verifiable summation identity: ``sum_k lhs_summand(n, k) == rhs(n)``.

    ``rhs`` may itself evaluate a finite sum (the transformation entries).
    ``source`` is the record's coordinate in this catalog; ``note`` carries
    transcription remarks, e.g. for entries whose commonly printed closed
    form needed a constant-factor correction (``corrected`` is then set).
    """

    id: str
    kind: str  # "theorem" | "table1" | "table2" | "aux"
    source: str
    description: str
    param_names: tuple[str, ...]
    lhs_summand: Callable[[int, int, dict], Fraction]
    rhs: Callable[[int, dict], Fraction]
    constraint: Optional[Constraint] = None
    constraint_doc: str = ""
    note: str = ""
    corrected: bool = False

    def reject_if_out_of_domain(self, params: dict, n: int) -> None:
        if n < 0:
            raise DomainViolation(f"{self.id}: n must be nonnegative")
        missing = [p for p in self.param_names if p not in params]
        if missing:
            raise DomainViolation(f"{self.id}: missing parameters {missing}")
        extra = [p for p in params if p not in self.param_names]
        if extra:
            raise DomainViolation(f"{self.id}: unknown parameters {extra}")
        for name in self.param_names:
            v = params[name]
            if not isinstance(v, int) or v < 0:
                raise DomainViolation(f"{self.id}: parameter {name} must be a nonnegative integer")
        if self.constraint is not None:
            violated = self.constraint(params, n)
            if violated:
                raise DomainViolation(f"{self.id}: {violated}")

    def check(self, params: dict, n: int) -> CheckResult:
        self.reject_if_out_of_domain(params, n)
        lhs = Fraction(0)
        for k in range(n + 1):
            lhs += self.lhs_summand(n, k, params)
        return CheckResult(self.id, dict(params), n, lhs, self.rhs(n, params))


@dataclass(frozen=True)
class BinomialFamily:
    """A parent identity in the free shift ``x``: ``sum_k lhs(x,n,k) == rhs(x,n)``.

    Holds as a function of ``x``; evaluating both sides at the jet seed
    ``0 + eps`` certifies the underlying classical summation instance (value
    slots) and the harmonic-number identity it generates (derivative slots)
    in one pass.
    """

    id: str
    source: str
    description: str
    param_names: tuple[str, ...]
    lhs_summand: Callable[[Scalar, int, int, dict], Scalar]
    rhs: Callable[[Scalar, int, dict], Scalar]
    derived_theorem: str
    constraint: Optional[Constraint] = None
    constraint_doc: str = ""

    def reject_if_out_of_domain(self, params: dict, n: int) -> None:
        if n < 0:
            raise DomainViolation(f"{self.id}: n must be nonnegative")
        missing = [p for p in self.param_names if p not in params]
        if missing:
            raise DomainViolation(f"{self.id}: missing parameters {missing}")
        for name in self.param_names:
            v = params.get(name)
            if not isinstance(v, int) or v < 0:
                raise DomainViolation(f"{self.id}: parameter {name} must be a nonnegative integer")
        if self.constraint is not None:
            violated = self.constraint(params, n)
            if violated:
                raise DomainViolation(f"{self.id}: {violated}")

    def check_at(self, params: dict, n: int, x: Scalar) -> CheckResult:
        self.reject_if_out_of_domain(params, n)
        lhs: Scalar = Fraction(0)
        for k in range(n + 1):
            lhs = lhs + self.lhs_summand(x, n, k, params)
        return CheckResult(self.id, dict(params), n, lhs, self.rhs(x, n, params))
