"""Terminating hypergeometric series over exact scalars.

A series here is a finite sum: one designated upper parameter has value
``-n`` for a nonnegative integer ``n`` and the sum runs over ``k = 0..n``.
Terms are accumulated through the incremental ratio

    C_{k+1} / C_k = prod(a_i + k) * z / ((k+1) * prod(b_j + k)),

which needs one scalar multiply/divide per parameter per term and keeps
zero-divisor checks local.

Classical evaluations used as right-hand-side oracles live here as well:
the Chu-Vandermonde-Gauss sum, the Saalschutz sum, the Dougall-Dixon sum,
and the Whipple transformation.

Very-well-poised series carry the parameter pair ``(1 + w, w)`` split across
the upper/lower lists.  Declared via ``well_poised_pair``, the pair's joint
contribution to term ``k`` is telescoped to ``(w + k) / w``, which stays
finite at dual points where the plain per-parameter ratio would divide by a
zero value part (the pair's lower parameter may legitimately pass through a
nonpositive integer value there).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .combinatorics import pochhammer
from .exactnum import Scalar, as_scalar, value_part

__all__ = [
    "SeriesDomainError",
    "HypergeometricSpec",
    "eval_pfq",
    "chu_vandermonde_rhs",
    "saalschutz_rhs",
    "dougall_dixon_rhs",
    "whipple_rhs",
    "chu_vandermonde_lhs",
    "saalschutz_lhs",
    "dougall_dixon_lhs",
    "whipple_lhs",
]

_HALF = Fraction(1, 2)


class SeriesDomainError(ValueError):
    """A series parameter puts a zero in a denominator inside the sum range."""


def _is_bad_lower(value: Fraction, n: int) -> bool:
    # (b)_k vanishes for some k <= n iff b is an integer in [-(n-1), 0]
    return n >= 1 and value.denominator == 1 and -(n - 1) <= value <= 0


@dataclass(frozen=True)
class HypergeometricSpec:
    """A terminating series: upper/lower parameter lists plus argument.

    ``termination_index`` names the upper parameter whose value part is the
    nonpositive integer ``-n`` that truncates the sum.  An explicit
    ``truncation`` overrides that derivation, for series that terminate by
    convention at a degree the designated parameter only reaches at the
    expansion point (the well-poised generating series with a free rational
    shift).  ``well_poised_pair`` optionally names ``(upper_index,
    lower_index)`` of a parameter pair differing by exactly one, handled
    jointly (see module docstring).
    """

    upper: tuple
    lower: tuple
    argument: Scalar
    termination_index: int = 0
    well_poised_pair: Optional[tuple[int, int]] = None
    truncation: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(as_scalar(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(as_scalar(b) for b in self.lower))
        object.__setattr__(self, "argument", as_scalar(self.argument))
        if self.truncation is None:
            tv = value_part(self.upper[self.termination_index])
            if tv.denominator != 1 or tv > 0:
                raise SeriesDomainError(
                    f"termination parameter {self.upper[self.termination_index]} "
                    "must have a nonpositive integer value part"
                )
            n = -int(tv)
        elif self.truncation < 0:
            raise SeriesDomainError("truncation degree must be nonnegative")
        else:
            n = self.truncation
        skip = self.well_poised_pair[1] if self.well_poised_pair else None
        for j, b in enumerate(self.lower):
            if j == skip:
                continue
            if _is_bad_lower(value_part(b), n):
                raise SeriesDomainError(
                    f"lower parameter {j} = {b} vanishes within the summation range (n = {n})"
                )
        if self.well_poised_pair is not None:
            iu, il = self.well_poised_pair
            diff = self.upper[iu] - self.lower[il]
            if value_part(diff) != 1 or (diff - 1):
                raise SeriesDomainError(
                    "well-poised pair must satisfy upper == lower + 1 exactly"
                )

    @property
    def n(self) -> int:
        if self.truncation is not None:
            return self.truncation
        return -int(value_part(self.upper[self.termination_index]))


def eval_pfq(spec: HypergeometricSpec) -> Scalar:
    """Exact value of the terminating series described by ``spec``."""
    n = spec.n
    pair = spec.well_poised_pair
    base_upper = [u for i, u in enumerate(spec.upper) if pair is None or i != pair[0]]
    base_lower = [b for j, b in enumerate(spec.lower) if pair is None or j != pair[1]]
    pair_low = spec.lower[pair[1]] if pair is not None else None
    if pair is not None and n >= 1 and value_part(pair_low) == 0:
        raise SeriesDomainError("well-poised pair lower parameter is zero with n >= 1")

    z = spec.argument
    total: Scalar = Fraction(1)
    base: Scalar = Fraction(1)
    for k in range(n):
        num: Scalar = z
        for a in base_upper:
            num = num * (a + k)
        den: Scalar = Fraction(k + 1)
        for b in base_lower:
            f = b + k
            if value_part(f) == 0:
                raise SeriesDomainError(
                    f"lower parameter {b} reaches zero at term k = {k + 1}"
                )
            den = den * f
        base = base * num / den
        term = base
        if pair is not None:
            term = term * (pair_low + (k + 1)) / pair_low
        total = total + term
    return total


def _checked_div(num: Scalar, den: Scalar, what: str) -> Scalar:
    if value_part(den) == 0:
        raise SeriesDomainError(f"{what} vanishes")
    return num / den


def chu_vandermonde_rhs(a: Scalar, c: Scalar, n: int) -> Scalar:
    """Closed form ``(c-a)_n / (c)_n`` for the terminating 2F1 at unit argument."""
    a, c = as_scalar(a), as_scalar(c)
    return _checked_div(pochhammer(c - a, n), pochhammer(c, n), "(c)_n")


def saalschutz_rhs(a: Scalar, b: Scalar, c: Scalar, n: int) -> Scalar:
    """Closed form ``(c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)`` of the balanced 3F2."""
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    num = pochhammer(c - a, n) * pochhammer(c - b, n)
    den1 = pochhammer(c, n)
    den2 = pochhammer(c - a - b, n)
    return _checked_div(_checked_div(num, den1, "(c)_n"), den2, "(c-a-b)_n")


def dougall_dixon_rhs(a: Scalar, b: Scalar, d: Scalar, n: int) -> Scalar:
    """Closed form ``(1+a)_n (1+a-b-d)_n / ((1+a-b)_n (1+a-d)_n)``."""
    a, b, d = as_scalar(a), as_scalar(b), as_scalar(d)
    num = pochhammer(1 + a, n) * pochhammer(1 + a - b - d, n)
    den1 = pochhammer(1 + a - b, n)
    den2 = pochhammer(1 + a - d, n)
    return _checked_div(_checked_div(num, den1, "(1+a-b)_n"), den2, "(1+a-d)_n")


def whipple_rhs(a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar, n: int) -> Scalar:
    """Dougall-Dixon prefactor times the terminating balanced-style 4F3."""
    a, b, c, d, e = (as_scalar(v) for v in (a, b, c, d, e))
    pre = dougall_dixon_rhs(a, b, d, n)
    tail = eval_pfq(
        HypergeometricSpec(
            upper=(-n, b, d, 1 + a - c - e),
            lower=(1 + a - c, 1 + a - e, b + d - a - n),
            argument=1,
        )
    )
    return pre * tail


def chu_vandermonde_lhs(a: Scalar, c: Scalar, n: int) -> HypergeometricSpec:
    return HypergeometricSpec(upper=(-n, a), lower=(c,), argument=1)


def saalschutz_lhs(a: Scalar, b: Scalar, c: Scalar, n: int) -> HypergeometricSpec:
    a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
    return HypergeometricSpec(
        upper=(-n, a, b), lower=(c, 1 + a + b - c - n), argument=1
    )


def dougall_dixon_lhs(a: Scalar, b: Scalar, d: Scalar, n: int) -> HypergeometricSpec:
    a, b, d = as_scalar(a), as_scalar(b), as_scalar(d)
    return HypergeometricSpec(
        upper=(a, 1 + a * _HALF, b, d, -n),
        lower=(a * _HALF, 1 + a - b, 1 + a - d, 1 + a + n),
        argument=1,
        termination_index=4,
    )


def whipple_lhs(
    a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar, n: int
) -> HypergeometricSpec:
    a, b, c, d, e = (as_scalar(v) for v in (a, b, c, d, e))
    return HypergeometricSpec(
        upper=(a, 1 + a * _HALF, b, c, d, e, -n),
        lower=(a * _HALF, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + n),
        argument=1,
        termination_index=6,
    )
