"""Exact decay probes for antisymmetric harmonic-weighted sums.

For a summand family with the reflection property ``f_n(k) = -f_n(n-k)``
and per-k weights that are ratios of same-degree monic polynomials in a
large integer ``y``, the weighted sum

    S(y) = sum_k f_n(k) * (P_k(y) / Q_k(y)) * H(n*y + k)

tends to zero as ``y`` grows: pairing ``k`` with ``n-k`` leaves only
harmonic-number differences ``H(ny+k) - H(ny+n-k)`` (small) and weight
differences whose numerator degree drops below the denominator's.  The
analytic limit is not machine-checkable; what is checkable exactly is that
``|S(y)|`` shrinks across decades of ``y``, and that is what the probe
certifies, in exact rational arithmetic all the way to ``y = 10**4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .combinatorics import HarmonicCache, binomial_int as C, harmonic

__all__ = [
    "MonicRationalWeight",
    "ReflectionFamily",
    "reflex_family",
    "unit_weights",
    "binomial_ratio_weights",
    "reflection_check",
    "limit_sum",
    "paired_limit_sum",
    "DecayReport",
    "decay_probe",
]


def _poly_eval(coeffs: tuple[Fraction, ...], y: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


@dataclass(frozen=True)
class MonicRationalWeight:
    """Ratio ``P(y)/Q(y)`` of two monic polynomials of equal degree.

    Coefficients are ascending; the leading coefficient of each side must
    be exactly one.
    """

    p_coeffs: tuple[Fraction, ...]
    q_coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        p = tuple(Fraction(c) for c in self.p_coeffs)
        q = tuple(Fraction(c) for c in self.q_coeffs)
        object.__setattr__(self, "p_coeffs", p)
        object.__setattr__(self, "q_coeffs", q)
        if not p or not q:
            raise ValueError("weight polynomials need at least one coefficient")
        if len(p) != len(q):
            raise ValueError("weight numerator and denominator must share a degree")
        if p[-1] != 1 or q[-1] != 1:
            raise ValueError("weight polynomials must be monic")

    @property
    def degree(self) -> int:
        return len(self.p_coeffs) - 1

    def ratio_at(self, y: int) -> Fraction:
        q = _poly_eval(self.q_coeffs, y)
        if q == 0:
            raise ValueError(f"weight denominator vanishes at y = {y}")
        return _poly_eval(self.p_coeffs, y) / q


@dataclass(frozen=True)
class ReflectionFamily:
    """A summand family ``f(n, k)`` meant to satisfy ``f(n,k) = -f(n,n-k)``."""

    f: Callable[[int, int], Fraction]
    mu: int
    nu: int
    description: str = ""


def reflex_family(mu: int, nu: int) -> ReflectionFamily:
    """The standard antisymmetric family
    ``C(n,k)**mu * (C(n+k,k)/C(2n,k))**nu * (n - 2k)``."""
    if mu < 0 or nu < 0:
        raise ValueError("exponents must be nonnegative")

    def f(n: int, k: int) -> Fraction:
        return Fraction(
            C(n, k) ** mu * C(n + k, k) ** nu * (n - 2 * k), C(2 * n, k) ** nu
        )

    return ReflectionFamily(f=f, mu=mu, nu=nu, description=f"reflex(mu={mu}, nu={nu})")


def _monic_product(shifts: list[Fraction]) -> tuple[Fraction, ...]:
    # prod_j (y + shift_j), expanded to ascending coefficients
    coeffs = [Fraction(1)]
    for s in shifts:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] += c * s
        coeffs = nxt
    return tuple(coeffs)


def unit_weights(n: int) -> list[MonicRationalWeight]:
    """Weights with ``P_k = Q_k`` (ratio identically one), degree ``k``."""
    out = []
    for k in range(n + 1):
        coeffs = tuple([Fraction(0)] * k + [Fraction(1)])
        out.append(MonicRationalWeight(coeffs, coeffs))
    return out


def binomial_ratio_weights(n: int) -> list[MonicRationalWeight]:
    """The weights carried by ``H(ny+k)`` in the transformation limits.

    ``C(k+yn,k) / C(n+yn,k)`` equals ``prod_{j=1..k} (y + j/n) / (y + (n-k+j)/n)``
    after normalizing each factor monic; degree ``k`` on both sides.
    """
    if n == 0:
        return [MonicRationalWeight((Fraction(1),), (Fraction(1),))]
    out = []
    for k in range(n + 1):
        p = _monic_product([Fraction(j, n) for j in range(1, k + 1)])
        q = _monic_product([Fraction(n - k + j, n) for j in range(1, k + 1)])
        out.append(MonicRationalWeight(p, q))
    return out


def reflection_check(fam: ReflectionFamily, n: int) -> bool:
    """Exact antisymmetry test ``f(n,k) + f(n,n-k) == 0`` for all k."""
    return all(fam.f(n, k) + fam.f(n, n - k) == 0 for k in range(n + 1))


def _check_probe_inputs(
    fam: ReflectionFamily, weights: Sequence[MonicRationalWeight], n: int
) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if len(weights) < n + 1:
        raise ValueError(f"need a weight for every k in 0..{n}")
    if not reflection_check(fam, n):
        raise ValueError("family violates the reflection property f(n,k) = -f(n,n-k)")


def limit_sum(
    fam: ReflectionFamily,
    weights: Sequence[MonicRationalWeight],
    n: int,
    y: int,
    cache: Optional[HarmonicCache] = None,
) -> Fraction:
    """Exact value of ``sum_k f(n,k) * (P_k/Q_k)(y) * H(ny+k)``."""
    if y < 1:
        raise ValueError("y must be a positive integer")
    _check_probe_inputs(fam, weights, n)
    total = Fraction(0)
    for k in range(n + 1):
        coeff = fam.f(n, k)
        if coeff == 0:
            continue
        total += coeff * weights[k].ratio_at(y) * harmonic(n * y + k, cache)
    return total


def paired_limit_sum(
    fam: ReflectionFamily,
    weights: Sequence[MonicRationalWeight],
    n: int,
    y: int,
    cache: Optional[HarmonicCache] = None,
) -> Fraction:
    """The same sum written through the k -> n-k involution:
    ``(1/2) sum_k f(n,k) [w_k(y) H(ny+k) - w_{n-k}(y) H(ny+n-k)]``."""
    if y < 1:
        raise ValueError("y must be a positive integer")
    _check_probe_inputs(fam, weights, n)
    total = Fraction(0)
    for k in range(n + 1):
        coeff = fam.f(n, k)
        if coeff == 0:
            continue
        total += coeff * (
            weights[k].ratio_at(y) * harmonic(n * y + k, cache)
            - weights[n - k].ratio_at(y) * harmonic(n * y + n - k, cache)
        )
    return total / 2


@dataclass(frozen=True)
class DecayReport:
    ys: tuple[int, ...]
    values: tuple[Fraction, ...]
    monotone_decreasing_magnitude: bool
    final_magnitude: Fraction


def decay_probe(
    fam: ReflectionFamily,
    weights: Sequence[MonicRationalWeight],
    n: int,
    ys: Sequence[int],
    cache: Optional[HarmonicCache] = None,
) -> DecayReport:
    """Evaluate the sum exactly at each ``y`` and flag strict magnitude decay.

    An identically zero sequence counts as converged.
    """
    ys = tuple(ys)
    if not ys:
        raise ValueError("need at least one probe point")
    if any(y < 1 for y in ys):
        raise ValueError("probe points must be positive integers")
    if any(b <= a for a, b in zip(ys, ys[1:])):
        raise ValueError("probe points must be strictly increasing")
    values = tuple(limit_sum(fam, weights, n, y, cache) for y in ys)
    if all(v == 0 for v in values):
        monotone = True
    else:
        monotone = all(abs(b) < abs(a) for a, b in zip(values, values[1:]))
    return DecayReport(
        ys=ys,
        values=values,
        monotone_decreasing_magnitude=monotone,
        final_magnitude=abs(values[-1]),
    )
