"""Power-weighted binomial-harmonic sums and their generating series.

``xi(power, n)`` is the sum ``sum_k C(n,k)**power * (1 + power*(n-2k)*H_k)``.
For powers 1..6 it reduces to closed forms or single transformation sums in
the catalog, and every one of them is the exact derivative at zero of one
very-well-poised terminating series: ``xi(p, n) == d/dx[(x+n) * omega(p, n, x)]``
at ``x = 0``, computable exactly with the jet seed.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..combinatorics import binomial_int as C
from ..combinatorics import harmonic as H
from ..exactnum import Scalar, as_scalar, d0_eval
from ..hyperseries import HypergeometricSpec, eval_pfq

__all__ = ["xi", "omega", "xi_via_derivative", "entry4_closed"]

_HALF = Fraction(1, 2)


def xi(power: int, n: int) -> Fraction:
    """Exact value of ``sum_k C(n,k)**power * (1 + power*(n-2k)*H_k)``."""
    if power < 1:
        raise ValueError(f"power must be a positive integer, got {power}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    total = Fraction(0)
    for k in range(n + 1):
        total += C(n, k) ** power * (1 + power * (n - 2 * k) * H(k))
    return total


def omega(power: int, n: int, x: Scalar) -> Scalar:
    """The very-well-poised terminating series generating ``xi(power, n)``.

    Upper parameters ``-x-n, 1-(x+n)/2`` and ``power - 1`` copies of ``-n``;
    lower parameters ``-(x+n)/2`` and ``power - 1`` copies of ``1-x``;
    argument ``(-1)**power``; sum truncated at ``k = n`` (the value part of
    the first upper parameter).  The well-poised pair is declared so the
    jet evaluation stays clear of zero-value divisors at even ``n``.
    """
    if power < 1:
        raise ValueError(f"power must be a positive integer, got {power}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    x = as_scalar(x)
    top = -x - n
    spec = HypergeometricSpec(
        upper=(top, 1 + top * _HALF) + (Fraction(-n),) * (power - 1),
        lower=(top * _HALF,) + (1 - x,) * (power - 1),
        argument=Fraction((-1) ** power),
        termination_index=0,
        well_poised_pair=(1, 0),
        truncation=n,
    )
    return eval_pfq(spec)


def xi_via_derivative(power: int, n: int) -> Fraction:
    """``xi`` recomputed as the exact derivative at zero of ``(x+n)*omega``."""
    _, deriv = d0_eval(lambda x: (x + n) * omega(power, n, x))
    return deriv


def entry4_closed(n: int) -> Fraction:
    """Closed evaluation of the entry-4 transformation sum.

    Zero for odd ``n``; for ``n = 2m`` the value is
    ``(-1)**m * (3m)!/(m! m! m!) / C(4m, 2m)**2``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n % 2 == 1:
        return Fraction(0)
    m = n // 2
    trinomial = comb(3 * m, m) * comb(2 * m, m)
    return Fraction((-1) ** m * trinomial, comb(4 * m, 2 * m) ** 2)
