"""Factorial-family primitives over exact scalars.

Harmonic numbers, shifted factorials, and binomial coefficients, all generic
over the package's two scalar types.  The generalized binomial is a finite
product, so it is total: negative or fractional (or dual) tops are fine, and
it agrees with the integer binomial wherever both are defined.
"""

from __future__ import annotations

import bisect
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .exactnum import Dual, Scalar, value_part

__all__ = [
    "HarmonicCache",
    "harmonic",
    "harmonic_gen",
    "pochhammer",
    "binomial_int",
    "binomial_gen",
]

# Dense memo table is capped so streaming very large harmonic numbers (used
# by the limit probes) does not pin hundreds of megabytes of intermediates.
_DENSE_LIMIT = 4096


class HarmonicCache:
    """Memo table for integer harmonic numbers H_0, H_1, ...

    Entries are deterministic (``H_n = H_{n-1} + 1/n``), so concurrent fills
    are benign; a lock keeps the dense table's index/value alignment intact.
    Small indices live in a dense list; larger requests are computed by
    extending from the nearest already-known checkpoint and only the
    requested values are retained.
    """

    def __init__(self, dense_limit: int = _DENSE_LIMIT):
        self._dense_limit = dense_limit
        self._dense: list[Fraction] = [Fraction(0)]
        self._sparse: dict[int, Fraction] = {}
        self._sparse_keys: list[int] = []
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"harmonic number undefined for negative index {n}")
        if n < self._dense_limit:
            if n >= len(self._dense):
                with self._lock:
                    h = self._dense[-1]
                    for m in range(len(self._dense), n + 1):
                        h += Fraction(1, m)
                        self._dense.append(h)
            return self._dense[n]
        with self._lock:
            hit = self._sparse.get(n)
            if hit is not None:
                return hit
            start, h = self._nearest_checkpoint(n)
            for m in range(start + 1, n + 1):
                h += Fraction(1, m)
            self._sparse[n] = h
            bisect.insort(self._sparse_keys, n)
            return h

    def _nearest_checkpoint(self, n: int) -> tuple[int, Fraction]:
        i = bisect.bisect_right(self._sparse_keys, n) - 1
        if i >= 0:
            key = self._sparse_keys[i]
            return key, self._sparse[key]
        # fall back to the dense frontier, filling it completely first
        top = self._dense_limit - 1
        if top >= len(self._dense):
            h = self._dense[-1]
            for m in range(len(self._dense), top + 1):
                h += Fraction(1, m)
                self._dense.append(h)
        return len(self._dense) - 1, self._dense[-1]

    def snapshot(self) -> dict[int, Fraction]:
        """Copy of every populated entry (dense and sparse)."""
        with self._lock:
            out = {i: v for i, v in enumerate(self._dense)}
            out.update(self._sparse)
        return out


_default_cache = HarmonicCache()


def harmonic(n: int, cache: Optional[HarmonicCache] = None) -> Fraction:
    """Exact harmonic number ``H_n = 1 + 1/2 + ... + 1/n`` (``H_0 = 0``)."""
    return (cache if cache is not None else _default_cache).get(n)


def harmonic_gen(n: int, x: Scalar) -> Scalar:
    """Shifted harmonic sum ``1/(x+1) + 1/(x+2) + ... + 1/(x+n)``.

    Poles at ``x = -k`` (value part, for duals) are domain errors.
    """
    if n < 0:
        raise ValueError(f"generalized harmonic number undefined for negative index {n}")
    total: Scalar = Fraction(0)
    for k in range(1, n + 1):
        den = x + k
        if value_part(den) == 0:
            raise ValueError(f"generalized harmonic pole at shift x = -{k}")
        total = total + Fraction(1) / den
    return total


def pochhammer(c: Scalar, n: int) -> Scalar:
    """Rising factorial ``c (c+1) ... (c+n-1)`` with the empty product 1."""
    if n < 0:
        raise ValueError(f"rising factorial undefined for negative length {n}")
    result: Scalar = Fraction(1)
    for j in range(n):
        result = result * (c + j)
    return result


def binomial_int(n: int, k: int) -> int:
    """Integer binomial coefficient, extended to negative tops.

    Zero for ``k < 0`` (and for ``k > n`` when ``n >= 0``); for ``n < 0`` it
    follows the generalized product form, which stays integral.
    """
    if k < 0:
        return 0
    if n >= 0:
        if k > n:
            return 0
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


def binomial_gen(z: Scalar, m: int) -> Scalar:
    """Generalized binomial ``z`` choose ``m`` as the exact product
    ``prod_{l=1..m} (z - m + l) / l``.

    Total for every scalar ``z`` (rational, dual, negative integer); matches
    ``binomial_int`` on integers.
    """
    if m < 0:
        raise ValueError(f"generalized binomial undefined for negative lower index {m}")
    if m == 0:
        return Fraction(1)
    result: Scalar = Fraction(1)
    for l in range(1, m + 1):
        result = result * (z - m + l)
    return result / factorial(m)
