"""Exact scalar arithmetic: arbitrary-precision rationals and first-order duals.

Every computation in this package runs over one of two scalar types:

* ``Rational`` -- an exact fraction in lowest terms (``fractions.Fraction``
  from the standard library, which already guarantees a positive denominator
  and canonical reduction after every operation).
* ``Dual`` -- a first-order jet ``value + deriv*eps`` with ``eps**2 == 0``.
  Evaluating an expression at ``Dual(0, 1)`` yields the expression's value at
  zero together with its exact derivative there, with no symbolic machinery.

All values are immutable and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

__all__ = [
    "Rational",
    "Dual",
    "DualDivisionError",
    "Scalar",
    "rat",
    "as_scalar",
    "as_dual",
    "embed",
    "value_part",
    "deriv_part",
    "dual_div",
    "d0_eval",
    "format_rational",
    "parse_rational",
]

Rational = Fraction

_RAT = (int, Fraction)


class DualDivisionError(ZeroDivisionError):
    """Division by a dual number whose value part is zero.

    The value part is the only invertible component of a first-order jet;
    a zero there means the quotient has no jet expansion.  The ``context``
    string names the expression that produced the bad divisor.
    """

    def __init__(self, context: str = ""):
        self.context = context
        msg = "division by dual with zero value part"
        if context:
            msg = f"{msg}: {context}"
        super().__init__(msg)


def rat(p: int, q: int = 1) -> Fraction:
    """Exact fraction ``p/q`` in canonical form (sign on the numerator).

    Raises ``ZeroDivisionError`` for ``q == 0``.
    """
    return Fraction(p, q)


@dataclass(frozen=True)
class Dual:
    """First-order jet ``value + deriv*eps`` over exact rationals."""

    value: Fraction
    deriv: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "deriv", Fraction(self.deriv))

    def _coerce(self, other) -> "Dual":
        if isinstance(other, Dual):
            return other
        if isinstance(other, _RAT):
            return Dual(Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dual(self.value + o.value, self.deriv + o.deriv)

    __radd__ = __add__

    def __neg__(self):
        return Dual(-self.value, -self.deriv)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dual(self.value - o.value, self.deriv - o.deriv)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Dual(o.value - self.value, o.deriv - self.deriv)

    def __mul__(self, other):
        if isinstance(other, _RAT):
            return Dual(self.value * other, self.deriv * other)
        if not isinstance(other, Dual):
            return NotImplemented
        return Dual(
            self.value * other.value,
            self.value * other.deriv + self.deriv * other.value,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _RAT):
            if other == 0:
                raise DualDivisionError(f"({self}) / 0")
            return Dual(self.value / other, self.deriv / other)
        if not isinstance(other, Dual):
            return NotImplemented
        if other.value == 0:
            raise DualDivisionError(f"({self}) / ({other})")
        v = self.value / other.value
        return Dual(
            v,
            (self.deriv * other.value - self.value * other.deriv)
            / (other.value * other.value),
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Dual(Fraction(1), Fraction(0))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.value) or bool(self.deriv)

    def __str__(self) -> str:
        return f"{self.value} + {self.deriv}*eps"


Scalar = Union[int, Fraction, Dual]


def as_scalar(v: Scalar) -> Scalar:
    """Normalize a scalar: plain integers become exact fractions."""
    if isinstance(v, int):
        return Fraction(v)
    return v


def as_dual(v: Scalar) -> Dual:
    if isinstance(v, Dual):
        return v
    return Dual(Fraction(v), Fraction(0))


def embed(r: Scalar) -> Dual:
    """Ring embedding of a rational into the duals (derivative slot zero)."""
    return Dual(Fraction(r), Fraction(0))


def value_part(v: Scalar) -> Fraction:
    if isinstance(v, Dual):
        return v.value
    return Fraction(v)


def deriv_part(v: Scalar) -> Fraction:
    if isinstance(v, Dual):
        return v.deriv
    return Fraction(0)


def dual_div(a: Scalar, b: Scalar) -> Dual:
    """Jet quotient ``a / b``; requires the divisor's value part nonzero."""
    return as_dual(a) / as_dual(b)


def d0_eval(f: Callable[[Dual], Scalar]) -> tuple[Fraction, Fraction]:
    """Evaluate ``f`` at the jet seed ``0 + eps``.

    Returns ``(f(0), f'(0))`` exactly, provided every division inside ``f``
    stays away from zero value parts (otherwise ``DualDivisionError``
    propagates).  Constant results are lifted with derivative zero.
    """
    out = f(Dual(Fraction(0), Fraction(1)))
    if isinstance(out, Dual):
        return out.value, out.deriv
    return Fraction(out), Fraction(0)


def format_rational(r: Fraction) -> str:
    """Serialize as ``p/q`` (or bare ``p`` for integers); round-trips exactly."""
    return str(Fraction(r))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
