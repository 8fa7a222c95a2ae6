"""Parent binomial identities in a free shift ``x``, one per derivation route.

Each classical summation theorem, after its parameter replacement, becomes a
binomial identity that still carries ``x``.  Differentiating at ``x = 0``
(here: evaluating both sides at the jet seed and reading the derivative
slots) produces the corresponding harmonic-number theorem.  Twelve family
ids cover ten distinct identities: the balanced-sum reformulation is a
single identity whose shift can sit in three different parameter positions
(the ``ps_*`` branch selectors).
"""

from __future__ import annotations

from fractions import Fraction

from ..combinatorics import binomial_gen as B
from ..combinatorics import binomial_int as C
from ..exactnum import Scalar
from .records import BinomialFamily

__all__ = ["FAMILIES", "FAMILY_ORDER"]


# -- Vandermonde convolution ---------------------------------------------------

def _chu_lhs(x, n, k, p):
    lam, mu = p["lam"], p["mu"]
    return C(n + mu * n, k) * B(x + lam * n + n, n - k)


def _chu_rhs(x, n, p):
    lam, mu = p["lam"], p["mu"]
    return B(x + lam * n + mu * n + 2 * n, n)


# -- balanced 3F2 reformulation (three shift placements) -----------------------

def _ps_constraint(p, n):
    if p["lam"] > 1 + p["mu"] + p["nu"]:
        return None
    return "requires lam > 1 + mu + nu"


def _make_ps(branch: tuple[int, int, int]):
    lp, mp, np_ = branch

    def lhs(x, n, k, p):
        lam, mu, nu = p["lam"], p["mu"], p["nu"]
        sig = lam - mu - nu - 2
        num = C(n, k) * B(k + lam * n + lp * x, k) * B(n + mu * n + mp * x, k)
        den = B(k + nu * n + np_ * x, k) * B(k + sig * n + (lp - mp - np_) * x, k)
        return num / den

    def rhs(x, n, p):
        lam, mu, nu = p["lam"], p["mu"], p["nu"]
        num = B((lam - nu) * n + (lp - np_) * x, n) * B(
            (mu + nu + 2) * n + (mp + np_) * x, n
        )
        den = B(n + nu * n + np_ * x, n) * B(
            (lam - mu - nu - 1) * n + (lp - mp - np_) * x, n
        )
        return num / den

    return lhs, rhs


_PS_LAM_LHS, _PS_LAM_RHS = _make_ps((1, 0, 0))
_PS_MU_LHS, _PS_MU_RHS = _make_ps((0, 1, 0))
_PS_NU_LHS, _PS_NU_RHS = _make_ps((0, 0, 1))


# -- very-well-poised 5F4 reformulations ---------------------------------------

def _dd1_lhs(x, n, k, p):
    b, d = p["b"], p["d"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k) * C(k + b * n, k) * C(k + d * n, k)
    )
    den = B(k - x, k) * B(x + b * n + n, k) * B(x + d * n + n, k)
    return num / den


def _dd1_rhs(x, n, p):
    b, d = p["b"], p["d"]
    num = x * B(x + n, n) * B(1 + x + b * n + d * n + n, n)
    den = B(x + b * n + n, n) * B(x + d * n + n, n)
    return num / den


def _dd2_lhs(x, n, k, p):
    b, d = p["b"], p["d"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k) * C(k + b * n, k) * C(n + d * n, k)
    )
    den = B(k - x, k) * B(n + b * n + x, k) * B(k + d * n - x, k)
    return num / den


def _dd2_rhs(x, n, p):
    b, d = p["b"], p["d"]
    num = (-1) ** n * x * B(x + n, n) * B(x + b * n - d * n, n)
    den = B(n + b * n + x, n) * B(n + d * n - x, n)
    return num / den


def _dd3_lhs(x, n, k, p):
    b, d = p["b"], p["d"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k) * C(n + b * n, k) * C(n + d * n, k)
    )
    den = B(k - x, k) * B(k + b * n - x, k) * B(k + d * n - x, k)
    return num / den


def _dd3_rhs(x, n, p):
    b, d = p["b"], p["d"]
    num = (-1) ** n * x * B(x + n, n) * B(2 * n + b * n + d * n - x, n)
    den = B(n + b * n - x, n) * B(n + d * n - x, n)
    return num / den


# -- 7F6 transformation reformulations ------------------------------------------

def _wh_sum(n: int, term) -> Scalar:
    s: Scalar = Fraction(0)
    for l in range(n + 1):
        s = s + term(l)
    return s


def _wh1_lhs(x, n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k)
        * C(k + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(k + e * n, k)
    )
    den = (
        B(k - x, k)
        * B(n + b * n + x, k) * B(n + c * n + x, k)
        * B(n + d * n + x, k) * B(n + e * n + x, k)
    )
    return num / den


def _wh1_rhs(x, n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    pre = (
        x
        * B(x + n, n) * B(1 + x + b * n + d * n + n, n)
        / (B(x + b * n + n, n) * B(x + d * n + n, n))
    )

    def term(l):
        num = C(n, l) * C(l + b * n, l) * C(l + d * n, l) * B(1 + x + c * n + e * n + n, l)
        den = B(x + c * n + n, l) * B(x + e * n + n, l) * B(1 + x + b * n + d * n + l, l)
        return num / den

    return pre * _wh_sum(n, term)


def _wh2_lhs(x, n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k)
        * C(k + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(n + e * n, k)
    )
    den = (
        B(k - x, k)
        * B(n + b * n + x, k) * B(n + c * n + x, k)
        * B(n + d * n + x, k) * B(k + e * n - x, k)
    )
    return num / den


def _wh2_rhs(x, n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    pre = (
        x
        * B(x + n, n) * B(1 + x + b * n + d * n + n, n)
        / (B(x + b * n + n, n) * B(x + d * n + n, n))
    )

    def term(l):
        num = (-1) ** l * C(n, l) * C(l + b * n, l) * C(l + d * n, l) * B(x + c * n - e * n, l)
        den = B(n + c * n + x, l) * B(l + e * n - x, l) * B(1 + x + b * n + d * n + l, l)
        return num / den

    return pre * _wh_sum(n, term)


def _wh3_lhs(x, n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k)
        * C(k + b * n, k) * C(n + c * n, k) * C(k + d * n, k) * C(n + e * n, k)
    )
    den = (
        B(k - x, k)
        * B(n + b * n + x, k) * B(k + c * n - x, k)
        * B(n + d * n + x, k) * B(k + e * n - x, k)
    )
    return num / den


def _wh3_rhs(x, n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    pre = (
        x
        * B(x + n, n) * B(1 + x + b * n + d * n + n, n)
        / (B(x + b * n + n, n) * B(x + d * n + n, n))
    )

    def term(l):
        num = (-1) ** l * C(n, l) * C(l + b * n, l) * C(l + d * n, l) * B(l + n + c * n + e * n - x, l)
        den = B(l + c * n - x, l) * B(l + e * n - x, l) * B(1 + x + b * n + d * n + l, l)
        return num / den

    return pre * _wh_sum(n, term)


def _wh4_constraint(p, n):
    if n == 0 or p["b"] != p["d"]:
        return None
    return "requires b != d when n > 0 (right side divides by a vanishing binomial)"


def _wh4_lhs(x, n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k)
        * C(k + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(n + e * n, k)
    )
    den = (
        B(k - x, k)
        * B(n + b * n + x, k) * B(k + c * n - x, k)
        * B(k + d * n - x, k) * B(k + e * n - x, k)
    )
    return num / den


def _wh4_rhs(x, n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    pre = (
        (-1) ** n
        * x
        * B(x + n, n) * B(b * n - d * n + x, n)
        / (B(x + b * n + n, n) * B(n + d * n - x, n))
    )

    def term(l):
        num = C(n, l) * C(l + b * n, l) * C(n + d * n, l) * B(l + n + c * n + e * n - x, l)
        den = B(l + c * n - x, l) * B(l + e * n - x, l) * B(l - n + b * n - d * n + x, l)
        return num / den

    return pre * _wh_sum(n, term)


def _wh5_lhs(x, n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    num = (
        (x + n - 2 * k)
        * C(n, k)
        * B(x + n, k)
        * C(n + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(n + e * n, k)
    )
    den = (
        B(k - x, k)
        * B(k + b * n - x, k) * B(k + c * n - x, k)
        * B(k + d * n - x, k) * B(k + e * n - x, k)
    )
    return num / den


def _wh5_rhs(x, n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    pre = (
        (-1) ** n
        * x
        * B(x + n, n) * B(2 * n + b * n + d * n - x, n)
        / (B(n + b * n - x, n) * B(n + d * n - x, n))
    )

    def term(l):
        num = C(n, l) * C(n + b * n, l) * C(n + d * n, l) * B(l + n + c * n + e * n - x, l)
        den = B(l + c * n - x, l) * B(l + e * n - x, l) * B(2 * n + b * n + d * n - x, l)
        return num / den

    return pre * _wh_sum(n, term)


FAMILY_ORDER = (
    "chu",
    "ps_lam", "ps_mu", "ps_nu",
    "dd_1", "dd_2", "dd_3",
    "wh_1", "wh_2", "wh_3", "wh_4", "wh_5",
)

FAMILIES: dict[str, BinomialFamily] = {
    fam.id: fam
    for fam in (
        BinomialFamily(
            id="chu", source="convolution identity behind theorem 1",
            description="sum C(n+mu*n,k) B(x+lam*n+n,n-k) = B(x+lam*n+mu*n+2n,n)",
            param_names=("lam", "mu"), lhs_summand=_chu_lhs, rhs=_chu_rhs,
            derived_theorem="thm1",
        ),
        BinomialFamily(
            id="ps_lam", source="balanced-sum reformulation, shift on the lam slot",
            description="shift attached to the k+lam*n binomial",
            param_names=("lam", "mu", "nu"), lhs_summand=_PS_LAM_LHS, rhs=_PS_LAM_RHS,
            derived_theorem="thm2", constraint=_ps_constraint,
            constraint_doc="lam > 1 + mu + nu",
        ),
        BinomialFamily(
            id="ps_mu", source="balanced-sum reformulation, shift on the mu slot",
            description="shift attached to the n+mu*n binomial",
            param_names=("lam", "mu", "nu"), lhs_summand=_PS_MU_LHS, rhs=_PS_MU_RHS,
            derived_theorem="thm3", constraint=_ps_constraint,
            constraint_doc="lam > 1 + mu + nu",
        ),
        BinomialFamily(
            id="ps_nu", source="balanced-sum reformulation, shift on the nu slot",
            description="shift attached to the k+nu*n binomial",
            param_names=("lam", "mu", "nu"), lhs_summand=_PS_NU_LHS, rhs=_PS_NU_RHS,
            derived_theorem="thm4", constraint=_ps_constraint,
            constraint_doc="lam > 1 + mu + nu",
        ),
        BinomialFamily(
            id="dd_1", source="well-poised reformulation, ascending/ascending",
            description="both free parameters enter as 1 + b*n, 1 + d*n",
            param_names=("b", "d"), lhs_summand=_dd1_lhs, rhs=_dd1_rhs,
            derived_theorem="thm5",
        ),
        BinomialFamily(
            id="dd_2", source="well-poised reformulation, ascending/descending",
            description="free parameters enter as 1 + b*n and -n - d*n",
            param_names=("b", "d"), lhs_summand=_dd2_lhs, rhs=_dd2_rhs,
            derived_theorem="thm6",
        ),
        BinomialFamily(
            id="dd_3", source="well-poised reformulation, descending/descending",
            description="both free parameters enter as -n - b*n, -n - d*n",
            param_names=("b", "d"), lhs_summand=_dd3_lhs, rhs=_dd3_rhs,
            derived_theorem="thm7",
        ),
        BinomialFamily(
            id="wh_1", source="transformation reformulation, four ascending",
            description="b, c, d, e all enter as 1 + u*n",
            param_names=("b", "c", "d", "e"), lhs_summand=_wh1_lhs, rhs=_wh1_rhs,
            derived_theorem="thm8",
        ),
        BinomialFamily(
            id="wh_2", source="transformation reformulation, three ascending",
            description="e enters as -n - e*n, the rest as 1 + u*n",
            param_names=("b", "c", "d", "e"), lhs_summand=_wh2_lhs, rhs=_wh2_rhs,
            derived_theorem="thm9",
        ),
        BinomialFamily(
            id="wh_3", source="transformation reformulation, two ascending",
            description="c, e enter as -n - u*n; b, d as 1 + u*n",
            param_names=("b", "c", "d", "e"), lhs_summand=_wh3_lhs, rhs=_wh3_rhs,
            derived_theorem="thm10",
        ),
        BinomialFamily(
            id="wh_4", source="transformation reformulation, one ascending",
            description="b enters as 1 + b*n; c, d, e as -n - u*n",
            param_names=("b", "c", "d", "e"), lhs_summand=_wh4_lhs, rhs=_wh4_rhs,
            derived_theorem="thm11", constraint=_wh4_constraint,
            constraint_doc="b != d when n > 0",
        ),
        BinomialFamily(
            id="wh_5", source="transformation reformulation, four descending",
            description="b, c, d, e all enter as -n - u*n",
            param_names=("b", "c", "d", "e"), lhs_summand=_wh5_lhs, rhs=_wh5_rhs,
            derived_theorem="thm12",
        ),
    )
}
