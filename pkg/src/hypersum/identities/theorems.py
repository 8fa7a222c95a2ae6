"""The twelve harmonic-number theorems of the catalog, as executable records.

Grouping mirrors the classical parents: thm1 comes from the Vandermonde
convolution; thm2-thm4 from the balanced 3F2 sum (three branches of the
shift placement); thm5-thm7 from the very-well-poised 5F4 sum (three sign
patterns); thm8-thm12 from the 7F6 transformation (five sign patterns).

Two specializations of thm1 are kept as auxiliary records: ``wench`` (the
single-parameter case) and ``square_hk`` (the bare central case
``sum C(n,k)^2 H_k``).
"""

from __future__ import annotations

from fractions import Fraction

from ..combinatorics import binomial_int as C
from ..combinatorics import harmonic as H
from .records import IdentityRecord

__all__ = ["THEOREM_RECORDS", "AUX_THEOREM_RECORDS"]


def _ps_constraint(p: dict, n: int):
    if p["lam"] > 1 + p["mu"] + p["nu"]:
        return None
    return "requires lam > 1 + mu + nu"


def _ps_kernel(n: int, k: int, lam: int, mu: int, nu: int) -> Fraction:
    sig = lam - mu - nu - 2
    num = C(n, k) * C(lam * n + k, k) * C(mu * n + n, k)
    den = C(nu * n + k, k) * C(sig * n + k, k)
    return Fraction(num, den)


def _ps_prefactor(n: int, lam: int, mu: int, nu: int) -> Fraction:
    num = C((lam - nu) * n, n) * C((mu + nu + 2) * n, n)
    den = C(nu * n + n, n) * C((lam - mu - nu - 1) * n, n)
    return Fraction(num, den)


# -- Vandermonde parent ------------------------------------------------------

def _thm1_lhs(n, k, p):
    lam, mu = p["lam"], p["mu"]
    return C(n + mu * n, k) * C(n + lam * n, n - k) * H(lam * n + k)


def _thm1_rhs(n, p):
    lam, mu = p["lam"], p["mu"]
    return C(2 * n + lam * n + mu * n, n) * (
        H(lam * n + n) + H(lam * n + mu * n + n) - H(lam * n + mu * n + 2 * n)
    )


def _wench_lhs(n, k, p):
    lam = p["lam"]
    return C(n, k) * C(n + lam * n, n - k) * H(lam * n + k)


def _wench_rhs(n, p):
    lam = p["lam"]
    return C(2 * n + lam * n, n) * (2 * H(lam * n + n) - H(lam * n + 2 * n))


def _square_lhs(n, k, p):
    return C(n, k) ** 2 * H(k)


def _square_rhs(n, p):
    return C(2 * n, n) * (2 * H(n) - H(2 * n))


# -- balanced 3F2 parent -----------------------------------------------------

def _thm2_lhs(n, k, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    sig = lam - mu - nu - 2
    return _ps_kernel(n, k, lam, mu, nu) * (H(lam * n + k) - H(sig * n + k))


def _thm2_rhs(n, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    return _ps_prefactor(n, lam, mu, nu) * (
        H((lam - nu) * n) - H((lam - nu - 1) * n)
        + H(lam * n) - H((lam - mu - nu - 1) * n)
    )


def _thm3_lhs(n, k, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    sig = lam - mu - nu - 2
    return _ps_kernel(n, k, lam, mu, nu) * (H(mu * n + n - k) - H(sig * n + k))


def _thm3_rhs(n, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    return _ps_prefactor(n, lam, mu, nu) * (
        H((mu + nu + 1) * n) - H((mu + nu + 2) * n)
        + H(mu * n + n) - H((lam - mu - nu - 1) * n)
    )


def _thm4_lhs(n, k, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    sig = lam - mu - nu - 2
    return _ps_kernel(n, k, lam, mu, nu) * (H(nu * n + k) - H(sig * n + k))


def _thm4_rhs(n, p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    return _ps_prefactor(n, lam, mu, nu) * (
        H((mu + nu + 1) * n) - H((mu + nu + 2) * n)
        + H((lam - nu) * n) - H((lam - nu - 1) * n)
        + H(nu * n + n) - H((lam - mu - nu - 1) * n)
    )


# -- very-well-poised 5F4 parent ---------------------------------------------

def _thm5_lhs(n, k, p):
    b, d = p["b"], p["d"]
    kern = Fraction(
        C(n, k) ** 2 * C(k + b * n, k) * C(k + d * n, k),
        C(n + b * n, k) * C(n + d * n, k),
    )
    return kern * (1 + (n - 2 * k) * (2 * H(k) - H(b * n + k) - H(d * n + k)))


def _thm5_rhs(n, p):
    b, d = p["b"], p["d"]
    return Fraction(C(1 + b * n + d * n + n, n), C(n + b * n, n) * C(n + d * n, n))


def _thm6_lhs(n, k, p):
    b, d = p["b"], p["d"]
    kern = Fraction(
        C(n, k) ** 2 * C(k + b * n, k) * C(n + d * n, k),
        C(n + b * n, k) * C(k + d * n, k),
    )
    return kern * (1 + (n - 2 * k) * (2 * H(k) - H(b * n + k) + H(d * n + k)))


def _thm6_rhs(n, p):
    b, d = p["b"], p["d"]
    return Fraction(
        (-1) ** n * C(b * n - d * n, n), C(n + b * n, n) * C(n + d * n, n)
    )


def _thm7_lhs(n, k, p):
    b, d = p["b"], p["d"]
    kern = Fraction(
        C(n, k) ** 2 * C(n + b * n, k) * C(n + d * n, k),
        C(k + b * n, k) * C(k + d * n, k),
    )
    return kern * (1 + (n - 2 * k) * (2 * H(k) + H(b * n + k) + H(d * n + k)))


def _thm7_rhs(n, p):
    b, d = p["b"], p["d"]
    return Fraction(
        (-1) ** n * C(2 * n + b * n + d * n, n), C(n + b * n, n) * C(n + d * n, n)
    )


# -- 7F6 transformation parent -----------------------------------------------

def _whipple_prefactor(n: int, b: int, d: int) -> Fraction:
    return Fraction(C(1 + b * n + d * n + n, n), C(n + b * n, n) * C(n + d * n, n))


def _thm8_lhs(n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    kern = Fraction(
        C(n, k) ** 2
        * C(k + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(k + e * n, k),
        C(n + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(n + e * n, k),
    )
    braces = 1 + (n - 2 * k) * (
        2 * H(k) - H(b * n + k) - H(c * n + k) - H(d * n + k) - H(e * n + k)
    )
    return kern * braces


def _thm8_rhs(n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    s = Fraction(0)
    for l in range(n + 1):
        s += Fraction(
            C(n, l) * C(l + b * n, l) * C(l + d * n, l) * C(1 + c * n + e * n + n, l),
            C(n + c * n, l) * C(n + e * n, l) * C(1 + b * n + d * n + l, l),
        )
    return _whipple_prefactor(n, b, d) * s


def _thm9_lhs(n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    kern = Fraction(
        C(n, k) ** 2
        * C(k + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(n + e * n, k),
        C(n + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(k + e * n, k),
    )
    braces = 1 + (n - 2 * k) * (
        2 * H(k) - H(b * n + k) - H(c * n + k) - H(d * n + k) + H(e * n + k)
    )
    return kern * braces


def _thm9_rhs(n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    s = Fraction(0)
    for l in range(n + 1):
        s += Fraction(
            (-1) ** l
            * C(n, l) * C(l + b * n, l) * C(l + d * n, l) * C(c * n - e * n, l),
            C(n + c * n, l) * C(l + e * n, l) * C(1 + b * n + d * n + l, l),
        )
    return _whipple_prefactor(n, b, d) * s


def _thm10_lhs(n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    kern = Fraction(
        C(n, k) ** 2
        * C(k + b * n, k) * C(n + c * n, k) * C(k + d * n, k) * C(n + e * n, k),
        C(n + b * n, k) * C(k + c * n, k) * C(n + d * n, k) * C(k + e * n, k),
    )
    braces = 1 + (n - 2 * k) * (
        2 * H(k) - H(b * n + k) + H(c * n + k) - H(d * n + k) + H(e * n + k)
    )
    return kern * braces


def _thm10_rhs(n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    s = Fraction(0)
    for l in range(n + 1):
        s += Fraction(
            (-1) ** l
            * C(n, l) * C(l + b * n, l) * C(l + d * n, l)
            * C(n + c * n + e * n + l, l),
            C(l + c * n, l) * C(l + e * n, l) * C(1 + b * n + d * n + l, l),
        )
    return _whipple_prefactor(n, b, d) * s


def _thm11_constraint(p: dict, n: int):
    if n == 0 or p["b"] != p["d"]:
        return None
    return "requires b != d when n > 0 (right side is 0 times a vanishing denominator)"


def _thm11_lhs(n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    kern = Fraction(
        C(n, k) ** 2
        * C(k + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(n + e * n, k),
        C(n + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(k + e * n, k),
    )
    braces = 1 + (n - 2 * k) * (
        2 * H(k) - H(b * n + k) + H(c * n + k) + H(d * n + k) + H(e * n + k)
    )
    return kern * braces


def _thm11_rhs(n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    s = Fraction(0)
    for l in range(n + 1):
        s += Fraction(
            C(n, l) * C(l + b * n, l) * C(n + d * n, l)
            * C(l + c * n + e * n + n, l),
            C(l + c * n, l) * C(l + e * n, l) * C(l + b * n - d * n - n, l),
        )
    pre = Fraction(
        (-1) ** n * C(b * n - d * n, n), C(n + b * n, n) * C(n + d * n, n)
    )
    return pre * s


def _thm12_lhs(n, k, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    kern = Fraction(
        C(n, k) ** 2
        * C(n + b * n, k) * C(n + c * n, k) * C(n + d * n, k) * C(n + e * n, k),
        C(k + b * n, k) * C(k + c * n, k) * C(k + d * n, k) * C(k + e * n, k),
    )
    braces = 1 + (n - 2 * k) * (
        2 * H(k) + H(b * n + k) + H(c * n + k) + H(d * n + k) + H(e * n + k)
    )
    return kern * braces


def _thm12_rhs(n, p):
    b, c, d, e = p["b"], p["c"], p["d"], p["e"]
    s = Fraction(0)
    for l in range(n + 1):
        s += Fraction(
            C(n, l) * C(n + b * n, l) * C(n + d * n, l)
            * C(n + c * n + e * n + l, l),
            C(l + c * n, l) * C(l + e * n, l) * C(2 * n + b * n + d * n, l),
        )
    pre = Fraction(
        (-1) ** n * C(2 * n + b * n + d * n, n), C(n + b * n, n) * C(n + d * n, n)
    )
    return pre * s


THEOREM_RECORDS: tuple[IdentityRecord, ...] = (
    IdentityRecord(
        id="thm1", kind="theorem", source="theorem 1",
        description="sum C(n+mu*n,k) C(n+lam*n,n-k) H(lam*n+k) in closed form",
        param_names=("lam", "mu"), lhs_summand=_thm1_lhs, rhs=_thm1_rhs,
    ),
    IdentityRecord(
        id="thm2", kind="theorem", source="theorem 2",
        description="balanced-sum kernel weighted by H(lam*n+k) - H((lam-mu-nu-2)n+k)",
        param_names=("lam", "mu", "nu"), lhs_summand=_thm2_lhs, rhs=_thm2_rhs,
        constraint=_ps_constraint, constraint_doc="lam > 1 + mu + nu",
    ),
    IdentityRecord(
        id="thm3", kind="theorem", source="theorem 3",
        description="balanced-sum kernel weighted by H(mu*n+n-k) - H((lam-mu-nu-2)n+k)",
        param_names=("lam", "mu", "nu"), lhs_summand=_thm3_lhs, rhs=_thm3_rhs,
        constraint=_ps_constraint, constraint_doc="lam > 1 + mu + nu",
    ),
    IdentityRecord(
        id="thm4", kind="theorem", source="theorem 4",
        description="balanced-sum kernel weighted by H(nu*n+k) - H((lam-mu-nu-2)n+k)",
        param_names=("lam", "mu", "nu"), lhs_summand=_thm4_lhs, rhs=_thm4_rhs,
        constraint=_ps_constraint, constraint_doc="lam > 1 + mu + nu",
    ),
    IdentityRecord(
        id="thm5", kind="theorem", source="theorem 5",
        description="well-poised kernel, both side parameters ascending",
        param_names=("b", "d"), lhs_summand=_thm5_lhs, rhs=_thm5_rhs,
    ),
    IdentityRecord(
        id="thm6", kind="theorem", source="theorem 6",
        description="well-poised kernel, mixed ascending/descending parameters",
        param_names=("b", "d"), lhs_summand=_thm6_lhs, rhs=_thm6_rhs,
    ),
    IdentityRecord(
        id="thm7", kind="theorem", source="theorem 7",
        description="well-poised kernel, both side parameters descending",
        param_names=("b", "d"), lhs_summand=_thm7_lhs, rhs=_thm7_rhs,
    ),
    IdentityRecord(
        id="thm8", kind="theorem", source="theorem 8",
        description="transformation, all four parameters ascending",
        param_names=("b", "c", "d", "e"), lhs_summand=_thm8_lhs, rhs=_thm8_rhs,
    ),
    IdentityRecord(
        id="thm9", kind="theorem", source="theorem 9",
        description="transformation, three ascending and one descending parameter",
        param_names=("b", "c", "d", "e"), lhs_summand=_thm9_lhs, rhs=_thm9_rhs,
    ),
    IdentityRecord(
        id="thm10", kind="theorem", source="theorem 10",
        description="transformation, two ascending and two descending parameters",
        param_names=("b", "c", "d", "e"), lhs_summand=_thm10_lhs, rhs=_thm10_rhs,
    ),
    IdentityRecord(
        id="thm11", kind="theorem", source="theorem 11",
        description="transformation, one ascending and three descending parameters",
        param_names=("b", "c", "d", "e"), lhs_summand=_thm11_lhs, rhs=_thm11_rhs,
        constraint=_thm11_constraint, constraint_doc="b != d when n > 0",
    ),
    IdentityRecord(
        id="thm12", kind="theorem", source="theorem 12",
        description="transformation, all four parameters descending",
        param_names=("b", "c", "d", "e"), lhs_summand=_thm12_lhs, rhs=_thm12_rhs,
    ),
)

AUX_THEOREM_RECORDS: tuple[IdentityRecord, ...] = (
    IdentityRecord(
        id="wench", kind="aux", source="theorem 1 at mu = 0",
        description="sum C(n,k) C(n+lam*n,n-k) H(lam*n+k) = C(2n+lam*n,n){2H(lam*n+n)-H(lam*n+2n)}",
        param_names=("lam",), lhs_summand=_wench_lhs, rhs=_wench_rhs,
    ),
    IdentityRecord(
        id="square_hk", kind="aux", source="theorem 1 at lam = mu = 0",
        description="sum C(n,k)^2 H(k) = C(2n,n){2H(n)-H(2n)}",
        param_names=(), lhs_summand=_square_lhs, rhs=_square_rhs,
    ),
)
