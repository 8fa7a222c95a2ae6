"""The two identity tables of the catalog, transcribed entry by entry.

Table 1 holds 26 closed summation formulas ``sum_k A(n,k) = C(n)``;
table 2 holds 21 transformations ``sum_k A(n,k) = sum_l B(n,l)``.
Entries are standalone: several arise from the theorems by sending a
parameter to infinity, which is not a finite specialization, so they are
not re-derived at runtime.

Transcription notes.  Four closed forms in table 1 are corrected here
because the commonly printed right sides fail at n = 1 by a constant
factor (each correction is cross-checked in the tests against the parent
theorem instance, which is derived mechanically by jet differentiation):

* entries 5-7: printed prefactor C(3n,n) must be C(3n,n)**2;
* entry 22: printed right side must be divided by C(2n,n).

Entry 9's closed form 0 needs n >= 1 (the n = 0 sum is 1); entries 25/26
carry the n > 1 / n > 0 constraints their right sides require, and table 2
entry 14 needs n > 0.  Table 2 entries 4 and 9 are deliberately identical
twins: they arise from two different parent transformations.
"""

from __future__ import annotations

from fractions import Fraction

from ..combinatorics import binomial_int as C
from ..combinatorics import harmonic as H
from .records import IdentityRecord
from .wellpoised import entry4_closed

__all__ = ["TABLE1_RECORDS", "TABLE2_RECORDS", "AUX_TABLE_RECORDS"]


def _n_at_least(m: int, doc: str):
    def gate(p: dict, n: int):
        return None if n >= m else doc
    return gate


# ---------------------------------------------------------------------------
# table 1: sum_k A(n,k) = C(n)
# ---------------------------------------------------------------------------

def _t1e1_a(n, k, p):
    return C(n, k) ** 2 * C(2 * n + k, k) * (H(2 * n + k) - H(k))

def _t1e1_c(n, p):
    return 2 * C(2 * n, n) ** 2 * (H(2 * n) - H(n))

def _t1e2_a(n, k, p):
    return C(n, k) ** 2 * C(2 * n + k, k) * (H(k) - H(n - k))

def _t1e2_c(n, p):
    return C(2 * n, n) ** 2 * (H(2 * n) - H(n))

def _t1e3_a(n, k, p):
    return C(n, k) * C(2 * n, k) * C(3 * n + k, k) * (H(3 * n + k) - H(k))

def _t1e3_c(n, p):
    return C(3 * n, n) ** 2 * (2 * H(3 * n) - H(n) - H(2 * n))

def _t1e4_a(n, k, p):
    return C(n, k) * C(2 * n, k) * C(3 * n + k, k) * (H(2 * n - k) - H(k))

def _t1e4_c(n, p):
    return C(3 * n, n) ** 2 * (2 * H(2 * n) - H(n) - H(3 * n))

def _t1e5_a(n, k, p):
    return C(n, k) ** 2 * C(3 * n + k, 2 * n) * (H(3 * n + k) - H(k))

def _t1e5_c(n, p):
    return C(3 * n, n) ** 2 * (H(2 * n) + H(3 * n) - 2 * H(n))

def _t1e6_a(n, k, p):
    return C(n, k) ** 2 * C(3 * n + k, 2 * n) * (H(k) - H(n - k))

def _t1e6_c(n, p):
    return C(3 * n, n) ** 2 * (H(3 * n) - H(2 * n))

def _t1e7_a(n, k, p):
    return C(n, k) ** 2 * C(3 * n + k, 2 * n) * (H(n + k) - H(k))

def _t1e7_c(n, p):
    return C(3 * n, n) ** 2 * (3 * H(2 * n) - 2 * H(n) - H(3 * n))

def _t1e8_a(n, k, p):
    return C(n, k) * (1 + (n - 2 * k) * H(k))

def _t1e8_c(n, p):
    return Fraction(1)

def _t1e9_a(n, k, p):
    return C(n, k) ** 2 * (1 + 2 * (n - 2 * k) * H(k))

def _t1e9_c(n, p):
    return Fraction(0)

def _t1e10_a(n, k, p):
    return C(n + k, k) * C(2 * n - k, n) * (1 + (n - 2 * k) * (H(k) - H(n + k)))

def _t1e10_c(n, p):
    return Fraction(C(1 + 2 * n, n))

def _t1e11_a(n, k, p):
    return C(n + k, k) ** 2 * C(2 * n - k, n) ** 2 * (1 + 2 * (n - 2 * k) * (H(k) - H(n + k)))

def _t1e11_c(n, p):
    return Fraction(C(1 + 3 * n, n))

def _t1e12_a(n, k, p):
    return C(2 * n, k) * C(2 * n, n + k) * (1 + (n - 2 * k) * (H(k) + H(n + k)))

def _t1e12_c(n, p):
    return Fraction(C(2 * n - 1, n))

def _t1e13_a(n, k, p):
    return C(n, k) * C(2 * n, k) * C(2 * n, n + k) * (1 + (n - 2 * k) * (2 * H(k) + H(n + k)))

def _t1e13_c(n, p):
    return Fraction((-1) ** n)

def _t1e14_a(n, k, p):
    return C(n, k) * C(n + k, n) * C(2 * n - k, n) * (1 + (n - 2 * k) * (2 * H(k) - H(n + k)))

def _t1e14_c(n, p):
    return Fraction(1)

def _t1e15_a(n, k, p):
    return C(n, k) ** 2 * C(n + k, n) * C(2 * n - k, n) * (1 + (n - 2 * k) * (3 * H(k) - H(n + k)))

def _t1e15_c(n, p):
    return Fraction((-1) ** n)

def _t1e16_a(n, k, p):
    return C(n, k) ** 3 * (1 + 3 * (n - 2 * k) * H(k))

def _t1e16_c(n, p):
    return Fraction((-1) ** n)

def _t1e17_a(n, k, p):
    return C(n, k) ** 4 * (1 + 4 * (n - 2 * k) * H(k))

def _t1e17_c(n, p):
    return Fraction((-1) ** n * C(2 * n, n))

def _t1e18_a(n, k, p):
    return C(n, k) ** 2 * C(2 * n, k) * C(2 * n, n + k) * (1 + (n - 2 * k) * (3 * H(k) + H(n + k)))

def _t1e18_c(n, p):
    return Fraction((-1) ** n * C(3 * n, n))

def _t1e19_a(n, k, p):
    return C(2 * n, k) ** 2 * C(2 * n, n + k) ** 2 * (1 + 2 * (n - 2 * k) * (H(k) + H(n + k)))

def _t1e19_c(n, p):
    return Fraction((-1) ** n * C(4 * n, n))

def _t1e20_a(n, k, p):
    return Fraction(1, C(n, k)) * (1 - (n - 2 * k) * H(k))

def _t1e20_c(n, p):
    return (1 + n) * H(n + 1)

def _t1e21_a(n, k, p):
    return Fraction(1, C(n, k) ** 2) * (1 - 2 * (n - 2 * k) * H(k))

def _t1e21_c(n, p):
    return Fraction(2 * (1 + n) ** 2, 2 + n) * H(n + 1)

def _t1e22_a(n, k, p):
    return Fraction(1, C(2 * n, k) * C(2 * n, n + k)) * (1 - (n - 2 * k) * (H(k) + H(n + k)))

def _t1e22_c(n, p):
    closed = Fraction(1 + 2 * n, 2 + 2 * n) + Fraction(1 + 2 * n, 2) * H(1 + 2 * n)
    return closed / C(2 * n, n)

def _t1e23_a(n, k, p):
    return Fraction(C(n + k, k), C(2 * n, k)) * (1 - (n - 2 * k) * H(n + k))

def _t1e23_c(n, p):
    return (1 + 2 * n) * (H(1 + 2 * n) - H(n))

def _t1e24_a(n, k, p):
    return Fraction(C(n + k, k) ** 2, C(2 * n, k) ** 2) * (1 - 2 * (n - 2 * k) * H(n + k))

def _t1e24_c(n, p):
    return Fraction(2 * (1 + 2 * n) ** 2, 2 + 3 * n) * (H(1 + 2 * n) - H(n))

def _t1e25_a(n, k, p):
    return Fraction(C(2 * n, k), C(n, k) * C(n + k, k)) * (1 - (n - 2 * k) * (H(k) - H(n + k)))

def _t1e25_c(n, p):
    return Fraction(n * (n + 1), n - 1) * (H(n + 1) + H(n - 1) - H(2 * n))

def _t1e26_a(n, k, p):
    return Fraction(C(2 * n, k) ** 2, C(n + k, k) ** 2) * (1 + 2 * (n - 2 * k) * H(n + k))

def _t1e26_c(n, p):
    return Fraction(2 * n, 3) * (H(2 * n) - H(n - 1))


_SQUARED_PREFACTOR_NOTE = (
    "closed form corrected: the commonly printed prefactor C(3n,n) must be "
    "squared (fails at n=1 otherwise); cross-checked against the parent theorem"
)

_T1_DEFS = [
    # (entry, A, C, description, constraint, constraint_doc, note, corrected)
    (1, _t1e1_a, _t1e1_c, "C(n,k)^2 C(2n+k,k){H(2n+k)-H(k)}", None, "", "", False),
    (2, _t1e2_a, _t1e2_c, "C(n,k)^2 C(2n+k,k){H(k)-H(n-k)}", None, "", "", False),
    (3, _t1e3_a, _t1e3_c, "C(n,k) C(2n,k) C(3n+k,k){H(3n+k)-H(k)}", None, "", "", False),
    (4, _t1e4_a, _t1e4_c, "C(n,k) C(2n,k) C(3n+k,k){H(2n-k)-H(k)}", None, "", "", False),
    (5, _t1e5_a, _t1e5_c, "C(n,k)^2 C(3n+k,2n){H(3n+k)-H(k)}",
     None, "", _SQUARED_PREFACTOR_NOTE, True),
    (6, _t1e6_a, _t1e6_c, "C(n,k)^2 C(3n+k,2n){H(k)-H(n-k)}",
     None, "", _SQUARED_PREFACTOR_NOTE, True),
    (7, _t1e7_a, _t1e7_c, "C(n,k)^2 C(3n+k,2n){H(n+k)-H(k)}",
     None, "", _SQUARED_PREFACTOR_NOTE, True),
    (8, _t1e8_a, _t1e8_c, "C(n,k){1+(n-2k)H(k)} = 1", None, "", "", False),
    (9, _t1e9_a, _t1e9_c, "C(n,k)^2{1+2(n-2k)H(k)} = 0",
     _n_at_least(1, "requires n > 0 (the n = 0 sum is 1, not 0)"), "n > 0",
     "closed form 0 holds for n >= 1 only; the empty-range case n = 0 sums to 1", False),
    (10, _t1e10_a, _t1e10_c, "C(n+k,k) C(2n-k,n){1+(n-2k)(H(k)-H(n+k))}", None, "", "", False),
    (11, _t1e11_a, _t1e11_c, "C(n+k,k)^2 C(2n-k,n)^2{1+2(n-2k)(H(k)-H(n+k))}", None, "", "", False),
    (12, _t1e12_a, _t1e12_c, "C(2n,k) C(2n,n+k){1+(n-2k)(H(k)+H(n+k))}", None, "", "", False),
    (13, _t1e13_a, _t1e13_c, "C(n,k) C(2n,k) C(2n,n+k){1+(n-2k)(2H(k)+H(n+k))}", None, "", "", False),
    (14, _t1e14_a, _t1e14_c, "C(n,k) C(n+k,n) C(2n-k,n){1+(n-2k)(2H(k)-H(n+k))}", None, "", "", False),
    (15, _t1e15_a, _t1e15_c, "C(n,k)^2 C(n+k,n) C(2n-k,n){1+(n-2k)(3H(k)-H(n+k))}", None, "", "", False),
    (16, _t1e16_a, _t1e16_c, "C(n,k)^3{1+3(n-2k)H(k)} = (-1)^n", None, "", "", False),
    (17, _t1e17_a, _t1e17_c, "C(n,k)^4{1+4(n-2k)H(k)} = (-1)^n C(2n,n)", None, "", "", False),
    (18, _t1e18_a, _t1e18_c, "C(n,k)^2 C(2n,k) C(2n,n+k){1+(n-2k)(3H(k)+H(n+k))}", None, "", "", False),
    (19, _t1e19_a, _t1e19_c, "C(2n,k)^2 C(2n,n+k)^2{1+2(n-2k)(H(k)+H(n+k))}", None, "", "", False),
    (20, _t1e20_a, _t1e20_c, "{1-(n-2k)H(k)}/C(n,k)", None, "", "", False),
    (21, _t1e21_a, _t1e21_c, "{1-2(n-2k)H(k)}/C(n,k)^2", None, "", "", False),
    (22, _t1e22_a, _t1e22_c, "{1-(n-2k)(H(k)+H(n+k))}/(C(2n,k) C(2n,n+k))",
     None, "",
     "closed form corrected: the commonly printed right side lacks the factor "
     "1/C(2n,n) (fails at n=1 otherwise); cross-checked against the parent theorem", True),
    (23, _t1e23_a, _t1e23_c, "C(n+k,k)/C(2n,k){1-(n-2k)H(n+k)}", None, "", "", False),
    (24, _t1e24_a, _t1e24_c, "C(n+k,k)^2/C(2n,k)^2{1-2(n-2k)H(n+k)}", None, "", "", False),
    (25, _t1e25_a, _t1e25_c, "C(2n,k)/(C(n,k) C(n+k,k)){1-(n-2k)(H(k)-H(n+k))}",
     _n_at_least(2, "requires n > 1 (right side has an n - 1 denominator)"), "n > 1", "", False),
    (26, _t1e26_a, _t1e26_c, "C(2n,k)^2/C(n+k,k)^2{1+2(n-2k)H(n+k)}",
     _n_at_least(1, "requires n > 0 (right side uses H(n-1))"), "n > 0", "", False),
]

TABLE1_RECORDS: tuple[IdentityRecord, ...] = tuple(
    IdentityRecord(
        id=f"t1e{num}", kind="table1", source=f"table 1, entry {num}",
        description=desc, param_names=(), lhs_summand=a, rhs=c,
        constraint=gate, constraint_doc=gate_doc, note=note, corrected=corrected,
    )
    for num, a, c, desc, gate, gate_doc, note, corrected in _T1_DEFS
)


# ---------------------------------------------------------------------------
# table 2: sum_k A(n,k) = sum_l B(n,l)
# ---------------------------------------------------------------------------

def _sum_b(n, term):
    s = Fraction(0)
    for l in range(n + 1):
        s += term(n, l)
    return s


def _central_pref(n: int) -> Fraction:
    # C(1+3n,n) / C(2n,n)^2, shared by several transformation right sides
    return Fraction(C(1 + 3 * n, n), C(2 * n, n) ** 2)


def _t2e1_a(n, k, p):
    return C(n, k) * Fraction(C(n + k, k) ** 3, C(2 * n, k) ** 3) * (
        1 + (n - 2 * k) * (H(k) - 3 * H(n + k))
    )

def _t2e1_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: Fraction(1 + 2 * n, 1 + 2 * n - l)
        * Fraction(C(n + l, l) ** 2, C(1 + 2 * n + l, l)),
    )

def _t2e2_a(n, k, p):
    return C(n, k) ** 2 * Fraction(C(n + k, k) ** 4, C(2 * n, k) ** 4) * (
        1 + 2 * (n - 2 * k) * (H(k) - 2 * H(n + k))
    )

def _t2e2_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: Fraction(
            C(n, l) * C(n + l, l) ** 2 * C(1 + 3 * n, l),
            C(2 * n, l) ** 2 * C(1 + 2 * n + l, l),
        ),
    )

def _t2e3_a(n, k, p):
    return C(n, k) * Fraction(C(n + k, k) ** 2, C(2 * n, k) ** 2) * (
        1 + (n - 2 * k) * (H(k) - 2 * H(n + k))
    )

def _t2e3_b(n, p):
    return _central_pref(n) * _sum_b(
        n, lambda n, l: Fraction(C(n + l, l) ** 2, C(1 + 2 * n + l, l))
    )

def _t2e4_a(n, k, p):
    return C(n, k) ** 3 * Fraction(C(n + k, k) ** 2, C(2 * n, k) ** 2) * (
        1 + (n - 2 * k) * (3 * H(k) - 2 * H(n + k))
    )

def _t2e4_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: (-1) ** l
        * Fraction(C(n, l) * C(n + l, l) ** 2, C(1 + 2 * n + l, l)),
    )

def _t2e5_a(n, k, p):
    return C(n, k) ** 2 * Fraction(C(n + k, k) ** 3, C(2 * n, k) ** 3) * (
        1 + (n - 2 * k) * (2 * H(k) - 3 * H(n + k))
    )

def _t2e5_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: Fraction(
            C(n, l) * C(n + l, l) ** 2, C(2 * n, l) * C(1 + 2 * n + l, l)
        ),
    )

def _t2e6_a(n, k, p):
    return C(n, k) ** 3 * Fraction(C(n + k, k) ** 3, C(2 * n, k) ** 3) * (
        1 + 3 * (n - 2 * k) * (H(k) - H(n + k))
    )

def _t2e6_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: (-1) ** l
        * Fraction(
            C(n, l) ** 2 * C(n + l, l) ** 2, C(2 * n, l) * C(1 + 2 * n + l, l)
        ),
    )

def _t2e7_a(n, k, p):
    return C(n, k) * Fraction(C(2 * n, k) ** 2, C(n + k, k) ** 2) * (
        1 + (n - 2 * k) * (H(k) + 2 * H(n + k))
    )

def _t2e7_b(n, p):
    return _sum_b(
        n,
        lambda n, l: (-1) ** l
        * C(n, l) * Fraction(C(3 * n + l, l), C(n + l, l) ** 2),
    )

def _t2e8_a(n, k, p):
    return C(n, k) ** 4 * Fraction(C(n + k, k), C(2 * n, k)) * (
        1 + (n - 2 * k) * (4 * H(k) - H(n + k))
    )

def _t2e8_b(n, p):
    return _sum_b(
        n,
        lambda n, l: (-1) ** l
        * Fraction(C(n, l) * C(n + l, l) ** 2, C(2 * n, n)),
    )

def _t2e9_a(n, k, p):
    return _t2e4_a(n, k, p)

def _t2e9_b(n, p):
    return _t2e4_b(n, p)

def _t2e10_a(n, k, p):
    return C(n, k) ** 4 * Fraction(C(n + k, k) ** 2, C(2 * n, k) ** 2) * (
        1 + 2 * (n - 2 * k) * (2 * H(k) - H(n + k))
    )

def _t2e10_b(n, p):
    return _central_pref(n) * _sum_b(
        n,
        lambda n, l: (-1) ** l
        * Fraction(C(n, l) * C(n + l, l) ** 3, C(1 + 2 * n + l, l)),
    )

def _t2e11_a(n, k, p):
    return C(n, k) ** 4 * Fraction(C(2 * n, k), C(n + k, k)) * (
        1 + (n - 2 * k) * (4 * H(k) + H(n + k))
    )

def _t2e11_b(n, p):
    return (-1) ** n * _sum_b(
        n,
        lambda n, l: C(n, l) ** 2 * Fraction(C(2 * n + l, l), C(n + l, l)),
    )

def _t2e12_a(n, k, p):
    return C(n, k) ** 5 * Fraction(C(n + k, k), C(2 * n, k)) * (
        1 + (n - 2 * k) * (5 * H(k) - H(n + k))
    )

def _t2e12_b(n, p):
    return Fraction((-1) ** n, C(2 * n, n)) * _sum_b(
        n, lambda n, l: C(n, l) ** 2 * C(n + l, l) ** 2
    )

def _t2e13_a(n, k, p):
    return C(n, k) ** 3 * Fraction(C(2 * n, k) ** 2, C(n + k, k) ** 2) * (
        1 + (n - 2 * k) * (3 * H(k) + 2 * H(n + k))
    )

def _t2e13_b(n, p):
    return (-1) ** n * _sum_b(
        n,
        lambda n, l: Fraction(C(n, l) ** 2 * C(3 * n + l, l), C(n + l, l) ** 2),
    )

def _t2e14_a(n, k, p):
    return C(n, k) * Fraction(C(2 * n, k) ** 3, C(n + k, k) ** 3) * (
        1 + (n - 2 * k) * (H(k) + 3 * H(n + k))
    )

def _t2e14_b(n, p):
    return n * _sum_b(
        n,
        lambda n, l: (-1) ** l
        * Fraction(C(n, l) * C(3 * n + l, l), (2 * n - l) * C(n + l, l) ** 2),
    )

def _t2e15_a(n, k, p):
    return C(n, k) ** 2 * Fraction(C(2 * n, k) ** 3, C(n + k, k) ** 3) * (
        1 + (n - 2 * k) * (2 * H(k) + 3 * H(n + k))
    )

def _t2e15_b(n, p):
    return Fraction((-1) ** n, C(2 * n, n)) * _sum_b(
        n,
        lambda n, l: C(n, l)
        * Fraction(C(2 * n, l) * C(3 * n + l, l), C(n + l, l) ** 2),
    )

def _t2e16_a(n, k, p):
    return C(n, k) ** 5 * (1 + 5 * (n - 2 * k) * H(k))

def _t2e16_b(n, p):
    return (-1) ** n * _sum_b(
        n, lambda n, l: Fraction(C(n, l) ** 2 * C(n + l, n))
    )

def _t2e17_a(n, k, p):
    return C(n, k) ** 6 * (1 + 6 * (n - 2 * k) * H(k))

def _t2e17_b(n, p):
    return (-1) ** n * _sum_b(
        n, lambda n, l: Fraction(C(n, l) ** 2 * C(n + l, n) * C(2 * n - l, n))
    )

def _t2e18_a(n, k, p):
    return C(n, k) ** 5 * Fraction(C(2 * n, k), C(n + k, k)) * (
        1 + (n - 2 * k) * (5 * H(k) + H(n + k))
    )

def _t2e18_b(n, p):
    return (-1) ** n * C(2 * n, n) * _sum_b(
        n,
        lambda n, l: C(n, l) ** 3
        * Fraction(C(2 * n + l, l), C(n + l, l) * C(2 * n, l)),
    )

def _t2e19_a(n, k, p):
    return C(n, k) ** 4 * Fraction(C(2 * n, k) ** 2, C(n + k, k) ** 2) * (
        1 + 2 * (n - 2 * k) * (2 * H(k) + H(n + k))
    )

def _t2e19_b(n, p):
    return (-1) ** n * C(2 * n, n) * _sum_b(
        n,
        lambda n, l: Fraction(
            C(n, l) ** 3 * C(3 * n + l, l), C(n + l, l) ** 2 * C(2 * n, l)
        ),
    )

def _t2e20_a(n, k, p):
    return C(n, k) ** 3 * Fraction(C(2 * n, k) ** 3, C(n + k, k) ** 3) * (
        1 + 3 * (n - 2 * k) * (H(k) + H(n + k))
    )

def _t2e20_b(n, p):
    return (-1) ** n * Fraction(C(3 * n, n), C(2 * n, n)) * _sum_b(
        n,
        lambda n, l: C(n, l) ** 2
        * Fraction(
            C(2 * n, l) * C(3 * n + l, l), C(n + l, l) ** 2 * C(3 * n, l)
        ),
    )

def _t2e21_a(n, k, p):
    return C(n, k) ** 2 * Fraction(C(2 * n, k) ** 4, C(n + k, k) ** 4) * (
        1 + 2 * (n - 2 * k) * (H(k) + 2 * H(n + k))
    )

def _t2e21_b(n, p):
    return (-1) ** n * Fraction(C(4 * n, n), C(2 * n, n) ** 2) * _sum_b(
        n,
        lambda n, l: C(n, l)
        * Fraction(
            C(2 * n, l) ** 2 * C(3 * n + l, l), C(4 * n, l) * C(n + l, l) ** 2
        ),
    )


_T2_DEFS = [
    (1, _t2e1_a, _t2e1_b, "C(n,k) C(n+k,k)^3/C(2n,k)^3{1+(n-2k)(H(k)-3H(n+k))}", None, ""),
    (2, _t2e2_a, _t2e2_b, "C(n,k)^2 C(n+k,k)^4/C(2n,k)^4{1+2(n-2k)(H(k)-2H(n+k))}", None, ""),
    (3, _t2e3_a, _t2e3_b, "C(n,k) C(n+k,k)^2/C(2n,k)^2{1+(n-2k)(H(k)-2H(n+k))}", None, ""),
    (4, _t2e4_a, _t2e4_b, "C(n,k)^3 C(n+k,k)^2/C(2n,k)^2{1+(n-2k)(3H(k)-2H(n+k))}", None, ""),
    (5, _t2e5_a, _t2e5_b, "C(n,k)^2 C(n+k,k)^3/C(2n,k)^3{1+(n-2k)(2H(k)-3H(n+k))}", None, ""),
    (6, _t2e6_a, _t2e6_b, "C(n,k)^3 C(n+k,k)^3/C(2n,k)^3{1+3(n-2k)(H(k)-H(n+k))}", None, ""),
    (7, _t2e7_a, _t2e7_b, "C(n,k) C(2n,k)^2/C(n+k,k)^2{1+(n-2k)(H(k)+2H(n+k))}", None, ""),
    (8, _t2e8_a, _t2e8_b, "C(n,k)^4 C(n+k,k)/C(2n,k){1+(n-2k)(4H(k)-H(n+k))}", None, ""),
    (9, _t2e9_a, _t2e9_b, "textual twin of entry 4 from a different parent transformation", None, ""),
    (10, _t2e10_a, _t2e10_b, "C(n,k)^4 C(n+k,k)^2/C(2n,k)^2{1+2(n-2k)(2H(k)-H(n+k))}", None, ""),
    (11, _t2e11_a, _t2e11_b, "C(n,k)^4 C(2n,k)/C(n+k,k){1+(n-2k)(4H(k)+H(n+k))}", None, ""),
    (12, _t2e12_a, _t2e12_b, "C(n,k)^5 C(n+k,k)/C(2n,k){1+(n-2k)(5H(k)-H(n+k))}", None, ""),
    (13, _t2e13_a, _t2e13_b, "C(n,k)^3 C(2n,k)^2/C(n+k,k)^2{1+(n-2k)(3H(k)+2H(n+k))}", None, ""),
    (14, _t2e14_a, _t2e14_b, "C(n,k) C(2n,k)^3/C(n+k,k)^3{1+(n-2k)(H(k)+3H(n+k))}",
     _n_at_least(1, "requires n > 0 (right side has a 2n - l denominator at l = 0)"), "n > 0"),
    (15, _t2e15_a, _t2e15_b, "C(n,k)^2 C(2n,k)^3/C(n+k,k)^3{1+(n-2k)(2H(k)+3H(n+k))}", None, ""),
    (16, _t2e16_a, _t2e16_b, "C(n,k)^5{1+5(n-2k)H(k)}", None, ""),
    (17, _t2e17_a, _t2e17_b, "C(n,k)^6{1+6(n-2k)H(k)}", None, ""),
    (18, _t2e18_a, _t2e18_b, "C(n,k)^5 C(2n,k)/C(n+k,k){1+(n-2k)(5H(k)+H(n+k))}", None, ""),
    (19, _t2e19_a, _t2e19_b, "C(n,k)^4 C(2n,k)^2/C(n+k,k)^2{1+2(n-2k)(2H(k)+H(n+k))}", None, ""),
    (20, _t2e20_a, _t2e20_b, "C(n,k)^3 C(2n,k)^3/C(n+k,k)^3{1+3(n-2k)(H(k)+H(n+k))}", None, ""),
    (21, _t2e21_a, _t2e21_b, "C(n,k)^2 C(2n,k)^4/C(n+k,k)^4{1+2(n-2k)(H(k)+2H(n+k))}", None, ""),
]

TABLE2_RECORDS: tuple[IdentityRecord, ...] = tuple(
    IdentityRecord(
        id=f"t2e{num}", kind="table2", source=f"table 2, entry {num}",
        description=desc, param_names=(), lhs_summand=a, rhs=b,
        constraint=gate, constraint_doc=gate_doc,
    )
    for num, a, b, desc, gate, gate_doc in _T2_DEFS
)


def _t2e4_closed_rhs(n, p):
    return entry4_closed(n)


AUX_TABLE_RECORDS: tuple[IdentityRecord, ...] = (
    IdentityRecord(
        id="t2e4_closed", kind="aux", source="table 2, entry 4 (closed evaluation)",
        description="entry-4 left side equals 0 for odd n and "
        "(-1)^m (3m)!/(m!)^3 / C(4m,2m)^2 for n = 2m",
        param_names=(), lhs_summand=_t2e4_a, rhs=_t2e4_closed_rhs,
    ),
)
