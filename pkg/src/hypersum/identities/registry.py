"""Catalog registry: stable ids, default verification grids, check entry points.

Record ids: ``thm1``..``thm12`` for the theorems, ``t1e1``..``t1e26`` and
``t2e1``..``t2e21`` for the two tables, plus three auxiliary records
(``wench``, ``square_hk``, ``t2e4_closed``) -- 62 records in all.  Family
ids are listed in ``families.FAMILY_ORDER``.

The default grids are the documented verification bounds: they are what the
command-line ``verify`` runs and what the acceptance suite pins.  Flags may
shrink them; growing past them is gated behind an explicit opt-in because
the transformation records' cost rises quickly with ``n``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional

from ..exactnum import Dual, Scalar
from .families import FAMILIES, FAMILY_ORDER
from .records import (
    BinomialFamily,
    CheckResult,
    DerivationResult,
    DomainViolation,
    IdentityRecord,
)
from .tables import AUX_TABLE_RECORDS, TABLE1_RECORDS, TABLE2_RECORDS
from .theorems import AUX_THEOREM_RECORDS, THEOREM_RECORDS

__all__ = [
    "registry",
    "lookup",
    "family_lookup",
    "check_identity",
    "check_binomial_family",
    "derive_via_d0",
    "default_param_grid",
    "default_n_max",
    "manifest",
    "FAMILY_ORDER",
]

_ALL_RECORDS: tuple[IdentityRecord, ...] = (
    THEOREM_RECORDS + TABLE1_RECORDS + TABLE2_RECORDS
    + AUX_THEOREM_RECORDS + AUX_TABLE_RECORDS
)

_BY_ID: dict[str, IdentityRecord] = {r.id: r for r in _ALL_RECORDS}
assert len(_BY_ID) == len(_ALL_RECORDS), "record ids must be unique"


def registry() -> tuple[IdentityRecord, ...]:
    """Every record, in catalog order (theorems, table 1, table 2, auxiliary)."""
    return _ALL_RECORDS


def lookup(record_id: str) -> IdentityRecord:
    try:
        return _BY_ID[record_id]
    except KeyError:
        raise KeyError(f"no record with id {record_id!r}") from None


def family_lookup(family_id: str) -> BinomialFamily:
    try:
        return FAMILIES[family_id]
    except KeyError:
        raise KeyError(f"no binomial family with id {family_id!r}") from None


def check_identity(record_id: str, params: dict, n: int) -> CheckResult:
    """Exact left/right evaluation of one record instance.

    Raises ``DomainViolation`` (naming the violated constraint) before any
    evaluation when the cell is out of domain.
    """
    return lookup(record_id).check(params, n)


def check_binomial_family(family_id: str, params: dict, n: int, x: Scalar) -> CheckResult:
    """Exact two-sided evaluation of a parent identity at the scalar ``x``."""
    return family_lookup(family_id).check_at(params, n, x)


def derive_via_d0(family_id: str, params: dict, n: int) -> DerivationResult:
    """Evaluate both sides of a parent identity at the jet seed ``0 + eps``.

    A value-slot match certifies the underlying classical summation
    instance; a derivative-slot match certifies the harmonic-number
    identity the family generates.
    """
    fam = family_lookup(family_id)
    res = fam.check_at(params, n, Dual(Fraction(0), Fraction(1)))
    lhs = res.lhs if isinstance(res.lhs, Dual) else Dual(Fraction(res.lhs), Fraction(0))
    rhs = res.rhs if isinstance(res.rhs, Dual) else Dual(Fraction(res.rhs), Fraction(0))
    return DerivationResult(family_id, dict(params), n, lhs, rhs)


# ---------------------------------------------------------------------------
# documented default grids
# ---------------------------------------------------------------------------

_PS_COMBOS = tuple(
    {"lam": lam, "mu": mu, "nu": nu}
    for lam in range(4)
    for mu in range(4)
    for nu in range(4)
    if lam > 1 + mu + nu
)

_TWO_PARAM = tuple(
    {"b": b, "d": d} for b in range(3) for d in range(3)
)

_FOUR_PARAM = tuple(
    {"b": b, "c": c, "d": d, "e": e}
    for b in range(3)
    for c in range(3)
    for d in range(3)
    for e in range(3)
)

_LAM_MU = tuple({"lam": lam, "mu": mu} for lam in range(4) for mu in range(4))
_LAM_ONLY = tuple({"lam": lam} for lam in range(4))

_GRIDS: dict[str, tuple[dict, ...]] = {
    "thm1": _LAM_MU,
    "thm2": _PS_COMBOS, "thm3": _PS_COMBOS, "thm4": _PS_COMBOS,
    "thm5": _TWO_PARAM, "thm6": _TWO_PARAM, "thm7": _TWO_PARAM,
    "thm8": _FOUR_PARAM, "thm9": _FOUR_PARAM, "thm10": _FOUR_PARAM,
    "thm11": _FOUR_PARAM, "thm12": _FOUR_PARAM,
    "wench": _LAM_ONLY,
    "chu": _LAM_MU,
    "ps_lam": _PS_COMBOS, "ps_mu": _PS_COMBOS, "ps_nu": _PS_COMBOS,
    "dd_1": _TWO_PARAM, "dd_2": _TWO_PARAM, "dd_3": _TWO_PARAM,
    "wh_1": _FOUR_PARAM, "wh_2": _FOUR_PARAM, "wh_3": _FOUR_PARAM,
    "wh_4": _FOUR_PARAM, "wh_5": _FOUR_PARAM,
}

# Whipple-route checks cost O(n^2) scalar terms per cell, so their default
# n cap is lower than everything else's.
_N_MAX_DEFAULT = 8
_N_MAX_SMALL = 6
_SMALL_N_IDS = frozenset(
    {"thm8", "thm9", "thm10", "thm11", "thm12",
     "wh_1", "wh_2", "wh_3", "wh_4", "wh_5",
     "t2e4_closed"}
    | {f"t2e{i}" for i in range(1, 22)}
)


def default_param_grid(any_id: str, param_max: Optional[int] = None) -> tuple[dict, ...]:
    """Documented parameter grid for a record or family id, optionally capped."""
    grid = _GRIDS.get(any_id, ({},))
    if param_max is None:
        return grid
    return tuple(p for p in grid if all(v <= param_max for v in p.values()))


def default_n_max(any_id: str) -> int:
    return _N_MAX_SMALL if any_id in _SMALL_N_IDS else _N_MAX_DEFAULT


def manifest() -> list[dict]:
    """Structured catalog listing (id, kind, source, parameters, constraints)."""
    out = []
    for rec in _ALL_RECORDS:
        out.append(
            {
                "id": rec.id,
                "kind": rec.kind,
                "source": rec.source,
                "description": rec.description,
                "params": list(rec.param_names),
                "constraint": rec.constraint_doc,
                "n_max": default_n_max(rec.id),
                "note": rec.note,
                "corrected": rec.corrected,
            }
        )
    for fid in FAMILY_ORDER:
        fam = FAMILIES[fid]
        out.append(
            {
                "id": fam.id,
                "kind": "family",
                "source": fam.source,
                "description": fam.description,
                "params": list(fam.param_names),
                "constraint": fam.constraint_doc,
                "n_max": default_n_max(fam.id),
                "derived_theorem": fam.derived_theorem,
            }
        )
    return out
