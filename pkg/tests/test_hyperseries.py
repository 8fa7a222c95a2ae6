"""Terminating series evaluation against the four classical closed forms.

The law grids are fixed (not random) so any failure reproduces bit for bit.
"""

from fractions import Fraction as F

import pytest

from hypersum.exactnum import Dual, value_part
from hypersum.hyperseries import (
    HypergeometricSpec,
    SeriesDomainError,
    chu_vandermonde_lhs,
    chu_vandermonde_rhs,
    dougall_dixon_lhs,
    dougall_dixon_rhs,
    eval_pfq,
    saalschutz_lhs,
    saalschutz_rhs,
    whipple_lhs,
    whipple_rhs,
)

GRID = (F(1, 2), F(-1, 2), F(1, 3), F(-1, 3), F(2), F(7, 5))


def _seed(v):
    return Dual(F(v), F(1))


def _law_sweep(builder, rhs_fn, cells):
    checked = skipped = 0
    for args in cells:
        try:
            lhs = eval_pfq(builder(*args))
            rhs = rhs_fn(*args)
        except SeriesDomainError:
            skipped += 1
            continue
        assert not (lhs - rhs), f"law violated at {args}"
        checked += 1
    return checked, skipped


class TestEvalPfq:
    def test_two_term_sum(self):
        spec = HypergeometricSpec(upper=(-1, 2), lower=(5,), argument=1)
        assert eval_pfq(spec) == F(3, 5)

    def test_degenerate_termination(self):
        spec = HypergeometricSpec(upper=(0, 7), lower=(3,), argument=1)
        assert eval_pfq(spec) == 1

    def test_alternating_collapse(self):
        # (1 - 1)^2 written as a series
        spec = HypergeometricSpec(upper=(-2, 1), lower=(1,), argument=1)
        assert eval_pfq(spec) == 0

    def test_termination_parameter_must_be_integer(self):
        with pytest.raises(SeriesDomainError):
            HypergeometricSpec(upper=(F(-3, 2), 1), lower=(2,), argument=1)

    def test_bad_lower_parameter_rejected_at_construction(self):
        with pytest.raises(SeriesDomainError) as err:
            HypergeometricSpec(upper=(-3, 1), lower=(-1,), argument=1)
        assert "-1" in str(err.value)

    def test_non_integer_lower_parameter_fine(self):
        spec = HypergeometricSpec(upper=(-3, 1), lower=(F(-1, 2),), argument=1)
        eval_pfq(spec)

    def test_dual_lower_hitting_zero_raises(self):
        # lower value part -1 is reached at k = 2
        with pytest.raises(SeriesDomainError):
            HypergeometricSpec(upper=(-3, 1), lower=(Dual(-1, 1),), argument=1)

    def test_explicit_truncation(self):
        spec = HypergeometricSpec(
            upper=(F(1, 2), 1), lower=(2,), argument=1, truncation=3
        )
        # degree-3 partial sum computed directly from the term formula
        from hypersum.combinatorics import pochhammer

        direct = sum(
            pochhammer(F(1, 2), k) * pochhammer(1, k)
            / (pochhammer(1, k) * pochhammer(2, k))
            for k in range(4)
        )
        assert eval_pfq(spec) == direct

    def test_well_poised_pair_requires_unit_gap(self):
        with pytest.raises(SeriesDomainError):
            HypergeometricSpec(
                upper=(-2, 3), lower=(1,), argument=1, well_poised_pair=(1, 0)
            )


class TestOracleValues:
    def test_chu_matches_series(self):
        assert chu_vandermonde_rhs(2, 5, 1) == F(3, 5)

    def test_chu_zero_numerator_parameter(self):
        for n in range(6):
            assert chu_vandermonde_rhs(0, F(7, 5), n) == 1

    def test_chu_half_parameters(self):
        assert chu_vandermonde_rhs(F(1, 2), F(3, 2), 2) == F(8, 15)

    def test_saalschutz_empty(self):
        assert saalschutz_rhs(1, 1, 3, 0) == 1

    def test_saalschutz_two_term_hand_sum(self):
        assert saalschutz_rhs(1, 1, 3, 1) == F(4, 3)
        assert eval_pfq(saalschutz_lhs(1, 1, 3, 1)) == F(4, 3)

    def test_saalschutz_vanishing_numerator(self):
        assert saalschutz_rhs(-1, 2, 2, 1) == 0

    def test_dougall_dixon_empty(self):
        assert dougall_dixon_rhs(F(7, 5), F(1, 2), F(1, 3), 0) == 1

    def test_dougall_dixon_parameter_cancellation(self):
        for n in range(5):
            assert dougall_dixon_rhs(F(7, 5), 0, F(1, 2), n) == 1

    def test_dougall_dixon_hand_value(self):
        assert dougall_dixon_rhs(4, 1, 1, 1) == F(15, 16)
        assert eval_pfq(dougall_dixon_lhs(4, 1, 1, 1)) == F(15, 16)

    def test_whipple_empty(self):
        assert whipple_rhs(6, 1, 1, 1, 1, 0) == 1

    def test_whipple_hand_value(self):
        assert whipple_rhs(6, 1, 1, 1, 1, 1) == F(1295, 1296)
        assert eval_pfq(whipple_lhs(6, 1, 1, 1, 1, 1)) == F(1295, 1296)

    def test_zero_denominator_is_named(self):
        with pytest.raises(SeriesDomainError) as err:
            chu_vandermonde_rhs(1, 0, 1)
        assert "(c)_n" in str(err.value)


class TestClassicalLaws:
    def test_chu_vandermonde_law(self):
        cells = [(a, c, n) for a in GRID for c in GRID for n in range(9)]
        cells += [(_seed(a), c, n) for a in GRID for c in GRID for n in range(5)]
        cells += [(a, _seed(c), n) for a in GRID for c in GRID for n in range(5)]
        checked, _ = _law_sweep(chu_vandermonde_lhs, chu_vandermonde_rhs, cells)
        assert checked >= 200

    def test_saalschutz_law(self):
        cells = [(a, b, c, n) for a in GRID for b in GRID for c in GRID
                 for n in range(7)]
        cells += [(_seed(a), b, c, n) for a in GRID[:3] for b in GRID[:3]
                  for c in GRID[:3] for n in range(4)]
        checked, _ = _law_sweep(saalschutz_lhs, saalschutz_rhs, cells)
        assert checked >= 200

    def test_dougall_dixon_law(self):
        cells = [(a, b, d, n) for a in GRID for b in GRID for d in GRID
                 for n in range(7)]
        cells += [(_seed(a), b, d, n) for a in GRID[:3] for b in GRID[:3]
                  for d in GRID[:3] for n in range(4)]
        checked, _ = _law_sweep(dougall_dixon_lhs, dougall_dixon_rhs, cells)
        assert checked >= 200

    def test_whipple_law(self):
        av = (F(2), F(-1, 2), F(7, 5), F(1, 3))
        bv = (F(1, 2), F(-1, 3))
        cells = [(a, b, c, d, e, n)
                 for a in av for b in bv for c in bv for d in bv for e in bv
                 for n in range(4)]
        cells += [(_seed(a), b, c, d, e, n)
                  for a in av[:2] for b in bv for c in bv for d in bv for e in bv
                  for n in range(3)]
        checked, _ = _law_sweep(whipple_lhs, whipple_rhs, cells)
        assert checked >= 200


class TestScalarGenericity:
    """Value parts of jet evaluations equal the plain rational evaluations."""

    @pytest.mark.parametrize("x0", GRID)
    def test_series_value_part(self, x0):
        for n in range(5):
            plain = eval_pfq(chu_vandermonde_lhs(x0, F(7, 5), n))
            jet = eval_pfq(chu_vandermonde_lhs(_seed(x0), F(7, 5), n))
            assert value_part(jet) == plain

    @pytest.mark.parametrize("x0", GRID)
    def test_oracle_value_parts(self, x0):
        for n in range(5):
            assert value_part(chu_vandermonde_rhs(_seed(x0), F(7, 5), n)) == \
                chu_vandermonde_rhs(x0, F(7, 5), n)
            assert value_part(saalschutz_rhs(_seed(x0), F(1, 2), F(7, 5), n)) == \
                saalschutz_rhs(x0, F(1, 2), F(7, 5), n)
            assert value_part(dougall_dixon_rhs(_seed(x0), F(1, 3), F(1, 2), n)) == \
                dougall_dixon_rhs(x0, F(1, 3), F(1, 2), n)
