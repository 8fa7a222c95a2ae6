"""Reflection families, monic weight ratios, and exact decay probes."""

from fractions import Fraction as F

import pytest

from hypersum.combinatorics import HarmonicCache, binomial_int as C, harmonic
from hypersum.limits import (
    MonicRationalWeight,
    ReflectionFamily,
    binomial_ratio_weights,
    decay_probe,
    limit_sum,
    paired_limit_sum,
    reflection_check,
    reflex_family,
    unit_weights,
)


class TestWeights:
    def test_monic_required(self):
        with pytest.raises(ValueError):
            MonicRationalWeight((F(0), F(2)), (F(0), F(1)))

    def test_equal_degree_required(self):
        with pytest.raises(ValueError):
            MonicRationalWeight((F(1),), (F(0), F(1)))

    def test_ratio_value(self):
        w = MonicRationalWeight((F(1), F(1)), (F(2), F(1)))  # (y+1)/(y+2)
        assert w.ratio_at(10) == F(11, 12)

    def test_vanishing_denominator_named(self):
        w = MonicRationalWeight((F(0), F(1)), (F(-10), F(1)))  # y/(y-10)
        with pytest.raises(ValueError) as err:
            w.ratio_at(10)
        assert "y = 10" in str(err.value)

    def test_unit_weights_are_identity_ratios(self):
        for w in unit_weights(4):
            assert w.ratio_at(7) == 1

    @pytest.mark.parametrize("n", range(1, 6))
    def test_binomial_ratio_weights_match_their_binomials(self, n):
        # P_k(y)/Q_k(y) must reproduce C(k+yn,k)/C(n+yn,k) at integer y
        ws = binomial_ratio_weights(n)
        for k in range(n + 1):
            assert ws[k].degree == k
            for y in (1, 2, 5):
                want = F(C(k + y * n, k), C(n + y * n, k))
                assert ws[k].ratio_at(y) == want


class TestReflectionFamilies:
    def test_standard_family_is_antisymmetric(self):
        assert reflection_check(reflex_family(3, 2), 4)

    def test_all_small_exponents(self):
        for mu in range(4):
            for nu in range(3):
                for n in range(5):
                    assert reflection_check(reflex_family(mu, nu), n)

    def test_symmetric_family_fails(self):
        fam = ReflectionFamily(f=lambda n, k: F(C(n, k)), mu=0, nu=0)
        assert not reflection_check(fam, 1)
        assert not reflection_check(fam, 4)

    def test_midpoint_forced_to_zero(self):
        fam = reflex_family(2, 1)
        assert fam.f(4, 2) == 0


class TestLimitSum:
    def test_degenerate_n_is_zero(self):
        fam = reflex_family(1, 0)
        assert limit_sum(fam, unit_weights(0), 0, 10) == 0

    def test_unit_weight_pairing_structure(self):
        # with P = Q the sum collapses to paired harmonic differences
        fam = reflex_family(0, 0)
        n, y = 3, 10
        direct = limit_sum(fam, unit_weights(n), n, y)
        paired = sum(
            fam.f(n, k) * (harmonic(n * y + k) - harmonic(n * y + n - k))
            for k in range(n + 1)
            if 2 * k < n
        )
        assert direct == paired

    def test_power_one_hand_value(self):
        # f(1,k) = 1-2k, unit weights: S(y) = H_y - H_{y+1} = -1/(y+1)
        fam = reflex_family(0, 0)
        for y in (1, 10, 100):
            assert limit_sum(fam, unit_weights(1), 1, y) == F(-1, y + 1)

    def test_reflection_precondition_enforced(self):
        fam = ReflectionFamily(f=lambda n, k: F(C(n, k)), mu=0, nu=0)
        with pytest.raises(ValueError) as err:
            limit_sum(fam, unit_weights(2), 2, 10)
        assert "reflection" in str(err.value)

    def test_bad_y(self):
        with pytest.raises(ValueError):
            limit_sum(reflex_family(1, 0), unit_weights(1), 1, 0)

    @pytest.mark.parametrize("n", range(7))
    def test_involution_pairing_identity(self, n):
        # the half-paired rewriting agrees with the direct sum, exactly
        fam = reflex_family(3, 2)
        ws = binomial_ratio_weights(n)
        y = 10
        assert paired_limit_sum(fam, ws, n, y) == limit_sum(fam, ws, n, y)


class TestDecayProbe:
    def test_example_family_decays(self):
        fam = reflex_family(3, 2)
        ws = binomial_ratio_weights(3)
        rep = decay_probe(fam, ws, 3, (10, 100, 1000))
        assert rep.monotone_decreasing_magnitude
        assert abs(rep.values[1]) < abs(rep.values[0])
        assert rep.final_magnitude == abs(rep.values[-1])

    def test_entry4_weights_two_decades(self):
        fam = reflex_family(3, 2)
        ws = binomial_ratio_weights(3)
        s10 = limit_sum(fam, ws, 3, 10)
        s100 = limit_sum(fam, ws, 3, 100)
        assert abs(s100) < abs(s10)

    def test_constant_zero_counts_as_converged(self):
        fam = reflex_family(1, 0)
        rep = decay_probe(fam, unit_weights(0), 0, (10, 100))
        assert rep.values == (F(0), F(0))
        assert rep.monotone_decreasing_magnitude

    def test_non_increasing_points_rejected(self):
        with pytest.raises(ValueError):
            decay_probe(reflex_family(1, 0), unit_weights(1), 1, (100, 10))

    def test_nonpositive_points_rejected(self):
        with pytest.raises(ValueError):
            decay_probe(reflex_family(1, 0), unit_weights(1), 1, (0, 10))

    def test_violating_family_rejected_not_reported(self):
        fam = ReflectionFamily(f=lambda n, k: F(1), mu=0, nu=0)
        with pytest.raises(ValueError):
            decay_probe(fam, unit_weights(2), 2, (10, 100))

    def test_shared_cache_consistency(self):
        cache = HarmonicCache()
        fam = reflex_family(2, 1)
        ws = binomial_ratio_weights(2)
        a = decay_probe(fam, ws, 2, (10, 100), cache)
        b = decay_probe(fam, ws, 2, (10, 100))
        assert a.values == b.values
