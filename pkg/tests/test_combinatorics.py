"""Harmonic numbers, rising factorials, and generalized binomials."""

import threading
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersum.combinatorics import (
    HarmonicCache,
    binomial_gen,
    binomial_int,
    harmonic,
    harmonic_gen,
    pochhammer,
)
from hypersum.exactnum import Dual

small_rationals = st.fractions(max_numerator=40, max_denominator=12)


def _harmonic_direct(n: int) -> F:
    return sum((F(1, k) for k in range(1, n + 1)), F(0))


class TestHarmonic:
    def test_base_case(self):
        assert harmonic(0) == 0

    def test_single_term(self):
        assert harmonic(1) == 1

    def test_h3(self):
        assert harmonic(3) == F(11, 6)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            harmonic(-1)

    @pytest.mark.parametrize("n", [2, 7, 25, 64])
    def test_matches_direct_summation(self, n):
        assert harmonic(n) == _harmonic_direct(n)

    def test_cache_transparency(self):
        fresh = HarmonicCache()
        for n in (0, 1, 5, 17, 40):
            assert harmonic(n) == harmonic(n, fresh) == _harmonic_direct(n)

    def test_sparse_streaming_path(self):
        cache = HarmonicCache(dense_limit=16)
        assert cache.get(100) == _harmonic_direct(100)
        # backward and repeat requests hit checkpoints, not recomputation drift
        assert cache.get(99) == _harmonic_direct(99)
        assert cache.get(100) == _harmonic_direct(100)
        assert cache.get(101) == _harmonic_direct(101)

    def test_table_recurrence_invariant(self):
        cache = HarmonicCache()
        cache.get(30)
        table = cache.snapshot()
        assert table[0] == 0
        for n in range(1, 31):
            assert table[n] == table[n - 1] + F(1, n)

    def test_concurrent_fills_agree(self):
        cache = HarmonicCache(dense_limit=64)
        results = {}

        def worker(seed):
            out = [cache.get(n) for n in range(seed, 200, 7)]
            results[seed] = out

        threads = [threading.Thread(target=worker, args=(s,)) for s in range(5)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for seed, values in results.items():
            for n, v in zip(range(seed, 200, 7), values):
                assert v == _harmonic_direct(n)


class TestHarmonicGen:
    def test_reduces_to_plain_harmonic(self):
        assert harmonic_gen(2, 0) == F(3, 2)

    def test_single_shifted_term(self):
        assert harmonic_gen(1, F(1, 2)) == F(2, 3)

    def test_dual_argument(self):
        out = harmonic_gen(2, Dual(0, 1))
        assert (out.value, out.deriv) == (F(3, 2), F(-5, 4))

    def test_pole_names_the_shift(self):
        with pytest.raises(ValueError) as err:
            harmonic_gen(3, -2)
        assert "-2" in str(err.value)

    def test_dual_pole_detected_by_value_part(self):
        with pytest.raises(ValueError):
            harmonic_gen(3, Dual(-1, 1))


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(5, 0) == 1

    @pytest.mark.parametrize("n", range(7))
    def test_reduces_to_factorial(self, n):
        import math

        assert pochhammer(1, n) == math.factorial(n)

    def test_half(self):
        assert pochhammer(F(1, 2), 2) == F(3, 4)

    @settings(max_examples=60)
    @given(small_rationals, st.integers(min_value=0, max_value=10))
    def test_shift_recurrence(self, c, n):
        assert pochhammer(c, n + 1) == pochhammer(c, n) * (c + n)

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(1, -1)


class TestBinomialInt:
    def test_plain(self):
        assert binomial_int(4, 2) == 6

    def test_k_above_n(self):
        assert binomial_int(3, 5) == 0

    def test_zero_zero(self):
        assert binomial_int(0, 0) == 1

    def test_negative_k(self):
        assert binomial_int(5, -1) == 0

    @pytest.mark.parametrize("n,k", [(-1, 0), (-1, 2), (-3, 2), (-2, 5)])
    def test_negative_top_matches_generalized(self, n, k):
        assert binomial_int(n, k) == binomial_gen(n, k)


class TestBinomialGen:
    def test_dual_top_shift(self):
        out = binomial_gen(Dual(0, 1) + 4, 2)
        assert (out.value, out.deriv) == (6, F(7, 2))

    def test_negative_integer_top(self):
        assert binomial_gen(-1, 2) == 1

    def test_half_top(self):
        assert binomial_gen(F(1, 2), 1) == F(1, 2)

    def test_negative_lower_rejected(self):
        with pytest.raises(ValueError):
            binomial_gen(F(1, 2), -1)

    @settings(max_examples=80)
    @given(small_rationals, st.integers(min_value=1, max_value=12))
    def test_pascal_recurrence(self, z, m):
        assert binomial_gen(z, m) == binomial_gen(z - 1, m) + binomial_gen(z - 1, m - 1)

    @pytest.mark.parametrize("n", range(9))
    def test_agrees_with_integer_binomial(self, n):
        for k in range(n + 1):
            assert binomial_gen(n, k) == binomial_int(n, k)


class TestDerivativeLaws:
    """The two binomial derivative laws, as executable statements."""

    def test_top_shift_law(self):
        for n in range(13):
            for m in range(n + 1):
                out = binomial_gen(Dual(0, 1) + n, m)
                assert out.value == binomial_int(n, m)
                assert out.deriv == binomial_int(n, m) * (harmonic(n) - harmonic(n - m))

    def test_inverse_top_shift_law(self):
        for n in range(13):
            for m in range(n + 1):
                out = 1 / binomial_gen(Dual(0, 1) + n, m)
                want = (harmonic(n - m) - harmonic(n)) / binomial_int(n, m)
                assert out.deriv == want
