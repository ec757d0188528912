import math

import pytest

from qbalance.errors import DecodeError
from qbalance.oracle import census_bad_a, definitional_gamma, roundtrip_all
from qbalance.scheme_a import (
    Classification,
    classify,
    count_bad,
    count_bad_trig,
    decode_a,
    encode_a,
    gamma_count_a,
    gamma_counts_a,
    gamma_set_a,
    optimal_redundancy,
    rho_a_bound,
)
from qbalance.words import BitWord, all_words, balancing_indices, weight


def W(s):
    return BitWord.from_str(s)


class TestClassify:
    def test_worked_example(self):
        assert classify(W("11100000"), 2) is Classification.TYPE0_GOOD

    def test_bad_row(self):
        assert classify(W("01100110"), 2) is Classification.TYPE0_BAD

    def test_q_zero_always_type1(self):
        assert all(classify(w, 0) is Classification.TYPE1_GOOD for w in all_words(8))

    def test_q_out_of_range(self):
        with pytest.raises(ValueError):
            classify(W("0110"), 3)


class TestGammaSet:
    def test_worked_example(self):
        assert gamma_set_a(W("10011111"), 2) == [0, 1, 3, 6, 7, 8]

    def test_monotone_staircase(self):
        # 1^{m+q} 0^{m-q}: the running sum climbs to its peak, then repeats
        assert gamma_set_a(W("11111100"), 2) == [0, 1, 2, 3, 4, 5, 6]

    def test_alternating(self):
        assert gamma_set_a(W("0101"), 0) == [0, 1]

    def test_wrong_weight(self):
        with pytest.raises(ValueError):
            gamma_set_a(W("0101"), 1)


class TestEncode:
    def test_type0_good_row(self):
        res = encode_a(W("11100000"), 2)
        assert str(res.codeword) == "10011111"
        assert str(res.prefix) == "00001"
        assert res.tau == 1

    def test_type1_good_row(self):
        res = encode_a(W("01100000"), 2)
        assert str(res.codeword) == "10011111"
        assert str(res.prefix) == "01101"
        assert res.tau == 8

    def test_type0_bad_row(self):
        res = encode_a(W("01100110"), 2)
        assert str(res.codeword) == "10011111"
        assert str(res.prefix) == "101010110"  # 10 | 101 | 0110

    def test_q0_prefix_is_bare_rank(self):
        res = encode_a(W("0110"), 0)
        assert res.tau == 0
        assert gamma_set_a(W("0110"), 0) == [0, 1, 3]
        assert str(res.prefix) == "00"  # rank 0 on ceil(log2 3) = 2 bits

    def test_tau_is_minimal(self):
        for w in all_words(10):
            res = encode_a(w, 1)
            if res.classification is Classification.TYPE1_GOOD:
                assert res.tau == balancing_indices(w, 1)[0]

    def test_codeword_weight_invariant(self):
        for q in (0, 1, 2):
            for w in all_words(8):
                assert weight(encode_a(w, q).codeword) == 4 + q


class TestDecode:
    def test_inverts_worked_example(self):
        assert decode_a(W("10011111"), W("00001"), 8, 2) == W("11100000")

    def test_inverts_bad_row(self):
        assert decode_a(W("10011111"), W("101010110"), 8, 2) == W("01100110")

    @pytest.mark.parametrize("q", [0, 1, 2])
    def test_roundtrip_exhaustive_n12(self, q):
        ok, witness = roundtrip_all("a", 12, q)
        assert ok, f"first failure at {witness}"

    @pytest.mark.parametrize("n,q", [(32, 0), (32, 3), (64, 2), (64, 5)])
    def test_roundtrip_randomized_large_n(self, n, q):
        import random

        rng = random.Random(n * 100 + q)
        for _ in range(300):
            x = BitWord(rng.getrandbits(n), n)
            res = encode_a(x, q)
            assert weight(res.codeword) == n // 2 + q
            assert decode_a(res.codeword, res.prefix, n, q) == x

    def test_malformed_rank(self):
        # |Gamma(10011111)| = 6 -> ranks 6 and 7 are unused codepoints
        with pytest.raises(DecodeError):
            decode_a(W("10011111"), W("00111"), 8, 2)

    def test_short_read(self):
        with pytest.raises(DecodeError):
            decode_a(W("10011111"), W("10101"), 8, 2)

    def test_trailing_garbage(self):
        with pytest.raises(DecodeError):
            decode_a(W("10011111"), W("000010"), 8, 2)


class TestCountBad:
    @pytest.mark.parametrize("n", [4, 8, 16, 64])
    def test_q0_q1_no_bad_words(self, n):
        assert count_bad(n, 0) == 0
        assert count_bad(n, 1) == 0

    def test_small_census(self):
        assert count_bad(4, 2) == 8

    @pytest.mark.parametrize("n,q", [(8, 2), (8, 3), (10, 2), (12, 3), (14, 3)])
    def test_matches_census(self, n, q):
        assert count_bad(n, q) == census_bad_a(n, q)

    @pytest.mark.parametrize("n,q", [(8, 2), (12, 3), (20, 4), (64, 6)])
    def test_trig_form_agrees(self, n, q):
        assert count_bad_trig(n, q) == pytest.approx(count_bad(n, q), rel=1e-9)

    def test_upper_bound(self):
        # 4(q-1)^2/q * (2 cos(pi/2q))^n dominates the census for q >= 2
        for q in (2, 3, 5, 8):
            for n in (8, 16, 32, 64):
                if q > n // 2:
                    continue
                bound = 4 * (q - 1) ** 2 / q * (2 * math.cos(math.pi / (2 * q))) ** n
                assert count_bad(n, q) <= bound


class TestGammaCounts:
    def test_tiny_exact(self):
        assert gamma_count_a(2, 4, 0) == 2  # 0101, 1010
        assert gamma_count_a(3, 4, 0) == 4

    @pytest.mark.parametrize("n,q", [(4, 0), (8, 0), (8, 2), (10, 1), (12, 3)])
    def test_total_is_binomial(self, n, q):
        counts = gamma_counts_a(n, q)
        assert sum(counts) == math.comb(n, n // 2 + q)

    @pytest.mark.parametrize("n,q", [(8, 0), (8, 2), (10, 1), (12, 2)])
    def test_matches_histogram_oracle(self, n, q):
        hist = {}
        for w in all_words(n):
            if weight(w) == n // 2 + q:
                size = len(gamma_set_a(w, q))
                hist[size] = hist.get(size, 0) + 1
        counts = gamma_counts_a(n, q)
        assert hist == {i: c for i, c in enumerate(counts) if c}

    @pytest.mark.parametrize("n,q", [(8, 0), (10, 2), (12, 1)])
    def test_matches_definitional_gamma(self, n, q):
        for w in all_words(n):
            if weight(w) == n // 2 + q:
                assert gamma_set_a(w, q) == definitional_gamma("a", w, q)


def _gamma_q0_trig(i, n):
    s1 = sum(math.cos(math.pi * j / (i + 1)) ** n for j in range(1, i + 1))
    s2 = sum(math.cos(math.pi * j / i) ** n for j in range(1, i)) if i >= 2 else 0.0
    s3 = sum(math.cos(math.pi * j / (i - 1)) ** n for j in range(1, i - 1)) if i >= 3 else 0.0
    return 2.0**n * (s1 - 2 * s2 + s3)


@pytest.mark.parametrize("n", [8, 16, 24, 32])
def test_prior_trig_distribution_agrees_at_q0(n):
    counts = gamma_counts_a(n, 0)
    for i in range(1, n // 2 + 2):
        assert _gamma_q0_trig(i, n) == pytest.approx(counts[i], rel=1e-6, abs=1e-3)


class TestRhoBound:
    def test_comparison_table_endpoints(self):
        assert rho_a_bound(8, 0) == pytest.approx(1.90, abs=0.01)
        assert rho_a_bound(512, 0) == pytest.approx(4.86, abs=0.01)

    def test_q6_column(self):
        assert rho_a_bound(64, 6) == pytest.approx(8.03, abs=0.05)

    def test_operational_at_least_analytical(self):
        for n, q in [(16, 0), (16, 2), (64, 6)]:
            assert rho_a_bound(n, q, operational=True) >= rho_a_bound(n, q) - 1e-9


class TestOptimal:
    def test_balanced_baseline(self):
        assert optimal_redundancy(8, 0) == pytest.approx(8 - math.log2(70), abs=1e-12)

    def test_q6_baseline(self):
        assert optimal_redundancy(16, 6) == pytest.approx(9.09, abs=0.005)
