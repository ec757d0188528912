import time

import pytest

from qbalance.cyclic_code import codewords, from_generator, full_space, poly_divmod, poly_from_coeffs
from qbalance.errors import CapacityError
from qbalance.scheme_c import encode_c, gamma_count_fullspace, gamma_size_c
from qbalance.trellis import build_and_count, codebook_size, gamma_counts, rho_c, state_count


def enumeration_gamma(code):
    sizes = {}
    for x in codewords(code):
        c = encode_c(code, x).codeword.prefix(code.n)
        sizes[c] = gamma_size_c(c)
    hist = {}
    for s in sizes.values():
        hist[s] = hist.get(s, 0) + 1
    return dict(sorted(hist.items()))


class TestAgainstEnumeration:
    def test_simplex(self, simplex):
        assert gamma_counts(simplex) == {1: 2, 2: 1, 4: 1}
        assert gamma_counts(simplex) == enumeration_gamma(simplex)

    def test_hamming_tally(self, hamming):
        assert gamma_counts(hamming) == {1: 4, 2: 2, 4: 2}
        assert gamma_counts(hamming) == enumeration_gamma(hamming)

    def test_hamming15(self, hamming15):
        assert gamma_counts(hamming15) == enumeration_gamma(hamming15)

    @pytest.mark.parametrize("length", [7, 11, 15])
    def test_full_space(self, length):
        fs = full_space(length)
        assert gamma_counts(fs) == enumeration_gamma(fs)

    def test_final_states_split_by_weight(self, hamming):
        final = build_and_count(hamming)
        m = 4
        assert set(wt for wt, _ in final) <= {m - 1, m}
        merged = {}
        for (wt, idx), cnt in final.items():
            merged[idx] = merged.get(idx, 0) + cnt
        assert merged == gamma_counts(hamming)


class TestClosedFormEquivalence:
    @pytest.mark.parametrize("n", [4, 8, 12, 16, 20, 24])
    def test_full_space_matches_closed_form(self, n):
        fs = full_space(n - 1)
        formula = {
            i: gamma_count_fullspace(i, n)
            for i in range(1, n // 2 + 1)
            if gamma_count_fullspace(i, n)
        }
        assert gamma_counts(fs) == formula


class TestRho:
    def test_hamming(self, hamming):
        assert rho_c(hamming) == pytest.approx(2.25)

    def test_simplex(self, simplex):
        assert rho_c(simplex) == pytest.approx(2.25)

    def test_full_space_16_matches_table(self):
        assert rho_c(full_space(15)) == pytest.approx(2.81, abs=0.01)

    def test_codebook_sizes(self, simplex, hamming):
        assert codebook_size(simplex) == 4
        assert codebook_size(hamming) == 8


class TestScaling:
    def test_capacity_guard(self):
        g, rem = poly_divmod((1 << 31) | 1, poly_from_coeffs([1, 0, 1, 0, 0, 1]))
        assert rem == 0
        simplex31 = from_generator(31, g)  # n - k = 26
        with pytest.raises(CapacityError):
            gamma_counts(simplex31)

    def test_state_count_within_product_bound(self):
        for n in (16, 32, 64):
            code = full_space(n - 1)
            m = n // 2
            bound = (m + 1) * (2 * m + 1) * (m + 1) * (1 << code.r) * (m + 2)
            assert state_count(code) <= bound

    def test_state_growth_at_most_quartic(self):
        # doubling n may multiply the state space by at most 2^4
        counts = [state_count(full_space(n - 1)) for n in (32, 64, 128)]
        assert counts[1] <= 16 * counts[0]
        assert counts[2] <= 16 * counts[1]

    def test_build_time_tracks_state_count(self):
        sizes = (128, 256)
        times = []
        states = []
        for n in sizes:
            code = full_space(n - 1)
            start = time.perf_counter()
            build_and_count(code)
            times.append(time.perf_counter() - start)
            states.append(state_count(code))
        if times[0] < 0.02:
            pytest.skip("too fast to measure reliably")
        # doubling n: state count grows ~8x (< n^4 bound); allow 4x noise on top
        assert times[1] <= 4 * (states[1] / states[0]) * times[0]
