import math
import random

import pytest

from seqlc.complexity import (
    analyze_pair,
    attains_max,
    gauss_sum_poly,
    lc_berlekamp_massey,
    lc_gcd,
    lc_interleaved_formula,
    lemma1_poly,
    two_adic_gcd,
    two_adic_max,
    z_set_sizes,
)
from seqlc.f2poly import F2Poly, ONE, all_ones, mul_mod, seq_poly, stretch, x_pow_n_plus_1
from seqlc.interleave import tang_ding
from seqlc.sequences import (
    BinarySeq,
    GroupElement,
    apply_group,
    complement,
    hall_construction,
    hall_seq,
    legendre_seq,
    m_sequence,
    shift,
    twin_prime_seq,
)


def list_berlekamp_massey(bits):
    """Reference synthesis on coefficient lists (independent of bit packing)."""
    n_total = len(bits)
    c = [1] + [0] * n_total
    b = [1] + [0] * n_total
    L, m = 0, -1
    for n in range(n_total):
        d = bits[n]
        for i in range(1, L + 1):
            d ^= c[i] & bits[n - i]
        if d:
            t = c[:]
            for i in range(n - m, n_total + 1):
                c[i] ^= b[i - (n - m)]
            if 2 * L <= n:
                L = n + 1 - L
                b = t
                m = n
    return L


class TestLcGcd:
    def test_all_one(self):
        assert lc_gcd(BinarySeq.ones(7)) == 1

    def test_impulse(self):
        assert lc_gcd(BinarySeq(1, 7)) == 7

    def test_all_zero(self):
        assert lc_gcd(BinarySeq.zeros(9)) == 0

    def test_m_sequence(self):
        for l in (3, 4, 5):
            a = m_sequence(l)
            assert lc_gcd(a) == l
            assert lc_berlekamp_massey(a) == l


class TestBerlekampMassey:
    def test_all_zero(self):
        assert lc_berlekamp_massey(BinarySeq.zeros(11)) == 0

    def test_matches_list_reference(self):
        rng = random.Random(1)
        for _ in range(100):
            n = rng.randrange(1, 48)
            a = BinarySeq(rng.getrandbits(n), n)
            bits = list(a.bits) * 2
            assert lc_berlekamp_massey(a) == list_berlekamp_massey(bits)

    def test_oracle_equivalence_random(self):
        rng = random.Random(2)
        for _ in range(300):
            n = rng.choice(range(1, 128, 2))
            a = BinarySeq(rng.getrandbits(n), n)
            assert lc_gcd(a) == lc_berlekamp_massey(a)

    def test_oracle_equivalence_families(self):
        pool = [
            legendre_seq(7),
            legendre_seq(11, "ell_prime"),
            hall_seq(31),
            twin_prime_seq(5),
            twin_prime_seq(5, "tau_t"),
            m_sequence(4),
            m_sequence(5),
        ]
        for a in pool:
            assert lc_gcd(a) == lc_berlekamp_massey(a)

    def test_theorem5_value(self):
        w = tang_ding(legendre_seq(7), shift(legendre_seq(7, "ell_prime"), 1))
        assert lc_berlekamp_massey(w) == 16


class TestZSetSizes:
    def test_equal_arguments(self):
        a = legendre_seq(7)
        z_ab, z_sum = z_set_sizes(a, a)
        assert z_sum == 6  # gcd(0, all_ones) has degree n - 1
        assert z_ab == 3  # deg gcd(S_a, 1 + ... + x^6)

    def test_legendre_pair(self):
        a = legendre_seq(7)
        b = shift(legendre_seq(7, "ell_prime"), 1)
        assert z_set_sizes(a, b) == (0, 0)

    def test_m_sequence_shifted_pair(self):
        a = m_sequence(3)
        b = shift(a, 2)
        # common factor (x^7-1)/((x-1) m(x)) has degree 7 - 1 - 3
        assert z_set_sizes(a, b) == (3, 3)

    def test_rejects_even_period(self):
        with pytest.raises(ValueError):
            z_set_sizes(BinarySeq.zeros(4), BinarySeq.zeros(4))

    def test_subset_relation(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.choice([3, 7, 9, 11, 15])
            a = BinarySeq(rng.getrandbits(n), n)
            b = BinarySeq(rng.getrandbits(n), n)
            z_ab, z_sum = z_set_sizes(a, b)
            assert z_ab <= z_sum


class TestInterleavedFormula:
    def test_theorem5_all_shifts(self):
        p = 7
        ell = legendre_seq(p)
        ell_prime = legendre_seq(p, "ell_prime")
        for r in range(1, p):
            assert lc_interleaved_formula(ell, shift(ell_prime, r)) == 16

    def test_hall_example(self):
        h, classes = hall_construction(31)
        for j in classes.classes[4]:
            b = apply_group(h, GroupElement(2, j))
            assert lc_interleaved_formula(h, b) == 24

    def test_m_sequence_value(self):
        a = m_sequence(3)
        assert lc_interleaved_formula(a, shift(a, 1)) == 10

    def test_rejects_non_ideal(self):
        bad = BinarySeq.from_bits([1, 0, 0, 0, 0, 0, 0])  # impulse: A(tau) = 3
        good = legendre_seq(7)
        with pytest.raises(ValueError):
            lc_interleaved_formula(good, bad)
        with pytest.raises(ValueError):
            lc_interleaved_formula(bad, good)

    def test_agreement_with_direct(self):
        rng = random.Random(4)
        pool = [legendre_seq(11), legendre_seq(11, "ell_prime"), m_sequence(4)]
        for a in pool:
            n = a.period
            units = [s for s in range(1, n) if math.gcd(s, n) == 1]
            for _ in range(5):
                sigma = GroupElement(rng.randrange(n), rng.choice(units))
                b = apply_group(a, sigma)
                w = tang_ding(a, b)
                lc = lc_interleaved_formula(a, b)
                assert lc == lc_gcd(w) == lc_berlekamp_massey(w)
                assert lc <= 2 * n + 2


class TestAttainsMax:
    def test_legendre_pair(self):
        assert attains_max(legendre_seq(7), shift(legendre_seq(7, "ell_prime"), 1))

    def test_m_sequence_same_poly(self):
        a = m_sequence(4)
        assert not attains_max(a, shift(a, 3))

    def test_twin_prime_all_unit_shifts(self):
        t = twin_prime_seq(5)
        n = 35
        for r in range(1, n):
            if math.gcd(r, n) == 1:
                assert attains_max(t, shift(t, r))

    def test_equal_pair_goes_through_z_sum(self):
        # a = b never errors; z_sum = n - 1 keeps it far from the ceiling
        a = legendre_seq(7)
        assert not attains_max(a, a)


class TestLemma1Poly:
    def test_matches_direct_construction(self):
        rng = random.Random(5)
        for n in (3, 7, 11, 19):
            for _ in range(10):
                a = BinarySeq(rng.getrandbits(n), n)
                b = BinarySeq(rng.getrandbits(n), n)
                assert lemma1_poly(a, b) == seq_poly(tang_ding(a, b))

    def test_zero_inputs(self):
        n = 7
        z = BinarySeq.zeros(n)
        expect = F2Poly(stretch(all_ones(n), 4).bits << 3)
        assert lemma1_poly(z, z) == expect

    def test_degree_bound(self):
        rng = random.Random(6)
        for n in (3, 7, 11):
            a = BinarySeq(rng.getrandbits(n) | 1, n)
            b = BinarySeq(rng.getrandbits(n) | 1, n)
            assert lemma1_poly(a, b).degree < 4 * n


class TestTwoAdic:
    def test_all_one(self):
        a = BinarySeq.ones(7)
        assert two_adic_gcd(a) == 2**7 - 1
        assert not two_adic_max(a)

    def test_impulse(self):
        assert two_adic_max(BinarySeq(1, 9))

    def test_legendre_interleaving(self):
        ell = legendre_seq(7)
        assert two_adic_max(tang_ding(ell, ell))


class TestGaussSumPoly:
    def test_partition_identity(self):
        # G_{p,1} + G_{p,-1} = 1 + (x^n - 1)/(x^q - 1)
        p, q = 5, 7
        lhs = gauss_sum_poly(p, q, "p", 1) + gauss_sum_poly(p, q, "p", -1)
        assert lhs == ONE + stretch(all_ones(p), q)

    def test_term_count(self):
        assert bin(gauss_sum_poly(5, 7, "q", 1).bits).count("1") == 3

    @pytest.mark.parametrize("p", [5, 11])
    def test_twin_prime_period_polynomial(self, p):
        # S_t = G_{q,1}(1 + (x^n-1)/(x^q-1)) + (G_{p,1}+1)(1 + (x^n-1)/(x^p-1))
        q = p + 2
        n = p * q
        modulus = x_pow_n_plus_1(n)
        gq1 = gauss_sum_poly(p, q, "q", 1)
        gp1 = gauss_sum_poly(p, q, "p", 1)
        term_q = mul_mod(gq1, ONE + stretch(all_ones(p), q), modulus)
        term_p = mul_mod(gp1 + ONE, ONE + stretch(all_ones(q), p), modulus)
        assert term_q + term_p == seq_poly(twin_prime_seq(p))

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            gauss_sum_poly(5, 5, "p", 1)
        with pytest.raises(ValueError):
            gauss_sum_poly(5, 8, "p", 1)
        with pytest.raises(ValueError):
            gauss_sum_poly(5, 7, "p", 0)
        with pytest.raises(ValueError):
            gauss_sum_poly(5, 7, "pq", 1)


class TestAnalyzePair:
    def test_legendre_report(self):
        rep = analyze_pair(legendre_seq(7), shift(legendre_seq(7, "ell_prime"), 1))
        assert rep.lc_direct == rep.lc_bm == rep.lc_formula == 16
        assert rep.attains_max and rep.two_adic_max
        assert set(rep.autocorr_values) <= {0, -4}
        assert sum(rep.autocorr_values.values()) == 27
        assert not rep.consistency_failures()

    def test_hall_31_example(self):
        h, classes = hall_construction(31)
        j = min(classes.classes[4])
        rep = analyze_pair(h, apply_group(h, GroupElement(2, j)))
        assert rep.lc_direct == rep.lc_bm == rep.lc_formula == 24

    def test_hall_43_ceiling(self):
        h = hall_seq(43)
        rng = random.Random(7)
        for _ in range(4):
            sigma = GroupElement(rng.randrange(1, 43), rng.randrange(1, 43))
            rep = analyze_pair(h, apply_group(h, sigma))
            assert rep.lc_direct == rep.lc_bm == rep.lc_formula == 88

    def test_group_action_invariances(self):
        rng = random.Random(8)
        base_pairs = [
            (legendre_seq(7), shift(legendre_seq(7, "ell_prime"), 2)),
            (hall_seq(31), shift(hall_seq(31), 5)),
            (m_sequence(3), shift(m_sequence(3), 1)),
        ]
        for a, b in base_pairs:
            n = a.period
            lc = lc_interleaved_formula(a, b)
            assert lc_interleaved_formula(a, complement(b)) == lc
            units = [s for s in range(1, n) if math.gcd(s, n) == 1]
            for _ in range(10):
                sigma = GroupElement(rng.randrange(n), rng.choice(units))
                assert (
                    lc_interleaved_formula(apply_group(a, sigma), apply_group(b, sigma))
                    == lc
                )

    def test_remark_spot_checks(self):
        # p = 31 = 7 mod 8: interleaving Hall with itself or with Legendre
        # stays strictly below the ceiling
        h, classes = hall_construction(31)
        ell = legendre_seq(31)
        ell_prime = legendre_seq(31, "ell_prime")
        reps = [min(c) for c in classes.classes]
        for r in (0, 1, 7):
            for s in reps:
                b = apply_group(h, GroupElement(r, s))
                for a in (h, ell, ell_prime):
                    assert lc_interleaved_formula(a, b) < 64
