import math
import random

import pytest

from seqlc.numtheory import (
    CyclotomicClasses,
    crt_index,
    cyclotomic_classes6,
    factorize,
    is_prime,
    legendre_symbol,
    mod_inverse,
    primitive_root,
    primitive_roots,
)


def trial_division_is_prime(n):
    """Independent primality oracle."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def brute_force_order(g, p):
    """Multiplicative order of g mod p by direct iteration."""
    x, k = g % p, 1
    while x != 1:
        x = x * g % p
        k += 1
    return k


class TestIsPrime:
    def test_known_values(self):
        assert is_prime(7)
        assert not is_prime(1)
        # 4x^2 + 27 with x = 4 gives 91 = 7 * 13
        assert not trial_division_is_prime(91)
        assert not is_prime(91)

    def test_agrees_with_trial_division(self):
        for n in range(0, 2000):
            assert is_prime(n) == trial_division_is_prime(n), n

    def test_larger_samples(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randrange(2, 10**7)
            assert is_prime(n) == trial_division_is_prime(n), n


class TestLegendreSymbol:
    def test_known_values(self):
        assert legendre_symbol(1, 7) == 1
        assert legendre_symbol(0, 7) == 0
        # squares mod 7 are {1, 2, 4}
        assert {i * i % 7 for i in range(1, 7)} == {1, 2, 4}
        assert legendre_symbol(3, 7) == -1

    def test_matches_square_sets(self):
        for p in (3, 7, 11, 19, 23, 31, 43):
            squares = {i * i % p for i in range(1, p)}
            for i in range(p):
                expect = 0 if i == 0 else (1 if i in squares else -1)
                assert legendre_symbol(i, p) == expect

    def test_completely_multiplicative(self):
        rng = random.Random(5)
        for p in (7, 19, 31):
            for _ in range(50):
                i, j = rng.randrange(p), rng.randrange(p)
                assert legendre_symbol(i * j, p) == legendre_symbol(
                    i, p
                ) * legendre_symbol(j, p)

    @pytest.mark.parametrize("p", [4, 15, 2])
    def test_rejects_bad_modulus(self, p):
        with pytest.raises(ValueError):
            legendre_symbol(1, p)


class TestPrimitiveRoot:
    def test_known_values(self):
        # orders of 2, 3 mod 7 are 3 and 6
        assert brute_force_order(2, 7) == 3
        assert brute_force_order(3, 7) == 6
        assert primitive_root(7) == 3
        assert primitive_root(31) == 3
        assert primitive_root(5) == 2

    def test_smallest_by_brute_force(self):
        for p in (3, 5, 7, 11, 13, 19, 23, 31, 43, 283):
            g = primitive_root(p)
            assert brute_force_order(g, p) == p - 1
            assert all(brute_force_order(h, p) != p - 1 for h in range(2, g))

    def test_generator_yields_all_roots_in_order(self):
        p = 31
        roots = list(primitive_roots(p))
        expect = [g for g in range(2, p) if brute_force_order(g, p) == p - 1]
        assert roots == expect

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            primitive_root(15)


class TestModInverse:
    def test_known_values(self):
        assert mod_inverse(1, 9) == 1
        assert mod_inverse(4, 7) == 2

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            mod_inverse(3, 9)

    def test_inverse_property(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(2, 500)
            s = rng.randrange(1, n)
            if math.gcd(s, n) != 1:
                continue
            inv = mod_inverse(s, n)
            assert 1 <= inv < n
            assert s * inv % n == 1


class TestCrtIndex:
    @staticmethod
    def brute_force(alpha, beta, n):
        return next(
            i for i in range(4 * n) if i % 4 == alpha and i % n == beta
        )

    def test_known_values(self):
        assert crt_index(0, 0, 3) == 0
        assert crt_index(1, 0, 3) == 9
        assert self.brute_force(3, 2, 7) == 23
        assert crt_index(3, 2, 7) == 23

    def test_rejects_even_n(self):
        with pytest.raises(ValueError):
            crt_index(1, 1, 8)

    @pytest.mark.parametrize("n", [3, 7, 11, 15, 19])
    def test_residue_contract(self, n):
        for alpha in range(4):
            for beta in range(n):
                i = crt_index(alpha, beta, n)
                assert 0 <= i < 4 * n
                assert i % 4 == alpha
                assert i % n == beta

    @pytest.mark.parametrize("n", [3, 7, 11, 19, 35])
    def test_beta_star_is_a_permutation(self, n):
        # beta -> beta* with 4 beta* = beta (mod n) must be a bijection on Z_n
        inv4 = mod_inverse(4 % n, n)
        image = {beta * inv4 % n for beta in range(n)}
        assert image == set(range(n))


class TestCyclotomicClasses:
    def test_d0_for_31(self):
        cc = cyclotomic_classes6(31)
        # powers of 3**6 = 16 mod 31
        assert cc.g == 3
        assert cc.classes[0] == frozenset({1, 2, 4, 8, 16})

    def test_residuacity_of_two(self):
        # 31 = 7 mod 8: 2 is a sextic residue; 43 = 3 mod 8: 2 is cubic only
        assert cyclotomic_classes6(31).label_of(2) == 0
        assert cyclotomic_classes6(43).label_of(2) == 3

    @pytest.mark.parametrize("p", [7, 13, 31, 43, 283])
    def test_invariants(self, p):
        cc = cyclotomic_classes6(p)
        union = set()
        for cls in cc.classes:
            assert len(cls) == (p - 1) // 6
            union |= cls
        assert union == set(range(1, p))

    def test_product_law(self):
        p = 31
        cc = cyclotomic_classes6(p)
        rng = random.Random(9)
        for _ in range(100):
            x = rng.randrange(1, p)
            y = rng.randrange(1, p)
            lam = cc.label_of(x)
            mu = cc.label_of(y)
            assert cc.label_of(x * y % p) == (lam + mu) % 6

    def test_rejects_wrong_residue(self):
        with pytest.raises(ValueError):
            cyclotomic_classes6(11)  # 6 does not divide 10

    def test_explicit_root(self):
        cc = cyclotomic_classes6(31, g=11)
        assert isinstance(cc, CyclotomicClasses)
        assert cc.g == 11
        assert cc.classes[0] == frozenset(
            pow(11, 6 * k, 31) for k in range(5)
        )


def test_factorize_small():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(1) == {}
    for n in range(2, 300):
        f = factorize(n)
        prod = 1
        for p, e in f.items():
            assert is_prime(p)
            prod *= p**e
        assert prod == n
