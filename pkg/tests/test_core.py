import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from residua import (
    DomainError,
    Modulus,
    Residue,
    UsageError,
    complement_of,
    is_prime,
    mod_mul,
    mod_pow,
    mod_pow_trace,
    normalize,
)

from conftest import naive_pow, primes_upto

M641 = Modulus(641)


class TestModulus:
    def test_primality_flag(self):
        assert Modulus(641).prime
        assert not Modulus(10).prime

    @pytest.mark.parametrize("bad", [1, 0, -5])
    def test_rejects_small_values(self, bad):
        with pytest.raises(DomainError):
            Modulus(bad)

    def test_rejects_oversized(self):
        with pytest.raises(DomainError):
            Modulus(1 << 63)


class TestIsPrime:
    def test_paper_prime(self):
        assert is_prime(641)

    def test_unit_is_not_prime(self):
        assert not is_prime(1)

    def test_2047_is_composite(self):
        # 23 * 89, by trial division
        assert 2047 == 23 * 89
        assert not is_prime(2047)

    def test_agrees_with_sieve(self):
        primes = set(primes_upto(2000))
        for n in range(2001):
            assert is_prime(n) == (n in primes)

    @pytest.mark.parametrize(
        "n,expected",
        [
            (2**61 - 1, True),  # Mersenne prime
            (2**63 - 1, False),
            (3825123056546413051, False),  # strong pseudoprime to bases 2,3,5
        ],
    )
    def test_large_values(self, n, expected):
        assert is_prime(n) == expected


class TestNormalize:
    def test_balanced_halving(self):
        r = normalize(478, M641)
        assert (r.canonical, r.balanced) == (478, -163)

    def test_zero_class(self):
        r = normalize(0, Modulus(5))
        assert (r.canonical, r.balanced) == (0, 0)

    def test_large_negative(self):
        # -22436 = -36*641 + 640 by long division
        r = normalize(-22436, M641)
        assert (r.canonical, r.balanced) == (640, -1)

    def test_idempotent(self):
        r = normalize(478, M641)
        again = normalize(r.canonical, M641)
        assert again == r

    def test_even_modulus_tie(self):
        r = normalize(5, Modulus(10))
        assert r.balanced == 5

    @given(
        n=st.integers(min_value=-(2**62), max_value=2**62),
        p=st.integers(min_value=2, max_value=10**6),
    )
    def test_forms_agree(self, n, p):
        r = normalize(n, Modulus(p))
        assert 0 <= r.canonical < p
        assert -p / 2 < r.balanced <= p / 2
        assert (r.canonical - r.balanced) % p == 0
        assert (n - r.canonical) % p == 0

    @given(
        n=st.integers(min_value=-(10**9), max_value=10**9),
        k=st.integers(min_value=-100, max_value=100),
        p=st.integers(min_value=2, max_value=10**6),
    )
    def test_shift_invariance(self, n, k, p):
        mod = Modulus(p)
        assert normalize(n, mod) == normalize(n + k * p, mod)


class TestModMul:
    def test_final_product_of_worked_example(self):
        r = normalize(-79, M641)
        s = normalize(284, M641)
        assert mod_mul(r, s).balanced == -1

    def test_identity(self):
        one = normalize(1, M641)
        r = normalize(288, M641)
        assert mod_mul(one, r) == r

    def test_square_of_288(self):
        r = normalize(288, M641)
        assert mod_mul(r, r).canonical == 255

    def test_modulus_mismatch(self):
        with pytest.raises(UsageError):
            mod_mul(normalize(1, Modulus(5)), normalize(1, Modulus(7)))


class TestModPow:
    def test_worked_example(self):
        r = mod_pow(7, 160, M641)
        assert (r.canonical, r.balanced) == (640, -1)

    def test_empty_product(self):
        assert mod_pow(5, 0, Modulus(13)).canonical == 1

    def test_intermediate_power(self):
        assert mod_pow(7, 32, M641).canonical == 284

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            mod_pow(2, -1, Modulus(7))

    @pytest.mark.parametrize("e", [0, 1, 2, 17, 100, 641, 9999, 10000])
    def test_matches_naive_loop(self, e):
        assert mod_pow(7, e, M641).canonical == naive_pow(7, e, 641)

    @given(
        a=st.integers(min_value=1, max_value=10**6),
        mu=st.integers(min_value=0, max_value=500),
        nu=st.integers(min_value=0, max_value=500),
        p=st.sampled_from(primes_upto(300)),
    )
    def test_product_rule(self, a, mu, nu, p):
        mod = Modulus(p)
        lhs = mod_pow(a, mu + nu, mod)
        rhs = mod_mul(mod_pow(a, mu, mod), mod_pow(a, nu, mod))
        assert lhs == rhs

    @given(
        a=st.integers(min_value=1, max_value=10**4),
        e=st.integers(min_value=0, max_value=10**4),
        p=st.sampled_from(primes_upto(500)),
    )
    @settings(max_examples=50)
    def test_nonzero_for_coprime_base(self, a, e, p):
        if a % p == 0:
            a += 1
        assert mod_pow(a, e, Modulus(p)).canonical != 0

    @given(
        a=st.integers(min_value=1, max_value=1000),
        alpha=st.integers(min_value=1, max_value=5),
        m=st.integers(min_value=0, max_value=30),
        p=st.sampled_from(primes_upto(200)),
    )
    def test_lift_invariance(self, a, alpha, m, p):
        mod = Modulus(p)
        base = mod_pow(a, m, mod)
        assert mod_pow(a + alpha * p, m, mod) == base
        assert mod_pow(a - alpha * p, m, mod) == base
        if m % 2 == 1 and base.canonical != 0:
            assert mod_pow(alpha * p - a, m, mod) == complement_of(base)


class TestTrace:
    def test_worked_example_rows(self):
        rows = mod_pow_trace(7, 160, M641)
        got = {row.exponent: row.residue for row in rows}
        assert got[4].balanced == -163
        assert got[8].canonical == 288
        assert got[16].canonical == 255
        assert got[32].canonical == 284
        assert got[64].balanced == -110
        assert got[128].balanced == -79
        assert got[160].balanced == -1
        assert rows[-1].exponent == 160

    def test_single_row(self):
        rows = mod_pow_trace(2, 1, Modulus(7))
        assert len(rows) == 1
        assert (rows[0].exponent, rows[0].residue.canonical) == (1, 2)

    def test_final_row_hand_checked(self):
        # 3^4 = 81 = 16*5 + 1
        rows = mod_pow_trace(3, 4, Modulus(5))
        assert rows[-1].exponent == 4
        assert rows[-1].residue.canonical == 1

    @given(
        a=st.integers(min_value=1, max_value=10**4),
        e=st.integers(min_value=1, max_value=10**4),
        p=st.sampled_from(primes_upto(300)),
    )
    @settings(max_examples=60)
    def test_rows_match_direct_powers(self, a, e, p):
        mod = Modulus(p)
        for row in mod_pow_trace(a, e, mod):
            assert row.residue == mod_pow(a, row.exponent, mod)

    def test_display_prefers_smaller_balanced(self):
        assert normalize(478, M641).display_value() == -163
        assert normalize(7, M641).display_value() == 7


class TestComplement:
    def test_complement_of_minus_one(self):
        assert complement_of(normalize(640, M641)).canonical == 1

    def test_small_case(self):
        assert complement_of(normalize(1, Modulus(5))).canonical == 4

    def test_worked_pair(self):
        # 163 + 478 = 641
        assert complement_of(normalize(163, M641)).canonical == 478

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            complement_of(normalize(0, Modulus(5)))

    def test_power_sum_divisible(self):
        # powers leaving complementary residues sum to a multiple of p
        mod = Modulus(13)
        for mu in range(1, 10):
            r = mod_pow(2, mu, mod)
            s = complement_of(r)
            # find an exponent nu leaving s, if any
            for nu in range(1, 13):
                if mod_pow(2, nu, mod) == s:
                    assert (2**mu + 2**nu) % 13 == 0
