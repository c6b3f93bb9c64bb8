import math

import pytest
from hypothesis import given, settings, strategies as st

from snpd.numtheory import (
    Factorization,
    IntegrityError,
    factor,
    is_prime,
    is_prime_power,
    legendre_valuation,
    omega,
    pi_set,
    primes_up_to,
    valuation,
)


def test_factor_examples():
    assert factor(55).pairs == ((5, 1), (11, 1))
    assert factor(1).pairs == ()
    assert factor(196883).pairs == ((47, 1), (59, 1), (71, 1))


def test_factor_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(-12)


def test_omega_examples():
    assert omega(1) == 0
    assert omega(35) == 2
    assert omega(120) == 3


def test_pi_set_examples():
    assert pi_set(2520) == (2, 3, 5, 7)
    assert pi_set(1) == ()
    assert pi_set(66) == (2, 3, 11)


def test_is_prime_power_examples():
    assert is_prime_power(9) == (3, 2)
    assert is_prime_power(1) is None
    assert is_prime_power(12) is None
    with pytest.raises(ValueError):
        is_prime_power(0)


def test_legendre_valuation_examples():
    assert legendre_valuation(2, 7) == 4
    assert legendre_valuation(11, 7) == 0
    assert legendre_valuation(7, 7) == 1


def test_legendre_valuation_rejects_bad_input():
    with pytest.raises(ValueError):
        legendre_valuation(4, 10)
    with pytest.raises(ValueError):
        legendre_valuation(3, -1)
    assert legendre_valuation(2, 0) == 0
    assert legendre_valuation(2, 1) == 0


def test_legendre_matches_direct_factorial_factorization():
    for n in range(13):
        direct = factor(math.factorial(n))
        for p in primes_up_to(max(n, 2)):
            assert legendre_valuation(p, n) == direct.exponent(p)


def test_factor_reconstructs_exhaustively_to_one_million():
    for n in range(1, 1_000_001):
        f = factor(n)
        assert f.value() == n


def test_factor_keys_are_prime_spot_checks():
    for n in range(2, 1_000_000, 7919):
        for p, e in factor(n).pairs:
            assert is_prime(p)
            assert e >= 1


def test_prime_power_iff_omega_one():
    for n in range(2, 100_001):
        f = factor(n)
        result = is_prime_power(n)
        if f.omega == 1:
            p, e = result
            assert p**e == n
        else:
            assert result is None


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=10**4), st.integers(min_value=1, max_value=10**4))
def test_omega_additive_on_coprime_pairs(a, b):
    if math.gcd(a, b) != 1:
        return
    assert omega(a * b) == omega(a) + omega(b)


@settings(deadline=None)
@given(st.integers(min_value=1, max_value=10**9))
def test_factor_reconstructs_random(n):
    assert factor(n).value() == n


@settings(deadline=None)
@given(st.integers(min_value=2, max_value=10**6))
def test_pi_set_is_sorted_and_prime(n):
    ps = pi_set(n)
    assert list(ps) == sorted(set(ps))
    assert all(is_prime(p) for p in ps)
    assert all(n % p == 0 for p in ps)


def test_factorization_product_and_exact_division():
    a = factor(120)
    b = factor(9)
    assert (a * b).value() == 1080
    assert (a * b).exact_div(b) == a
    with pytest.raises(IntegrityError):
        a.exact_div(factor(7))
    with pytest.raises(IntegrityError):
        factor(8).exact_div(factor(16))


def test_factorization_construction_validation():
    with pytest.raises(ValueError):
        Factorization(((3, 1), (2, 1)))  # not ascending
    with pytest.raises(ValueError):
        Factorization(((2, 0),))  # zero exponent
    with pytest.raises(ValueError):
        Factorization.of({4: 1})  # composite key
    assert Factorization.of({3: 1, 2: 2}).pairs == ((2, 2), (3, 1))


def test_factorization_str_forms():
    assert str(factor(1)) == "1"
    assert str(factor(8)) == "2^3"
    assert str(factor(120)) == "2^3*3*5"


def test_valuation():
    assert valuation(2, 40) == 3
    assert valuation(3, 40) == 0
    assert valuation(5, 40) == 1


def test_primes_up_to_grows_and_slices():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(2) == [2]
    assert primes_up_to(1) == []
    assert len(primes_up_to(10_000)) == 1229
