"""Number-theory helper tests against naive references."""

import math
import random

import pytest

from scrimkit import numtheory
from scrimkit.errors import NotCoprime, SizeLimitExceeded

import oracles


def test_is_prime_matches_trial_division():
    def trial(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n**0.5) + 1))

    for n in range(0, 2000):
        assert numtheory.is_prime(n) == trial(n)
    # Carmichael numbers and large primes.
    assert not numtheory.is_prime(561)
    assert not numtheory.is_prime(1729)
    assert numtheory.is_prime(2**61 - 1)
    assert not numtheory.is_prime(2**67 - 1)


@pytest.mark.parametrize("n", [1, 2, 12, 97, 360, 161, 510510, 2**19])
def test_factorize_round_trip(n):
    fac = numtheory.factorize(n)
    prod = 1
    for p, e in fac.factors:
        assert numtheory.is_prime(p)
        assert e >= 1
        prod *= p**e
    assert prod == n
    if n <= 10**4:
        assert sorted(fac.divisors()) == [d for d in range(1, n + 1) if n % d == 0]


def test_factorize_rejects_bad_input():
    with pytest.raises(ValueError):
        numtheory.factorize(0)
    with pytest.raises(SizeLimitExceeded):
        numtheory.factorize((2**61 - 1) * (2**31 - 1))
    with pytest.raises(SizeLimitExceeded):
        numtheory.factorize(9699690)
    assert dict(numtheory.factorize(9699690, limit=10**7).factors) == {
        2: 1, 3: 1, 5: 1, 7: 1, 11: 1, 13: 1, 17: 1, 19: 1,
    }


def test_factor_unbounded_handles_large():
    fac = numtheory._factor_unbounded((2**31 - 1) * 7)
    assert dict(fac) == {7: 1, 2**31 - 1: 1}
    assert numtheory._factor_unbounded(1) == ()


@pytest.mark.parametrize("n", list(range(1, 80)) + [161, 360, 121])
def test_phi_matches_naive(n):
    assert numtheory.euler_phi(n) == oracles.naive_phi(n)


def test_divisors_sorted():
    assert list(numtheory.divisors(28)) == [1, 2, 4, 7, 14, 28]
    assert list(numtheory.divisors(1)) == [1]


def test_two_adic_valuation():
    for i in range(1, 600):
        v = numtheory.two_adic_valuation(i)
        assert i % (1 << v) == 0 and (i // (1 << v)) % 2 == 1
    with pytest.raises(ValueError):
        numtheory.two_adic_valuation(0)


def test_mult_order_matches_naive():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(1, 300)
        a = rng.randrange(1, 300)
        if math.gcd(a, n) != 1:
            with pytest.raises(NotCoprime):
                numtheory.mult_order(a, n)
            continue
        assert numtheory.mult_order(a, n) == oracles.naive_mult_order(a, n)
    assert numtheory.mult_order(5, 7) == 6
    assert numtheory.mult_order(25, 23) == 11
    assert numtheory.mult_order(10, 1) == 1


def test_lambda_matches_definitional_scan():
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]:
        for d in range(1, 201):
            if math.gcd(q, d) != 1:
                with pytest.raises(NotCoprime):
                    numtheory.lambda_predicate(q, d)
                continue
            assert numtheory.lambda_predicate(q, d) == oracles.naive_lambda(q, d), (q, d)


def test_lambda_order_criterion_prime_powers():
    # For odd prime powers d the unit group is cyclic, so -1 lies in every
    # even-order subgroup: lambda(q, d) = 1 iff nu_2(ord_d(q)) is exactly 1.
    for q in [2, 3, 5, 8, 9]:
        for d in range(3, 150):
            if math.gcd(q, d) != 1:
                continue
            fac = numtheory.factorize(d).factors
            if len(fac) != 1 or fac[0][0] == 2:
                continue
            ord_q = numtheory.mult_order(q, d)
            expect = 1 if (ord_q % 2 == 0 and (ord_q // 2) % 2 == 1) else 0
            assert numtheory.lambda_predicate(q, d) == expect


def test_lambda_shortcut_fails_for_composite_d():
    # nu_2(ord_21(2)) = 1 yet -1 is not a power of 2 mod 21, so the order
    # criterion overcounts; the definitional scan must say 0 here.
    assert numtheory.mult_order(2, 21) == 6
    assert numtheory.lambda_predicate(2, 21) == 0
    assert oracles.naive_lambda(2, 21) == 0


def test_lambda_small_d():
    assert numtheory.lambda_predicate(5, 1) == 1
    assert numtheory.lambda_predicate(5, 2) == 1
    assert numtheory.lambda_predicate(5, 7) == 1
    assert numtheory.lambda_predicate(2, 7) == 0


def test_prime_power_split():
    assert numtheory.prime_power_split(7) == (7, 1)
    assert numtheory.prime_power_split(8) == (2, 3)
    assert numtheory.prime_power_split(729) == (3, 6)
    for bad in [1, 6, 12, 100]:
        with pytest.raises(ValueError):
            numtheory.prime_power_split(bad)
