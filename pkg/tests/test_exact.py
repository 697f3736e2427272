import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddzeta.exact import (
    LcmTable,
    PrimePower,
    binomial,
    factorial,
    integer_root,
    is_prime,
    is_prime_power,
    lcm_table,
    lcm_table_direct,
)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(4) == 24
    assert factorial(6) == 720


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_values():
    assert binomial(7, 0) == 1
    assert binomial(4, 2) == 6
    assert sum(binomial(10, r) for r in range(11)) == 1024


def test_binomial_domain_errors():
    with pytest.raises(ValueError):
        binomial(3, 4)
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(3, -1)


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=200))
def test_binomial_pascal_rule(n, r):
    if r < n:
        assert binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r)


def test_lcm_table_small_values():
    t = lcm_table(9)
    assert t.d(1) == 1
    assert t.d(4) == 12
    assert t.d(9) == 2520


def test_lcm_table_requires_positive():
    with pytest.raises(ValueError):
        lcm_table(0)
    with pytest.raises(ValueError):
        lcm_table(1).d(2)


def test_lcm_table_matches_direct_fold():
    assert lcm_table(500).values == lcm_table_direct(500).values


def test_lcm_increment_dichotomy():
    t = lcm_table(400)
    for n in range(1, 400):
        ratio = t.d(n + 1) // t.d(n)
        assert t.d(n + 1) % t.d(n) == 0
        pp = is_prime_power(n + 1)
        if pp is None:
            assert ratio == 1
        else:
            assert ratio == pp.p


def test_is_prime_power_examples():
    assert is_prime_power(8) == PrimePower(2, 3)
    assert is_prime_power(9) == PrimePower(3, 2)
    assert is_prime_power(12) is None
    assert is_prime_power(7) == PrimePower(7, 1)
    with pytest.raises(ValueError):
        is_prime_power(1)


@given(st.integers(min_value=2, max_value=5000))
def test_is_prime_power_reconstructs(n):
    pp = is_prime_power(n)
    if pp is not None:
        assert pp.value == n
        assert is_prime(pp.p)
        # single prime divisor
        for q in range(2, min(100, n)):
            if n % q == 0 and is_prime(q):
                assert q == pp.p
                break
    else:
        # at least two distinct prime divisors
        divisors = set()
        x = n
        q = 2
        while q * q <= x:
            if x % q == 0:
                divisors.add(q)
                while x % q == 0:
                    x //= q
            q += 1
        if x > 1:
            divisors.add(x)
        assert len(divisors) >= 2


def test_is_prime_known_values():
    primes = {2, 3, 5, 7, 11, 13, 97, 7919, 104729}
    for p in primes:
        assert is_prime(p)
    for c in (1, 0, 4, 100, 7917, 104730, 561, 41041):  # includes Carmichael numbers
        assert not is_prime(c)


def test_integer_root():
    assert integer_root(0, 3) == 0
    assert integer_root(26, 3) == 2
    assert integer_root(27, 3) == 3
    assert integer_root(2**60 - 1, 6) == 2**10 - 1


@given(
    st.fractions(max_denominator=10**6),
    st.fractions(max_denominator=10**6),
)
@settings(max_examples=200)
def test_rational_arithmetic_exact(q1, q2):
    assert (q1 + q2) - q2 == q1
    total = q1 + q2
    assert total.denominator > 0
    assert math.gcd(abs(total.numerator), total.denominator) == 1


def test_lcm_table_is_immutable():
    t = lcm_table(5)
    assert isinstance(t, LcmTable)
    with pytest.raises(AttributeError):
        t.max_n = 10
