from math import gcd

import pytest
from hypothesis import given, strategies as st

from orbimap.numtheory import divisors, euler_phi, jordan_totient, lcm_list, moebius_mu


def test_phi_small():
    assert euler_phi(1) == 1
    assert euler_phi(2) == 1
    # direct count for 12
    assert euler_phi(12) == sum(1 for k in range(1, 13) if gcd(k, 12) == 1) == 4


def test_mu_small():
    assert moebius_mu(1) == 1
    assert moebius_mu(4) == 0
    assert moebius_mu(6) == 1


def test_divisors_small():
    assert divisors(1) == (1,)
    assert divisors(6) == (1, 2, 3, 6)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)


def test_lcm_list():
    assert lcm_list([]) == 1
    assert lcm_list([2, 4, 4]) == 4
    assert lcm_list([2, 3]) == 6


def test_jordan_small():
    assert jordan_totient(0, 1) == 1
    assert jordan_totient(0, 5) == 0
    assert jordan_totient(2, 4) == 12
    for n in range(1, 101):
        assert jordan_totient(1, n) == euler_phi(n)


def test_jordan_moebius_sum_definition():
    for k in range(0, 4):
        for n in range(1, 60):
            direct = sum(moebius_mu(n // d) * d**k for d in divisors(n))
            assert jordan_totient(k, n) == direct


def test_phi_divisor_sum():
    for n in range(1, 10001):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_mu_divisor_sum():
    for n in range(1, 10001):
        assert sum(moebius_mu(d) for d in divisors(n)) == (1 if n == 1 else 0)


@given(st.integers(1, 500), st.integers(1, 500), st.integers(0, 3))
def test_jordan_multiplicative(a, b, k):
    if gcd(a, b) == 1:
        assert jordan_totient(k, a * b) == jordan_totient(k, a) * jordan_totient(k, b)


@pytest.mark.parametrize("func", [euler_phi, moebius_mu, divisors])
def test_rejects_nonpositive(func):
    with pytest.raises(ValueError):
        func(0)
