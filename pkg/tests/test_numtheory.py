from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from dessins.numtheory import (
    binomial,
    divisors,
    elem_sym,
    euler_phi,
    f_coeff,
    factorize,
    moebius,
    prime_divisors,
)


@pytest.mark.parametrize("m,expected", [(1, [1]), (12, [1, 2, 3, 4, 6, 12]), (8, [1, 2, 4, 8])])
def test_divisors(m, expected):
    assert divisors(m) == expected


@pytest.mark.parametrize("m,expected", [(1, []), (12, [2, 3]), (7, [7])])
def test_prime_divisors(m, expected):
    assert prime_divisors(m) == expected


@pytest.mark.parametrize("m,expected", [(1, 1), (6, 1), (12, 0), (30, -1), (7, -1)])
def test_moebius(m, expected):
    assert moebius(m) == expected


@pytest.mark.parametrize("m,expected", [(1, 1), (8, 4), (7, 6)])
def test_euler_phi(m, expected):
    assert euler_phi(m) == expected


@pytest.mark.parametrize("fn", [divisors, prime_divisors, moebius, euler_phi])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_divisors_brute_force():
    for m in range(1, 500):
        assert divisors(m) == [d for d in range(1, m + 1) if m % d == 0]
        assert euler_phi(m) == sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)
        assert prod(p**e for p, e in factorize(m)) == m


def test_moebius_and_phi_divisor_sums():
    for m in range(1, 10_001):
        ds = divisors(m)
        assert sum(moebius(d) for d in ds) == (1 if m == 1 else 0)
        assert sum(euler_phi(d) for d in ds) == m


@pytest.mark.parametrize("n,m,expected", [(3, 0, 1), (3, 3, 6), (7, 7, 5040), (4, 1, 10), (4, 2, 35)])
def test_elem_sym(n, m, expected):
    assert elem_sym(n, m) == expected


def test_elem_sym_full_product_is_factorial():
    for n in range(1, 30):
        assert elem_sym(n, n) == prod(range(1, n + 1))


@pytest.mark.parametrize("n,m", [(3, 4), (3, -1)])
def test_elem_sym_domain(n, m):
    with pytest.raises(ValueError):
        elem_sym(n, m)


def test_elem_sym_recurrence():
    for n in range(2, 51):
        for m in range(1, n):
            assert elem_sym(n, m) == elem_sym(n - 1, m) + n * elem_sym(n - 1, m - 1)


@pytest.mark.parametrize("n,m,expected", [(5, 2, 0), (1, 1, 2), (7, 7, 10080)])
def test_f_coeff(n, m, expected):
    assert f_coeff(n, m) == expected


def test_f_coeff_matches_elem_sym():
    for n in range(1, 51):
        for m in range(0, n + 1):
            assert f_coeff(n, m) == (0 if m % 2 == 0 else 2 * elem_sym(n, m))


def test_f_coeff_domain():
    with pytest.raises(ValueError):
        f_coeff(3, 4)


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (4, 0, 1), (3, 5, 0), (3, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_moebius_multiplicative_on_coprime_pairs(m):
    for d in divisors(m):
        if gcd(d, m // d) == 1:
            assert moebius(d) * moebius(m // d) == moebius(m)
            assert euler_phi(d) * euler_phi(m // d) == euler_phi(m)
