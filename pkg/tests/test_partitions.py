from fractions import Fraction
from math import gcd

import pytest

from dessins.numtheory import divisors, prime_divisors
from dessins.partitions import (
    DivisorPartition,
    a_factor,
    b_coeff,
    delta,
    enumerate_lambda,
    i_count,
    i_zero,
    lambda_by_length,
    multinomial,
)


def parts(lams):
    return [lam.parts for lam in lams]


def restricted_partition_count(L, allowed):
    # coin-change DP, independent of the recursive generator
    ways = [1] + [0] * L
    for a in allowed:
        for s in range(a, L + 1):
            ways[s] += ways[s - a]
    return ways[L]


@pytest.mark.parametrize(
    "N,L,n,expected",
    [(7, 1, 1, [(1,)]), (6, 2, 3, [(2,), (1, 1)]), (4, 4, 4, [(1, 1, 1, 1)])],
)
def test_enumerate_lambda(N, L, n, expected):
    assert parts(enumerate_lambda(N, L, n)) == expected


def test_enumerate_lambda_rejects_non_divisor():
    with pytest.raises(ValueError):
        enumerate_lambda(6, 2, 4)


@pytest.mark.parametrize(
    "N,L,n,m,expected",
    [(6, 2, 3, 2, [(1, 1)]), (6, 2, 3, 3, []), (7, 3, 7, 3, [(1, 1, 1)])],
)
def test_lambda_by_length(N, L, n, m, expected):
    assert parts(lambda_by_length(N, L, n, m)) == expected


def test_structure_and_counts():
    for N in range(1, 41):
        for n in divisors(N):
            M = N // n
            for L in range(1, N + 1):
                lams = enumerate_lambda(N, L, n)
                ps = parts(lams)
                assert len(set(ps)) == len(ps)
                assert ps == sorted(ps, reverse=True)
                for p in ps:
                    assert sum(p) == L
                    assert all(M % x == 0 for x in p)
                    assert list(p) == sorted(p, reverse=True)
                assert len(ps) == restricted_partition_count(L, divisors(M))
                assert sum(len(lambda_by_length(N, L, n, m)) for m in range(1, L + 1)) == len(ps)


@pytest.mark.parametrize("p,expected", [((1, 1, 1), 1), ((2, 1), 2), ((6, 3, 2), 36)])
def test_delta(p, expected):
    lam = DivisorPartition(p, 36, sum(p), 1)
    assert delta(lam) == expected


@pytest.mark.parametrize("p,expected", [((1,), 1), ((1, 1), 1), ((2, 1), 1), ((2, 2, 1), Fraction(3, 4))])
def test_b_coeff(p, expected):
    lam = DivisorPartition(p, 8, sum(p), 1)
    assert b_coeff(lam) == expected


def test_b_times_delta_is_multinomial():
    for N in (12, 24, 30):
        for L in range(1, 13):
            for lam in enumerate_lambda(N, L, 1):
                prod_ = b_coeff(lam) * delta(lam)
                assert prod_.denominator == 1 and prod_ > 0
                assert prod_ == multinomial(lam)


def _brute_i(lam, p):
    M = lam.modulus
    i0 = len([x for x in lam.parts if gcd(x, p) == 1])
    i = len([x for x in lam.parts if (p * x) in divisors(M)])
    return i0, i


@pytest.mark.parametrize(
    "N,n,p_,prime,expected",
    [(7, 1, (1,), 7, (1, 1)), (12, 3, (2, 1, 1), 2, (2, 3)), (8, 1, (4, 2), 2, (0, 2))],
)
def test_i_counts(N, n, p_, prime, expected):
    lam = DivisorPartition(p_, N, sum(p_), n)
    assert (i_zero(n, lam, prime), i_count(n, lam, prime)) == expected
    assert _brute_i(lam, prime) == expected


def test_i_counts_brute_force_sweep():
    for N in range(2, 31):
        for n in divisors(N):
            for L in range(1, min(N, 10) + 1):
                for lam in enumerate_lambda(N, L, n):
                    for p in prime_divisors(N // n):
                        i0, i = i_zero(n, lam, p), i_count(n, lam, p)
                        assert (i0, i) == _brute_i(lam, p)
                        assert i0 <= i


def test_prime_must_divide_modulus():
    lam = DivisorPartition((1,), 7, 1, 1)
    with pytest.raises(ValueError):
        i_zero(1, lam, 2)
    with pytest.raises(ValueError):
        a_factor(1, lam, 3)


def test_a_factor_values():
    assert a_factor(1, DivisorPartition((1,), 7, 1, 1), 7) == Fraction(5, 7)
    # i = 0: no part l with p*l | N/n
    assert a_factor(1, DivisorPartition((4,), 4, 4, 1), 2) == 1
    # i0 odd with p = 2 vanishes
    assert a_factor(1, DivisorPartition((1,), 4, 1, 1), 2) == 0
    assert a_factor(1, DivisorPartition((2, 1, 1, 1), 8, 5, 1), 2) == 0


def test_a_factor_is_one_whenever_i_is_zero():
    for N in range(2, 41):
        for n in divisors(N):
            for L in range(1, min(N, 8) + 1):
                for lam in enumerate_lambda(N, L, n):
                    for p in prime_divisors(N // n):
                        if i_count(n, lam, p) == 0:
                            assert a_factor(n, lam, p) == 1


@pytest.mark.parametrize(
    "p_,N,L,n",
    [((1, 2), 4, 3, 1), ((3,), 4, 3, 1), ((1,), 4, 2, 1), ((), 4, 0, 1), ((1,), 4, 1, 3)],
)
def test_invalid_partitions_rejected(p_, N, L, n):
    with pytest.raises(ValueError):
        DivisorPartition(p_, N, L, n)
