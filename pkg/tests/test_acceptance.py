"""Acceptance gate.

Every test carries a ``criterion`` marker; the terminal summary prints
one PASS/FAIL line per criterion.  All comparisons are exact integers,
so the tolerance of every criterion is pinned to zero.  Wall-clock
budgets are measured inside the tests with ``time.perf_counter``.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from dessins import kernels
from dessins.counting import (
    count_d1,
    count_d1_r,
    count_d2,
    count_d2_r,
    crosscheck_identities,
    in_d_star,
    inverted_t_counts,
    inverted_v_counts,
    psi_exact,
    sigma_j,
    upsilon_exact,
)
from dessins.numtheory import divisors, euler_phi, f_coeff
from dessins.permoracle import (
    centralizer_n_cycles,
    classify_pairs,
    iter_pi_n,
    oracle_R_m,
    oracle_sigma_fixed,
    oracle_T_centralizer,
    oracle_V_centralizer,
    rho_from_data,
)

from tables import (
    EXAMPLE_8_4_TOTAL,
    TABLE1_PER_R,
    TABLE1_TOTAL,
    TABLE2_PER_R,
    TABLE2_TOTAL,
)

TOLERANCE = 0  # exact integer agreement everywhere

BUDGET_TABLES = 1.0
BUDGET_ORACLE = 300.0
BUDGET_IDENTITIES = 30.0
BUDGET_STRUCTURAL = 120.0

ORACLE_MAX = 8
FORMULA_MAX = 60


def crit(num, title):
    return pytest.mark.criterion(num, title, TOLERANCE)


def _mismatches(pairs):
    return [(key, got, want) for key, got, want in pairs if abs(got - want) > TOLERANCE]


@crit(1, "faces table reproduction (N=2..7), exact, < 1 s")
def test_table1():
    t0 = time.perf_counter()
    bad = _mismatches(
        [(key, count_d1_r(*key), want) for key, want in TABLE1_PER_R.items()]
        + [(key, count_d1(*key).total, want) for key, want in TABLE1_TOTAL.items()]
    )
    elapsed = time.perf_counter() - t0
    assert not bad
    assert elapsed < BUDGET_TABLES


@crit(2, "degree-2 table reproduction (N=2..5) and the N=8, h=4 example, exact, < 1 s")
def test_table2():
    t0 = time.perf_counter()
    pairs = [(key, count_d2_r(*key), want) for key, want in TABLE2_PER_R.items()]
    pairs += [(key, count_d2(*key).total, want) for key, want in TABLE2_TOTAL.items()]
    pairs.append(((8, 4), count_d2(8, 4).total, EXAMPLE_8_4_TOTAL))
    elapsed = time.perf_counter() - t0
    assert not _mismatches(pairs)
    assert elapsed < BUDGET_TABLES


@crit(3, "centralizer counts match brute force for N <= 8, exact, < 5 min")
def test_centralizer_oracle():
    kernels._sweep_cached.cache_clear()
    t0 = time.perf_counter()
    pairs = []
    for N in range(1, ORACLE_MAX + 1):
        for n in divisors(N):
            for L in range(1, N + 1):
                pairs.append(((N, L, n), oracle_T_centralizer(N, L, n), psi_exact(N, L, n)))
            for h in range(N + 1):
                got = oracle_V_centralizer(N, h, n)
                want = upsilon_exact(N, h, n) if in_d_star(N, h, n) else 0
                pairs.append(((N, h, n), got, want))
    elapsed = time.perf_counter() - t0
    assert not _mismatches(pairs)
    assert elapsed < BUDGET_ORACLE


@crit(4, "class counts by automorphism order match brute force for N <= 8, exact")
def test_class_oracle():
    t0 = time.perf_counter()
    bad = []
    for N in range(1, ORACLE_MAX + 1):
        for L in range(1, N + 1):
            if classify_pairs(N, faces=L).per_r != count_d1(N, L).per_r:
                bad.append(("L", N, L))
        for h in range(N + 1):
            if classify_pairs(N, deg2=h).per_r != count_d2(N, h).per_r:
                bad.append(("h", N, h))
    assert not bad
    assert time.perf_counter() - t0 < BUDGET_ORACLE


@crit(5, "special-case identities for N <= 60, exact, < 30 s")
def test_identity_suite():
    t0 = time.perf_counter()
    failed = []
    names = set()
    for N in range(1, FORMULA_MAX + 1):
        for L in range(1, N + 1):
            for c in crosscheck_identities(N, L=L):
                names.add(c.name.split(" N=")[0])
                if not c.passed:
                    failed.append(c)
        for h in range(N + 1):
            for c in crosscheck_identities(N, h=h):
                names.add(c.name.split(" N=")[0])
                if not c.passed:
                    failed.append(c)
    elapsed = time.perf_counter() - t0
    assert not failed, failed[:5]
    assert len(names) >= 8  # every identity family actually fired
    assert elapsed < BUDGET_IDENTITIES


@crit(6, "integrality and divisibility of all formula values for N <= 60")
def test_integrality_suite():
    violations = []

    def check_int(key, value):
        if not (isinstance(value, Fraction) and value.denominator == 1 and value >= 0):
            violations.append(key)

    for N in range(1, FORMULA_MAX + 1):
        for n in divisors(N):
            for L in range(1, N + 1):
                check_int(("psi", N, L, n), psi_exact(N, L, n))
            for h in range(N + 1):
                if in_d_star(N, h, n):
                    check_int(("upsilon", N, h, n), upsilon_exact(N, h, n))
        for L in range(1, N + 1):
            rep = count_d1(N, L)
            if any(v < 0 for v in rep.per_r.values()):
                violations.append(("d1", N, L))
            for u, c in inverted_t_counts(N, L).items():
                if c < 0 or c % u:
                    violations.append(("inv psi", N, L, u))
        for h in range(N + 1):
            rep = count_d2(N, h)
            if any(v < 0 for v in rep.per_r.values()):
                violations.append(("d2", N, h))
            for u, c in inverted_v_counts(N, h).items():
                if c < 0 or c % u:
                    violations.append(("inv upsilon", N, h, u))
    assert violations == []


@crit(7, "cycle-count, fixed-point and parameterization checks, < 2 min")
def test_structural_suite():
    t0 = time.perf_counter()
    violations = []
    for n in range(1, ORACLE_MAX + 1):
        for m in range(1, n + 1):
            if oracle_R_m(n, m) * n * (n + 1) != f_coeff(n, n - m + 1):
                violations.append(("R", n, m))
        for j in range(n):
            if oracle_sigma_fixed(n, j) != sigma_j(n, j) - sigma_j(n, j + 1):
                violations.append(("fixed", n, j))
    for N in range(1, ORACLE_MAX + 1):
        for n in divisors(N):
            M = N // n
            built = [rho_from_data(d, N) for d in iter_pi_n(N, n)]
            size = factorial(n - 1) * M ** (n - 1) * euler_phi(M)
            if len(built) != size or len(set(built)) != size:
                violations.append(("card", N, n))
            if set(built) != set(centralizer_n_cycles(N, n, "filter")):
                violations.append(("strategy", N, n))
    assert violations == []
    assert time.perf_counter() - t0 < BUDGET_STRUCTURAL
