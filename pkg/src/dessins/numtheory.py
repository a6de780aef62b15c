"""Exact integer primitives used by the counting formulas.

Integers are plain Python ``int`` (unbounded) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = [
    "Fraction",
    "binomial",
    "divisors",
    "elem_sym",
    "elem_sym_row",
    "euler_phi",
    "f_coeff",
    "factorize",
    "moebius",
    "prime_divisors",
]


def _check_positive(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool):
        raise TypeError(f"expected an int, got {type(m).__name__}")
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")


# lru_cache is thread-safe for lookups; a racing miss just recomputes.
@lru_cache(maxsize=4096)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``m`` as ``((p, e), ...)`` with ascending ``p``."""
    _check_positive(m)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def _divisors(m: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(m: int) -> list[int]:
    """Positive divisors of ``m`` in ascending order."""
    _check_positive(m)
    return list(_divisors(m))


def prime_divisors(m: int) -> list[int]:
    """Distinct prime factors of ``m``, ascending; ``[]`` for ``m == 1``."""
    return [p for p, _ in factorize(m)]


def moebius(m: int) -> int:
    fac = factorize(m)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(m: int) -> int:
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


@lru_cache(maxsize=512)
def elem_sym_row(n: int) -> tuple[int, ...]:
    """Coefficients of ``(x+1)(x+2)...(x+n)`` read as ``e_0..e_n`` of ``1..n``.

    Entry ``m`` is the elementary symmetric polynomial of degree ``m``
    evaluated at ``(1, 2, ..., n)``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    row = [1]
    for k in range(1, n + 1):
        # multiply the polynomial sum_m e_m * y^m by (1 + k*y)
        nxt = row + [0]
        for m in range(1, k + 1):
            nxt[m] += k * row[m - 1]
        row = nxt
    return tuple(row)


def elem_sym(n: int, m: int) -> int:
    """Elementary symmetric polynomial of degree ``m`` at ``(1, ..., n)``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0 <= m <= n:
        raise ValueError(f"degree m={m} outside 0..{n}")
    return elem_sym_row(n)[m]


def f_coeff(n: int, m: int) -> int:
    """``(1 - (-1)**m) * e_m(1..n)``: zero for even ``m``, twice ``e_m`` for odd."""
    if not 0 <= m <= n:
        raise ValueError(f"degree m={m} outside 0..{n}")
    if m % 2 == 0:
        return 0
    return 2 * elem_sym_row(n)[m]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the convention 0 for ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)
