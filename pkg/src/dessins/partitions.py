"""Partitions of ``L`` into parts dividing ``N/n`` and their per-partition weights."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd, prod

from .numtheory import divisors, prime_divisors

__all__ = [
    "DivisorPartition",
    "a_factor",
    "b_coeff",
    "delta",
    "enumerate_lambda",
    "i_count",
    "i_zero",
    "lambda_by_length",
]


def _check_context(N: int, L: int, n: int) -> None:
    if N < 1 or n < 1 or N % n:
        raise ValueError(f"n={n} does not divide N={N}")
    if not 1 <= L <= N:
        raise ValueError(f"L={L} outside 1..{N}")


@dataclass(frozen=True)
class DivisorPartition:
    """A non-increasing tuple of parts, all dividing ``N // n``, summing to ``L``."""

    parts: tuple[int, ...]
    N: int
    L: int
    n: int

    def __post_init__(self):
        _check_context(self.N, self.L, self.n)
        parts = self.parts
        if not parts:
            raise ValueError("a partition needs at least one part")
        if sum(parts) != self.L:
            raise ValueError(f"parts {parts} do not sum to L={self.L}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not non-increasing")
        if any(p < 1 or self.modulus % p for p in parts):
            raise ValueError(f"parts {parts} must divide N/n={self.modulus}")

    @property
    def modulus(self) -> int:
        return self.N // self.n

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _partitions(total: int, allowed: tuple[int, ...], slots: int):
    # allowed is descending; parts emitted in descending lexicographic order
    if total == 0:
        yield ()
        return
    if slots == 0 or total > slots * allowed[0]:
        return
    for idx, part in enumerate(allowed):
        if part > total:
            continue
        for rest in _partitions(total - part, allowed[idx:], slots - 1):
            yield (part,) + rest


@lru_cache(maxsize=4096)
def _lambda_parts(N: int, L: int, n: int, max_length: int) -> tuple[tuple[int, ...], ...]:
    allowed = tuple(reversed(divisors(N // n)))
    return tuple(_partitions(L, allowed, max_length))


def enumerate_lambda(
    N: int, L: int, n: int, max_length: int | None = None
) -> list[DivisorPartition]:
    """Every partition of ``L`` with parts in the divisors of ``N // n``.

    Output order is descending lexicographic on the part tuples.  With
    ``max_length`` only partitions of at most that many parts are produced.
    """
    _check_context(N, L, n)
    if max_length is None or max_length > L:
        max_length = L
    return [DivisorPartition(p, N, L, n) for p in _lambda_parts(N, L, n, max_length)]


def lambda_by_length(N: int, L: int, n: int, m: int) -> list[DivisorPartition]:
    if m < 1:
        raise ValueError(f"length m must be positive, got {m}")
    _check_context(N, L, n)
    return [DivisorPartition(p, N, L, n) for p in _lambda_parts(N, L, n, L) if len(p) == m]


def delta(lam: DivisorPartition) -> int:
    """Product of the parts."""
    return prod(lam.parts)


def multinomial(lam: DivisorPartition) -> int:
    """Number of distinct orderings of the parts."""
    out = factorial(lam.length)
    for mult in lam.multiplicities().values():
        out //= factorial(mult)
    return out


def b_coeff(lam: DivisorPartition) -> Fraction:
    return Fraction(multinomial(lam), delta(lam))


def _check_prime(lam: DivisorPartition, p: int) -> None:
    if p not in prime_divisors(lam.modulus):
        raise ValueError(f"p={p} is not a prime divisor of N/n={lam.modulus}")


def i_zero(n: int, lam: DivisorPartition, p: int) -> int:
    """Number of parts coprime to ``p``."""
    _check_n(n, lam)
    _check_prime(lam, p)
    return sum(1 for part in lam.parts if gcd(part, p) == 1)


def i_count(n: int, lam: DivisorPartition, p: int) -> int:
    """Number of parts ``l`` with ``p * l`` still dividing ``N // n``."""
    _check_n(n, lam)
    _check_prime(lam, p)
    return sum(1 for part in lam.parts if lam.modulus % (p * part) == 0)


def _check_n(n: int, lam: DivisorPartition) -> None:
    if n != lam.n:
        raise ValueError(f"partition built for n={lam.n}, queried with n={n}")


def a_factor(n: int, lam: DivisorPartition, p: int) -> Fraction:
    i0 = i_zero(n, lam, p)
    i = i_count(n, lam, p)
    assert i0 <= i, (i0, i, lam, p)
    q = Fraction(1, p)
    value = (1 - q) ** (i - i0) * ((1 - q) ** (i0 + 1) - (-q) ** (i0 + 1))
    assert i > 0 or value == 1
    return value
