"""Brute-force ground truth from permutations in S_N.

Everything here counts actual permutations and never calls the closed-form
formulas.  Points are ``1..N``; products compose right to left, so
``(tau * sigma)(x) == tau(sigma(x))``.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd
from typing import Iterator, NamedTuple

from . import kernels
from .numtheory import divisors

log = logging.getLogger(__name__)

DEFAULT_BRUTE_CAP = 9
HARD_BRUTE_CAP = 11


class BruteForceBoundError(ValueError):
    """The requested instance is beyond the configured enumeration bound."""


def brute_cap() -> int:
    """Enumeration bound: ``DESSIN_BRUTE_CAP`` if set, else 9; never above 11."""
    raw = os.environ.get("DESSIN_BRUTE_CAP")
    if not raw:
        return DEFAULT_BRUTE_CAP
    cap = int(raw)
    if cap > HARD_BRUTE_CAP:
        log.warning("DESSIN_BRUTE_CAP=%d exceeds the hard cap; using %d", cap, HARD_BRUTE_CAP)
        return HARD_BRUTE_CAP
    if cap > DEFAULT_BRUTE_CAP:
        log.warning("DESSIN_BRUTE_CAP=%d: sweeps over %d! cycles may be slow", cap, cap - 1)
    return cap


def check_bound(N: int, cap: int | None = None) -> None:
    cap = brute_cap() if cap is None else min(cap, HARD_BRUTE_CAP)
    if N > cap:
        raise BruteForceBoundError(f"N={N} exceeds the brute-force bound {cap}")


class CycleStats(NamedTuple):
    cycles: int
    fixed: int
    lengths: tuple[int, ...]  # non-increasing


class Permutation:
    """A bijection of ``{1..N}`` stored in one-line form."""

    __slots__ = ("_img",)

    def __init__(self, images):
        img = tuple(images)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"{img} is not a permutation of 1..{len(img)}")
        self._img = img

    @classmethod
    def identity(cls, N: int) -> "Permutation":
        return cls(range(1, N + 1))

    @classmethod
    def from_cycles(cls, N: int, cycles) -> "Permutation":
        img = list(range(1, N + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in seen:
                    raise ValueError(f"point {a} appears twice")
                seen.add(a)
                img[a - 1] = b
        return cls(img)

    @property
    def images(self) -> tuple[int, ...]:
        return self._img

    @property
    def degree(self) -> int:
        return len(self._img)

    def __call__(self, x: int) -> int:
        return self._img[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        img = self._img
        return Permutation(img[y - 1] for y in other._img)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self._img, start=1):
            inv[y - 1] = x
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate_by(self, rho: "Permutation") -> "Permutation":
        """``rho * self * rho**-1``."""
        return rho * self * rho.inverse()

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other):
        return self._img < other._img

    def __hash__(self):
        return hash(self._img)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def is_full_cycle(self) -> bool:
        return self.degree == 0 or len(self.cycles()) == 1

    def __repr__(self):
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1)
        return f"Permutation<{self.degree}>{body or '()'}"


def sigma0(N: int) -> Permutation:
    """The standard ``N``-cycle ``j -> j + 1 (mod N)``."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    return Permutation([*range(2, N + 1), 1])


def cycle_counts(pi: Permutation) -> CycleStats:
    lengths = sorted((len(c) for c in pi.cycles()), reverse=True)
    return CycleStats(len(lengths), lengths.count(1), tuple(lengths))


def commutes_with_power(tau: Permutation, n: int) -> bool:
    N = tau.degree
    if n < 1 or N % n:
        raise ValueError(f"n={n} does not divide N={N}")
    s = sigma0(N) ** n
    return tau * s == s * tau


def iter_n_cycles(N: int) -> Iterator[Permutation]:
    """All ``(N-1)!`` full cycles of ``S_N``, as ``(1 a_2 ... a_N)``."""
    for tail in permutations(range(2, N + 1)):
        yield Permutation.from_cycles(N, [(1, *tail)])


# ------------------------------------------------------------- construction


@dataclass(frozen=True)
class CentralizerCycleData:
    """Parameters of one ``N``-cycle in the centralizer of ``sigma0**n``.

    ``omega`` is an ``n``-cycle of ``S_n``; ``u`` holds the offsets
    ``u_2..u_n`` in ``0..N/n-1`` (``u_1 = 0`` is implicit); ``b`` is a unit
    mod ``N/n``, or 0 when ``n == N``.
    """

    omega: Permutation
    u: tuple[int, ...]
    b: int

    def validate(self, N: int) -> None:
        n = self.omega.degree
        if n < 1 or N % n:
            raise ValueError(f"omega has degree {n}, which does not divide N={N}")
        if not self.omega.is_full_cycle():
            raise ValueError("omega must be a single n-cycle")
        M = N // n
        if len(self.u) != n - 1 or any(not 0 <= x < M for x in self.u):
            raise ValueError(f"u must be {n - 1} entries in 0..{M - 1}")
        if M == 1:
            if self.b != 0:
                raise ValueError("b must be 0 when n == N")
        elif not (0 < self.b < M and gcd(self.b, M) == 1):
            raise ValueError(f"b={self.b} is not a unit mod {M}")


def rho_from_data(d: CentralizerCycleData, N: int) -> Permutation:
    """The ``N``-cycle sending ``a_k + u_k n`` to ``a_{k+1} + u_{k+1} n`` and ``a_n + u_n n`` to ``1 + b n``.

    ``a_1 = 1, a_2, ..., a_n`` is the cycle ``omega`` read from 1; the map is
    extended to all of ``1..N`` by commuting with ``sigma0**n``.
    """
    d.validate(N)
    n = d.omega.degree
    a = [1]
    while len(a) < n:
        a.append(d.omega(a[-1]))
    u = (0, *d.u)
    img = [0] * N
    for k in range(n):
        src = a[k] + u[k] * n
        dst = a[k + 1] + u[k + 1] * n if k + 1 < n else 1 + d.b * n
        for t in range(N // n):
            img[(src - 1 + t * n) % N] = (dst - 1 + t * n) % N + 1
    rho = Permutation(img)
    assert rho.is_full_cycle() and commutes_with_power(rho, n)
    return rho


def iter_pi_n(N: int, n: int) -> Iterator[CentralizerCycleData]:
    """Every valid ``(omega, u, b)`` for the pair ``(N, n)``."""
    if n < 1 or N % n:
        raise ValueError(f"n={n} does not divide N={N}")
    M = N // n
    units = [0] if M == 1 else [b for b in range(1, M) if gcd(b, M) == 1]
    for omega in iter_n_cycles(n):
        for u in product(range(M), repeat=n - 1):
            for b in units:
                yield CentralizerCycleData(omega, u, b)


def centralizer_n_cycles(N: int, n: int, strategy: str = "construct") -> Iterator[Permutation]:
    """All ``N``-cycles commuting with ``sigma0**n``, each once."""
    if n < 1 or N % n:
        raise ValueError(f"n={n} does not divide N={N}")
    if strategy == "filter":
        return (t for t in iter_n_cycles(N) if commutes_with_power(t, n))
    if strategy == "construct":
        return (rho_from_data(d, N) for d in iter_pi_n(N, n))
    raise ValueError(f"unknown strategy {strategy!r}")


# ------------------------------------------------------------ classifying


def canonical_form(tau: Permutation) -> Permutation:
    """Least one-line form among the conjugates of ``tau`` by powers of ``sigma0``."""
    s = sigma0(tau.degree)
    best = tau
    c = tau
    for _ in range(tau.degree - 1):
        c = c.conjugate_by(s)
        best = min(best, c)
    return best


def orbit_size(tau: Permutation) -> int:
    """Size of the orbit of ``tau`` under conjugation by ``<sigma0>``."""
    N = tau.degree
    return min(k for k in divisors(N) if commutes_with_power(tau, k))


@dataclass
class PairClassification:
    N: int
    per_r: dict[int, int]
    witnesses: list[Permutation] | None = None
    raw_per_r: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_r.values())


def _matches(key, faces, deg2) -> bool:
    L, h, _ = key
    return (faces is None or L == faces) and (deg2 is None or h == deg2)


def classify_pairs(
    N: int,
    faces: int | None = None,
    deg2: int | None = None,
    *,
    witnesses: bool = False,
    jobs: int = 1,
    cap: int | None = None,
) -> PairClassification:
    """Count classes of pairs ``(sigma0, tau)`` by automorphism order.

    ``tau`` ranges over ``N``-cycles with ``tau*sigma0`` having ``faces``
    cycles and/or ``deg2`` fixed points.  The automorphism order of a class
    is ``N`` divided by the orbit size of ``tau`` under ``<sigma0>``.
    """
    check_bound(N, cap)
    raw, canon = kernels.sweep(N, jobs=jobs)
    per_r = {r: 0 for r in divisors(N)}
    raw_per_r = {r: 0 for r in divisors(N)}
    for key, count in raw.items():
        if not _matches(key, faces, deg2):
            continue
        k = key[2]
        classes = canon.get(key, 0)
        if classes * k != count:
            raise AssertionError(f"orbit arithmetic fails at N={N}, key={key}")
        per_r[N // k] += classes
        raw_per_r[N // k] += count
    reps = None
    if witnesses:
        reps = []
        for tau in iter_n_cycles(N):
            stats = cycle_counts(tau * sigma0(N))
            if (faces is None or stats.cycles == faces) and (deg2 is None or stats.fixed == deg2):
                if canonical_form(tau) == tau:
                    reps.append(tau)
        assert len(reps) == sum(per_r.values())
    return PairClassification(N, per_r, reps, raw_per_r)


# ------------------------------------------------------ centralizer counts


def _centralizer_count(N: int, n: int, faces, deg2, cap) -> int:
    if n < 1 or N % n:
        raise ValueError(f"n={n} does not divide N={N}")
    check_bound(N, cap)
    raw, _ = kernels.sweep(N)
    # tau commutes with sigma0**n iff its conjugation orbit size divides n
    return sum(c for key, c in raw.items() if n % key[2] == 0 and _matches(key, faces, deg2))


def oracle_T_centralizer(N: int, L: int, n: int, cap: int | None = None) -> int:
    """``N``-cycles ``tau`` commuting with ``sigma0**n`` where ``tau*sigma0`` has ``L`` cycles."""
    return _centralizer_count(N, n, L, None, cap)


def oracle_V_centralizer(N: int, h: int, n: int, cap: int | None = None) -> int:
    """``N``-cycles ``tau`` commuting with ``sigma0**n`` where ``tau*sigma0`` fixes exactly ``h`` points."""
    return _centralizer_count(N, n, None, h, cap)


def oracle_R_m(n: int, m: int, cap: int | None = None) -> int:
    """``n``-cycles ``w`` of ``S_n`` with ``w*sigma0`` having exactly ``m`` cycles."""
    if not 1 <= m <= n:
        raise ValueError(f"m={m} outside 1..{n}")
    check_bound(n, cap)
    raw, _ = kernels.sweep(n)
    return sum(c for (L, _, _), c in raw.items() if L == m)


def oracle_sigma_fixed(n: int, j: int, cap: int | None = None) -> int:
    """``n``-cycles ``w`` of ``S_n`` with ``w*sigma0`` fixing exactly ``j`` points."""
    if not 0 <= j < n:
        raise ValueError(f"j={j} outside 0..{n - 1}")
    check_bound(n, cap)
    raw, _ = kernels.sweep(n)
    return sum(c for (_, h, _), c in raw.items() if h == j)
