"""Pure-Python sweep over the N-cycles of S_N (fallback for the compiled kernel)."""
from __future__ import annotations

from collections import Counter
from itertools import permutations


def _stats(tau: list[int], N: int, divs: list[int]) -> tuple[int, int, int, bool]:
    seen = [False] * N
    L = h = 0
    for x in range(N):
        if tau[(x + 1) % N] == x:
            h += 1
        if seen[x]:
            continue
        L += 1
        y = x
        while not seen[y]:
            seen[y] = True
            y = tau[(y + 1) % N]

    k = N
    for d in divs:
        if all(tau[(x + d) % N] == (tau[x] + d) % N for x in range(N)):
            k = d
            break

    canonical = True
    for j in range(1, k):
        conj = [(tau[(y - j) % N] + j) % N for y in range(N)]
        if conj < tau:
            canonical = False
            break
    return L, h, k, canonical


def sweep(N: int, first: int = 0) -> tuple[dict, dict]:
    """Histogram every N-cycle ``tau`` (optionally only those with ``tau(1) = first``).

    Returns ``(raw, canonical)`` keyed by ``(L, h, k)``: cycles of
    ``tau*sigma0``, its fixed points, and the size of the orbit of ``tau``
    under conjugation by ``<sigma0>``.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if first < 0 or first > N or (first == 1 and N > 1):
        raise ValueError(f"first image {first} invalid for N={N}")
    divs = [d for d in range(1, N) if N % d == 0]
    raw: Counter = Counter()
    canon: Counter = Counter()
    if first and N > 1:
        head = (0, first - 1)
        rest = [x for x in range(1, N) if x != first - 1]
    else:
        head = (0,)
        rest = list(range(1, N))
    tau = [0] * N
    for tail in permutations(rest):
        cyc = head + tail
        for i in range(N - 1):
            tau[cyc[i]] = cyc[i + 1]
        tau[cyc[-1]] = cyc[0]
        L, h, k, canonical = _stats(tau, N, divs)
        raw[(L, h, k)] += 1
        if canonical:
            canon[(L, h, k)] += 1
    return dict(raw), dict(canon)
