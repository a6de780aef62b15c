# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep over the N-cycles of S_N.

Same contract as :func:`dessins._pykernels.sweep`.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef inline bint _next_perm(int* a, int lo, int hi) noexcept nogil:
    # lexicographic successor of a[lo:hi]; False once exhausted
    cdef int i = hi - 2
    cdef int j, t
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        return False
    j = hi - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = hi - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def sweep(int N, int first=0):
    """Histogram every N-cycle ``tau`` (optionally only those with ``tau(1) = first``).

    Returns ``(raw, canonical)``: dicts keyed by ``(L, h, k)`` where ``L`` is the
    number of cycles of ``tau*sigma0``, ``h`` its number of fixed points and
    ``k`` the size of the orbit of ``tau`` under conjugation by ``<sigma0>``.
    ``raw`` counts cycles; ``canonical`` counts those that are the
    lexicographically least one-line form in their orbit.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if first < 0 or first > N or (first == 1 and N > 1):
        raise ValueError(f"first image {first} invalid for N={N}")
    cdef int W = N + 1
    cdef Py_ssize_t size = <Py_ssize_t>W * W * W
    cdef long long* raw = <long long*>malloc(size * sizeof(long long))
    cdef long long* canon = <long long*>malloc(size * sizeof(long long))
    cdef int* cyc = <int*>malloc(N * sizeof(int))
    cdef int* tau = <int*>malloc(N * sizeof(int))
    cdef char* seen = <char*>malloc(N * sizeof(char))
    cdef int* divs = <int*>malloc(N * sizeof(int))
    if not raw or not canon or not cyc or not tau or not seen or not divs:
        free(raw); free(canon); free(cyc); free(tau); free(seen); free(divs)
        raise MemoryError()
    memset(raw, 0, size * sizeof(long long))
    memset(canon, 0, size * sizeof(long long))

    cdef int ndiv = 0
    cdef int d, i, x, y, L, h, k, j, v, c
    cdef bint ok, is_canon
    cdef int lo
    for d in range(1, N + 1):
        if N % d == 0:
            divs[ndiv] = d
            ndiv += 1

    for i in range(N):
        cyc[i] = i
    lo = 1
    if first > 0 and N > 1:
        # fix cyc[1] = first - 1, permute the rest ascending
        cyc[1] = first - 1
        v = 2
        for x in range(1, N):
            if x != first - 1:
                cyc[v] = x
                v += 1
        lo = 2

    try:
        with nogil:
            while True:
                for i in range(N - 1):
                    tau[cyc[i]] = cyc[i + 1]
                tau[cyc[N - 1]] = cyc[0]

                # cycles and fixed points of x -> tau(x + 1)
                memset(seen, 0, N)
                L = 0
                h = 0
                for x in range(N):
                    if seen[x]:
                        continue
                    L += 1
                    y = x
                    while not seen[y]:
                        seen[y] = 1
                        y = tau[(y + 1) % N]
                    if tau[(x + 1) % N] == x:
                        h += 1

                # orbit size: least divisor k with tau(x + k) = tau(x) + k
                k = N
                for i in range(ndiv - 1):
                    d = divs[i]
                    ok = True
                    for x in range(N):
                        if tau[(x + d) % N] != (tau[x] + d) % N:
                            ok = False
                            break
                    if ok:
                        k = d
                        break

                # canonical iff no conjugate sigma0^j tau sigma0^-j is smaller
                is_canon = True
                for j in range(1, k):
                    for y in range(N):
                        c = (tau[(y - j + N) % N] + j) % N
                        if c != tau[y]:
                            if c < tau[y]:
                                is_canon = False
                            break
                    if not is_canon:
                        break

                v = (L * W + h) * W + k
                raw[v] += 1
                if is_canon:
                    canon[v] += 1

                if N < 3 or not _next_perm(cyc, lo, N):
                    break

        raw_out = {}
        canon_out = {}
        for L in range(W):
            for h in range(W):
                for k in range(W):
                    v = (L * W + h) * W + k
                    if raw[v]:
                        raw_out[(L, h, k)] = raw[v]
                    if canon[v]:
                        canon_out[(L, h, k)] = canon[v]
        return raw_out, canon_out
    finally:
        free(raw); free(canon); free(cyc); free(tau); free(seen); free(divs)
