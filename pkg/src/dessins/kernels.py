"""Backend selection for the brute-force sweep.

The compiled extension is used when it was built; otherwise, or when
``DESSINS_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementation is used.  Both return identical results.
"""
from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from . import _pykernels

if os.environ.get("DESSINS_PURE_PYTHON"):
    _sweep = _pykernels.sweep
    BACKEND = "python"
else:
    try:
        from ._ckernels import sweep as _sweep

        BACKEND = "cython"
    except ImportError:
        _sweep = _pykernels.sweep
        BACKEND = "python"

__all__ = ["BACKEND", "sweep", "sweep_python"]

sweep_python = _pykernels.sweep


def _merge(parts) -> tuple[dict, dict]:
    raw: Counter = Counter()
    canon: Counter = Counter()
    for r, c in parts:
        raw.update(r)
        canon.update(c)
    return dict(sorted(raw.items())), dict(sorted(canon.items()))


@lru_cache(maxsize=32)
def _sweep_cached(N: int) -> tuple[dict, dict]:
    raw, canon = _sweep(N)
    return dict(sorted(raw.items())), dict(sorted(canon.items()))


def sweep(N: int, jobs: int = 1) -> tuple[dict, dict]:
    """Full sweep over all N-cycles, split by ``tau(1)`` across ``jobs`` processes.

    The merged result does not depend on ``jobs``.
    """
    if jobs <= 1 or N < 3:
        raw, canon = _sweep_cached(N)
        return dict(raw), dict(canon)
    firsts = list(range(2, N + 1))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return _merge(pool.map(_sweep, [N] * len(firsts), firsts))
