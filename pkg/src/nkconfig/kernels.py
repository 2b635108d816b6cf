"""Backend selection for the hot kernels.

The compiled extension is used when importable; ``NKCONFIG_BACKEND=python``
forces the pure-Python fallback.  ``NKCONFIG_THREADS`` caps the number of
worker threads used for enumeration (the compiled kernel releases the GIL).
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _pykernels
from .errors import CellBudgetExceeded

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

_requested = os.environ.get("NKCONFIG_BACKEND", "").strip().lower()
if _requested == "python" or _ckernels is None:
    BACKEND = "python"
else:
    BACKEND = "compiled"


def get_backend(name=None):
    name = name or BACKEND
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def worker_count():
    raw = os.environ.get("NKCONFIG_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def enumerate_codes(n, k, n_vertices, closures, budget, backend=None, workers=None):
    """Enumerate valid item tuples, optionally split by first coordinate
    across threads.  Output order does not depend on the worker count."""
    mod = get_backend(backend)
    workers = workers or worker_count()
    n_items = len(closures)
    if workers <= 1 or n_items < 2 or n == 0:
        return mod.enumerate_codes(n, k, n_vertices, closures, budget)
    bounds = np.linspace(0, n_items, min(workers, n_items) + 1).astype(int)
    chunks = list(zip(bounds[:-1], bounds[1:]))
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(
            lambda c: mod.enumerate_codes(n, k, n_vertices, closures, budget, int(c[0]), int(c[1])),
            chunks,
        ))
    total = sum(len(p) for p in parts)
    if total > budget:
        raise CellBudgetExceeded(budget, total)
    return np.concatenate(parts, axis=0)


def gf2_reduce(indptr, indices, skip, backend=None):
    mod = get_backend(backend)
    return mod.gf2_reduce(
        np.ascontiguousarray(indptr, dtype=np.int64),
        np.ascontiguousarray(indices, dtype=np.int64),
        np.ascontiguousarray(skip, dtype=np.uint8),
    )
