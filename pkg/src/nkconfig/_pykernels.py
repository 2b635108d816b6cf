"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built or ``NKCONFIG_BACKEND=python`` is set.
"""

import numpy as np

from .errors import CellBudgetExceeded


def enumerate_codes(n, k, n_vertices, closures, budget, first_lo=0, first_hi=None):
    """All length-``n`` item tuples whose per-vertex closure counts stay
    below ``k``, in lexicographic order.

    ``closures[i]`` lists the vertex indices in the closure of item ``i``.
    Only tuples whose first entry lies in ``[first_lo, first_hi)`` are
    produced.
    """
    n_items = len(closures)
    if first_hi is None:
        first_hi = n_items
    cap = k - 1
    counts = [0] * n_vertices
    prefix = [0] * n
    out = []

    def rec(pos):
        lo, hi = (first_lo, first_hi) if pos == 0 else (0, n_items)
        for item in range(lo, hi):
            clo = closures[item]
            if any(counts[v] >= cap for v in clo):
                continue
            for v in clo:
                counts[v] += 1
            prefix[pos] = item
            if pos + 1 == n:
                if len(out) >= budget:
                    raise CellBudgetExceeded(budget, len(out) + 1)
                out.append(tuple(prefix))
            else:
                rec(pos + 1)
            for v in clo:
                counts[v] -= 1

    if n > 0:
        rec(0)
    return np.array(out, dtype=np.int32).reshape(len(out), n)


def gf2_reduce(indptr, indices, skip):
    """Column-reduce a sparse 0/1 matrix over GF(2).

    Columns are given in CSC form (``indptr``, ``indices``) with row
    indices sorted; columns flagged in ``skip`` are known to reduce to zero
    and are not processed.  Returns ``(rank, pivot_rows)``.
    """
    n_cols = len(indptr) - 1
    pivot_col = {}
    reduced = {}
    lows = []
    for j in range(n_cols):
        if skip[j]:
            continue
        col = set(indices[indptr[j]:indptr[j + 1]].tolist())
        while col:
            low = max(col)
            other = pivot_col.get(low)
            if other is None:
                pivot_col[low] = j
                reduced[j] = col
                lows.append(low)
                break
            col ^= reduced[other]
    return len(lows), np.array(sorted(lows), dtype=np.int64)
