"""Cubical boundary matrices and Betti numbers of a ComplexView.

Sign convention: the face obtained by collapsing the edge in coordinate
``t`` to its source (lexicographically smaller endpoint) has coefficient
``+(-1)^m``, to its target ``-(-1)^m``, where ``m`` counts the edge
coordinates before ``t``.  Loops cancel to zero, as in the cellular chain
complex of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels
from .complex import ComplexView
from .errors import InvariantViolation

FIELDS = ("q", "f2")


def _normalize_field(coeff: str) -> str:
    c = {"rational": "q", "mod2": "f2", "Q": "q", "F2": "f2"}.get(coeff, coeff)
    if c not in FIELDS:
        raise ValueError(f"unknown coefficient field {coeff!r}")
    return c


@dataclass(frozen=True)
class BoundarySlice:
    """Sparse matrix of the boundary from d-cells (columns) to (d-1)-cells (rows).

    Entries are stored sorted by (column, row) with no duplicates.
    """

    d: int
    shape: tuple[int, int]
    rows: np.ndarray
    cols: np.ndarray
    vals: np.ndarray

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def to_dense(self) -> np.ndarray:
        m = np.zeros(self.shape, dtype=np.int64)
        m[self.rows, self.cols] = self.vals
        return m

    def csc(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        counts = np.bincount(self.cols, minlength=self.shape[1])
        indptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)
        return indptr, self.rows, self.vals

    def triplet_lines(self):
        for r, c, v in zip(self.rows.tolist(), self.cols.tolist(), self.vals.tolist()):
            yield f"{r} {c} {v}"


def _keys(codes: np.ndarray, base: int) -> np.ndarray:
    n = codes.shape[1]
    weights = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return codes.astype(np.int64) @ weights


def boundary_matrix(cv: ComplexView, d: int, coeff: str = "q") -> BoundarySlice:
    coeff = _normalize_field(coeff)
    if d < 1:
        raise ValueError("boundary needs d >= 1")
    n = cv.n
    base = len(cv.items)
    if base ** n >= 2**62:
        raise OverflowError("cell keys do not fit in 64 bits")
    nv = cv.n_vertices
    hi = cv.codes(d)
    lo = cv.codes(d - 1)
    shape = (len(lo), len(hi))
    if len(hi) == 0 or len(lo) == 0:
        if len(hi) and not len(lo):
            raise InvariantViolation(f"{d}-cells present but no {d - 1}-cells")
        empty = np.zeros(0, dtype=np.int64)
        return BoundarySlice(d, shape, empty, empty, empty)

    vidx = {v: i for i, v in enumerate(cv.graph.vertices)}
    src = np.arange(base, dtype=np.int64)
    tgt = np.arange(base, dtype=np.int64)
    for j, e in enumerate(cv.graph.edge_labels):
        u, v = cv.graph.edges[e]
        src[nv + j] = vidx[u]
        tgt[nv + j] = vidx[v]

    hi_keys = _keys(hi, base)
    lo_keys = _keys(lo, base)
    is_edge = hi >= nv
    before = np.cumsum(is_edge, axis=1) - is_edge
    rows, cols, vals = [], [], []
    col_ids = np.arange(len(hi), dtype=np.int64)
    for t in range(n):
        mask = is_edge[:, t]
        if not mask.any():
            continue
        x = hi[mask, t].astype(np.int64)
        place = base ** (n - 1 - t)
        sign = np.where(before[mask, t] % 2 == 0, 1, -1)
        for end, s in ((src, 1), (tgt, -1)):
            fkeys = hi_keys[mask] - (x - end[x]) * place
            pos = np.searchsorted(lo_keys, fkeys)
            pos_c = np.minimum(pos, len(lo_keys) - 1)
            if not np.array_equal(lo_keys[pos_c], fkeys):
                raise InvariantViolation(f"complex is not closed under faces in dimension {d}")
            rows.append(pos_c)
            cols.append(col_ids[mask])
            vals.append(s * sign)
    del hi_keys, is_edge, before, col_ids
    flat = np.concatenate(cols)
    del cols
    flat *= len(lo)
    flat += np.concatenate(rows)
    del rows
    order = np.argsort(flat, kind="stable")
    flat = flat[order]
    vals = np.concatenate(vals).astype(np.int64)[order]
    del order
    # duplicate (row, col) entries come only from loops; merge them
    starts = np.flatnonzero(np.concatenate(([True], flat[1:] != flat[:-1])))
    if len(starts) < len(flat):
        vals = np.add.reduceat(vals, starts)
        flat = flat[starts]
    if coeff == "f2":
        vals %= 2
    keep = vals != 0
    if not keep.all():
        flat, vals = flat[keep], vals[keep]
    return BoundarySlice(d, shape, flat % len(lo), flat // len(lo), vals)


# -- ranks ---------------------------------------------------------------


def _q_reduce(indptr, indices, vals, skip):
    """Fraction-free column reduction over the integers (rank over Q)."""
    pivots: dict[int, dict[int, int]] = {}
    lows = []
    for j in range(len(indptr) - 1):
        if skip[j]:
            continue
        a, b = indptr[j], indptr[j + 1]
        col = dict(zip(indices[a:b].tolist(), vals[a:b].tolist()))
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                lows.append(low)
                break
            pa, cb = piv[low], col[low]
            new = {r: pa * v for r, v in col.items()}
            for r, v in piv.items():
                w = new.get(r, 0) - cb * v
                if w:
                    new[r] = w
                else:
                    new.pop(r, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            col = {r: v // g for r, v in new.items()} if g > 1 else new
    return len(lows), np.array(sorted(lows), dtype=np.int64)


def _reduce(bd: BoundarySlice, coeff: str, skip: np.ndarray, backend=None):
    indptr, rows, vals = bd.csc()
    if coeff == "f2":
        return kernels.gf2_reduce(indptr, rows, skip, backend=backend)
    return _q_reduce(indptr, rows, vals, skip)


def boundary_ranks(cv: ComplexView, coeff: str = "q", backend: str | None = None) -> list[int]:
    """Ranks of the boundaries, indexed by d (entry 0 is 0).

    Runs from the top dimension down.  A d-cell that is the pivot row of a
    reduced column in degree d+1 has a column that reduces to zero in
    degree d, so it is skipped there.
    """
    coeff = _normalize_field(coeff)
    n = cv.n
    ranks = [0] * (n + 2)
    cleared = np.zeros(0, dtype=np.int64)
    for d in range(n, 0, -1):
        bd = boundary_matrix(cv, d, coeff)
        skip = np.zeros(bd.shape[1], dtype=np.uint8)
        skip[cleared] = 1
        ranks[d], cleared = _reduce(bd, coeff, skip, backend)
        del bd, skip
    return ranks[: n + 1]


def betti_numbers(cv: ComplexView, coeff: str = "q", backend: str | None = None) -> tuple[int, ...]:
    """Betti numbers b_0..b_top, where top is the highest dimension with cells.

    Cross-checks the alternating sum against the Euler characteristic.
    """
    counts = cv.counts()
    ranks = boundary_ranks(cv, coeff, backend) + [0]
    top = cv.top_dimension
    betti = tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))
    if sum((-1) ** d * b for d, b in enumerate(betti)) != cv.euler_characteristic():
        raise InvariantViolation("Betti numbers disagree with the Euler characteristic")
    return betti


def betti_report(cv: ComplexView, coeff: str = "q", backend: str | None = None) -> dict:
    coeff = _normalize_field(coeff)
    return {"coeff": coeff, "betti": list(betti_numbers(cv, coeff, backend)), "euler": cv.euler_characteristic()}
