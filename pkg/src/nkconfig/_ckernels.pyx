# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: DConf cell enumeration and GF(2) column reduction."""

from libc.stdint cimport int32_t, int64_t
from libcpp.vector cimport vector

import numpy as np

from .errors import CellBudgetExceeded


cdef int _dfs(int n, int cap, int n_items, int lo0, int hi0,
              const int* clo_ptr, const int* clo_idx,
              int* counts, int* prefix, int* cand,
              vector[int32_t]& out, long long budget) noexcept nogil:
    cdef int pos = 0, item, hi, a, b, q, ok
    cdef long long produced = 0
    if n == 0:
        return 0
    cand[0] = lo0
    while pos >= 0:
        hi = hi0 if pos == 0 else n_items
        item = cand[pos]
        if item >= hi:
            pos -= 1
            if pos >= 0:
                for q in range(clo_ptr[prefix[pos]], clo_ptr[prefix[pos] + 1]):
                    counts[clo_idx[q]] -= 1
                cand[pos] += 1
            continue
        a = clo_ptr[item]
        b = clo_ptr[item + 1]
        ok = 1
        for q in range(a, b):
            if counts[clo_idx[q]] >= cap:
                ok = 0
                break
        if not ok:
            cand[pos] += 1
            continue
        if pos == n - 1:
            if produced >= budget:
                return 1
            produced += 1
            for q in range(n - 1):
                out.push_back(prefix[q])
            out.push_back(item)
            cand[pos] += 1
            continue
        for q in range(a, b):
            counts[clo_idx[q]] += 1
        prefix[pos] = item
        pos += 1
        cand[pos] = 0
    return 0


def enumerate_codes(int n, int k, int n_vertices, closures, long long budget,
                    int first_lo=0, first_hi=None):
    cdef int n_items = len(closures)
    cdef int hi0 = n_items if first_hi is None else first_hi
    cdef vector[int] clo_ptr, clo_idx
    cdef vector[int] counts, prefix, cand
    cdef vector[int32_t] out
    cdef int status
    clo_ptr.push_back(0)
    for clo in closures:
        for v in clo:
            clo_idx.push_back(v)
        clo_ptr.push_back(clo_idx.size())
    counts.resize(max(n_vertices, 1), 0)
    prefix.resize(max(n, 1), 0)
    cand.resize(max(n, 1), 0)
    if clo_idx.size() == 0:
        clo_idx.push_back(0)
    with nogil:
        status = _dfs(n, k - 1, n_items, first_lo, hi0, clo_ptr.data(), clo_idx.data(),
                      counts.data(), prefix.data(), cand.data(), out, budget)
    if status:
        raise CellBudgetExceeded(budget, budget + 1)
    cdef Py_ssize_t m = out.size() // n if n > 0 else 0
    arr = np.empty((m, n), dtype=np.int32)
    cdef int32_t[:, ::1] view = arr
    cdef Py_ssize_t r, c
    for r in range(m):
        for c in range(n):
            view[r, c] = out[r * n + c]
    return arr


cdef void _xor_into(const vector[int64_t]& a, const vector[int64_t]& b,
                    vector[int64_t]& res) noexcept nogil:
    cdef size_t i = 0, j = 0
    res.clear()
    while i < a.size() and j < b.size():
        if a[i] < b[j]:
            res.push_back(a[i]); i += 1
        elif b[j] < a[i]:
            res.push_back(b[j]); j += 1
        else:
            i += 1; j += 1
    while i < a.size():
        res.push_back(a[i]); i += 1
    while j < b.size():
        res.push_back(b[j]); j += 1


def gf2_reduce(const int64_t[::1] indptr, const int64_t[::1] indices, const unsigned char[::1] skip):
    cdef Py_ssize_t n_cols = indptr.shape[0] - 1
    cdef int64_t n_rows = 0
    cdef Py_ssize_t j, q
    for q in range(indices.shape[0]):
        if indices[q] + 1 > n_rows:
            n_rows = indices[q] + 1
    cdef vector[int64_t] pivot
    pivot.resize(n_rows, -1)
    cdef vector[vector[int64_t]] store
    cdef vector[int64_t] cur, tmp, lows
    cdef int64_t low, p
    with nogil:
        for j in range(n_cols):
            if skip[j]:
                continue
            cur.clear()
            for q in range(indptr[j], indptr[j + 1]):
                cur.push_back(indices[q])
            while cur.size() > 0:
                low = cur.back()
                p = pivot[low]
                if p < 0:
                    pivot[low] = store.size()
                    store.push_back(cur)
                    lows.push_back(low)
                    break
                _xor_into(cur, store[p], tmp)
                cur.swap(tmp)
    res = np.array(sorted(lows), dtype=np.int64)
    return int(lows.size()), res
