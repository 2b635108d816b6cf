"""Slow, definitional re-implementations used as test oracles.

Nothing here imports the enumeration, boundary, or rank code under test;
only the Graph container and the subdivision context labelling are shared.
"""

import itertools
from fractions import Fraction


def ends(g, label):
    for lab, e in g.edge_list:
        if lab == label:
            return tuple(e)
    return None


def closure(g, label):
    e = ends(g, label)
    return set(e) if e is not None else {label}


def brute_cells(g, k, n):
    labels = list(g.vertices) + [lab for lab, _ in g.edge_list]
    out = []
    for x in itertools.product(labels, repeat=n):
        if all(sum(1 for c in x if v in closure(g, c)) <= k - 1 for v in g.vertices):
            out.append(x)
    return out


def dim(g, x):
    return sum(1 for c in x if ends(g, c) is not None)


def by_dim(g, cells, n):
    out = [[] for _ in range(n + 1)]
    for x in cells:
        out[dim(g, x)].append(x)
    return [sorted(c) for c in out]


def dense_boundary(g, hi, lo):
    """Rows = lo cells, columns = hi cells, cubical signs, source = min end."""
    index = {c: r for r, c in enumerate(lo)}
    mat = [[0] * len(hi) for _ in lo]
    for j, x in enumerate(hi):
        seen_edges = 0
        for t, c in enumerate(x):
            e = ends(g, c)
            if e is None:
                continue
            sign = -1 if seen_edges % 2 else 1
            src, tgt = min(e), max(e)
            for end, s in ((src, 1), (tgt, -1)):
                face = x[:t] + (end,) + x[t + 1:]
                mat[index[face]][j] += s * sign
            seen_edges += 1
    return mat


def rank_q(mat):
    rows = [[Fraction(v) for v in r] for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def rank_f2(mat):
    basis = {}
    for row in mat:
        v = sum(1 << j for j, a in enumerate(row) if a % 2)
        while v:
            h = v.bit_length() - 1
            if h not in basis:
                basis[h] = v
                break
            v ^= basis[h]
    return len(basis)


def betti(g, k, n, field="q"):
    cells = by_dim(g, brute_cells(g, k, n), n)
    rk = rank_q if field == "q" else rank_f2
    ranks = [0] * (n + 2)
    for d in range(1, n + 1):
        if cells[d] and cells[d - 1]:
            ranks[d] = rk(dense_boundary(g, cells[d], cells[d - 1]))
    top = max((d for d in range(n + 1) if cells[d]), default=-1)
    return tuple(len(cells[d]) - ranks[d] - ranks[d + 1] for d in range(top + 1))


def is_cell(g, k, x):
    return all(sum(1 for c in x if v in closure(g, c)) <= k - 1 for v in g.vertices)


def inflate(ctx, x):
    gone = {ctx.w, ctx.edges[0], ctx.edges[ctx.i]}
    return tuple(ctx.a if c in gone else c for c in x)


def external(ctx, k, x):
    return not is_cell(ctx.base, k, inflate(ctx, x))


def brute_Y(ctx, k, n):
    v1, vi1 = ctx.labels[0], ctx.labels[ctx.i]
    repl = [v1, ctx.w, vi1, ctx.edges[0], ctx.edges[ctx.i]]
    out = set()
    for x in brute_cells(ctx.base, k, n):
        slots = [repl if c == ctx.a else [c] for c in x]
        out.update(itertools.product(*slots))
    return out


def rank_scan(ctx, x):
    """(rank, t, role) straight from the definitions, 1-based."""
    g = ctx.sub
    l = len(ctx.labels)
    for s in range(1, l + 1):
        vs, es = ctx.labels[s - 1], ctx.edges[s - 1]
        near = sum(1 for c in x if vs in closure(g, c))
        at = sum(1 for c in x if c == es)
        if near == at:
            src = ctx.w if s in (1, ctx.i + 1) else ctx.labels[s - 2]
            t = max(t for t in range(len(x)) if x[t] in (src, es))
            return s, t + 1, "collapsible" if x[t] == es else "redundant"
    return None
