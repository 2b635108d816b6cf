"""Rank function, the matching on external cells, and its verification.

A subdivided complex DConf^k(G', n) is split into the critical cells (the
deflation subcomplex Y) and pairs of external cells.  Each external cell
of rank j is paired by toggling, in the last coordinate holding iota(e_j)
or e_j, between those two labels.  The verifiers below certify per
instance that the pairing is a perfect matching on external cells, that it
is acyclic, and that the critical cells form a subcomplex.
"""

from __future__ import annotations

import graphlib
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .complex import Cell, ComplexView, codim1_faces, serialize
from .errors import InsufficientSubdivision, InvariantViolation
from .graph import check_sufficiently_subdivided
from .homology import betti_numbers
from .subdivision import SubdivisionContext, build_Y, is_external

log = logging.getLogger(__name__)


class RankUndefined(InvariantViolation):
    """No index s <= ell has property R(s); only possible without sufficiency."""


@dataclass(frozen=True)
class RankInfo:
    rank: int
    t: int  # 1-based coordinate
    role: str  # "redundant" or "collapsible"

    def to_json(self) -> dict:
        return {"rank": self.rank, "t": self.t, "role": self.role}


def _closure(ctx: SubdivisionContext, xp: Sequence[str]) -> Counter:
    c: Counter = Counter()
    clo = ctx.sub.closures
    for x in xp:
        c.update(clo[x])
    return c


def has_property_R(xp: Sequence[str], ctx: SubdivisionContext, s: int) -> bool:
    """Every coordinate whose closure touches v_s equals e_s."""
    if not 1 <= s <= ctx.l:
        raise ValueError(f"index {s} outside 1..{ctx.l}")
    return _closure(ctx, xp)[ctx.v(s)] == sum(1 for x in xp if x == ctx.e(s))


def minimal_R(xp: Sequence[str], ctx: SubdivisionContext) -> int | None:
    """Least s in 1..l with property R(s), or None."""
    cc = _closure(ctx, xp)
    at = Counter(xp)
    for s in range(1, ctx.l + 1):
        if cc[ctx.v(s)] == at[ctx.e(s)]:
            return s
    return None


def rank(xp: Sequence[str], ctx: SubdivisionContext) -> RankInfo:
    s = minimal_R(xp, ctx)
    if s is None or s > ctx.ell:
        raise RankUndefined(f"no index s <= {ctx.ell} with property R(s)", tuple(xp))
    lo, ed = ctx.iota(s), ctx.e(s)
    hits = [t for t, x in enumerate(xp) if x == lo or x == ed]
    if not hits:
        raise InvariantViolation(f"rank-{s} cell holds neither iota(e_{s}) nor e_{s}", tuple(xp))
    t = hits[-1]
    return RankInfo(s, t + 1, "collapsible" if xp[t] == ed else "redundant")


def toggle(xp: Sequence[str], ctx: SubdivisionContext, info: RankInfo) -> Cell:
    t = info.t - 1
    new = ctx.iota(info.rank) if info.role == "collapsible" else ctx.e(info.rank)
    return (*xp[:t], new, *xp[t + 1:])


def partner(xp: Sequence[str], ctx: SubdivisionContext, k: int | None = None) -> Cell:
    """The cell matched with the external cell ``xp``."""
    return toggle(xp, ctx, rank(xp, ctx))


# -- the matching --------------------------------------------------------


@dataclass(frozen=True)
class MatchingRecord:
    pairs: dict[Cell, Cell]  # redundant -> collapsible
    annotations: dict[Cell, RankInfo] = field(default_factory=dict)
    critical: frozenset[Cell] = frozenset()

    @cached_property
    def collapsible(self) -> dict[Cell, Cell]:
        """Collapsible -> redundant."""
        return {x: y for y, x in self.pairs.items()}

    def mate(self, cell: Cell) -> Cell | None:
        return self.pairs.get(cell) or self.collapsible.get(cell)

    def is_critical(self, cell: Cell) -> bool:
        return cell in self.critical

    def iter_jsonl(self, g) -> Iterator[str]:
        for c, info in sorted(self.annotations.items()):
            rec = {"cell": serialize(g, c), **info.to_json(), "partner": serialize(g, self.mate(c))}
            yield json.dumps(rec, sort_keys=True)


def matching_from_pairs(cv: ComplexView, pairs: dict[Cell, Cell],
                        annotations: dict[Cell, RankInfo] | None = None) -> MatchingRecord:
    matched = set(pairs) | set(pairs.values())
    return MatchingRecord(dict(pairs), dict(annotations or {}), frozenset(cv.cell_set - matched))


def empty_matching(cv: ComplexView) -> MatchingRecord:
    return matching_from_pairs(cv, {})


def require_sufficient(ctx: SubdivisionContext, k: int, n: int) -> None:
    report = check_sufficiently_subdivided(ctx.base, k, n)
    if not report.ok:
        raise InsufficientSubdivision(report)


def build_matching(cv: ComplexView, ctx: SubdivisionContext, Y: ComplexView | None = None) -> MatchingRecord:
    """Pair every external cell of ``cv`` = DConf^k(G', n).

    Refuses graphs that are not (k, n)-sufficiently subdivided.  Checks on
    the fly that partners are external cells of equal rank and t-value and
    that the critical cells are exactly the cells of Y.
    """
    if cv.graph != ctx.sub:
        raise ValueError("complex is not built on the subdivided graph of the context")
    k, n = cv.k, cv.n
    require_sufficient(ctx, k, n)
    cells = cv.cell_set
    pairs: dict[Cell, Cell] = {}
    ann: dict[Cell, RankInfo] = {}
    critical = []
    for x in cv.all_cells():
        if not is_external(x, ctx, k):
            critical.append(x)
            continue
        info = rank(x, ctx)
        ann[x] = info
        if info.role == "redundant":
            z = toggle(x, ctx, info)
            if z not in cells:
                raise InvariantViolation("partner is not a cell of the complex", x)
            pairs[x] = z
    for y, z in pairs.items():
        if z not in ann:
            raise InvariantViolation("partner of an external cell is not external", y)
        zi, yi = ann[z], ann[y]
        if (zi.rank, zi.t) != (yi.rank, yi.t) or zi.role != "collapsible":
            raise InvariantViolation("paired cells disagree on rank, t or role", y)
        if toggle(z, ctx, zi) != y:
            raise InvariantViolation("partner map is not an involution", z)
    if len(pairs) * 2 != len(ann):
        raise InvariantViolation("external cells are not perfectly paired")
    if Y is None:
        Y = build_Y(ctx.base, ctx.sub, ctx, k, n)
    crit = frozenset(critical)
    if crit != Y.cell_set:
        diff = next(iter(crit ^ Y.cell_set))
        raise InvariantViolation("critical cells differ from the deflation subcomplex", diff)
    return MatchingRecord(pairs, ann, crit)


# -- structural checks ---------------------------------------------------


def pair_coherence_problems(cv: ComplexView, m: MatchingRecord, ctx: SubdivisionContext) -> list[str]:
    """Everything that makes ``m`` differ from a valid rank-based pairing."""
    probs = []
    cells = cv.cell_set
    seen: set[Cell] = set()
    for y, x in m.pairs.items():
        for c in (y, x):
            if c in seen:
                probs.append(f"cell matched twice: {c}")
            seen.add(c)
            if c not in cells:
                probs.append(f"matched cell not in complex: {c}")
    if seen & m.critical:
        probs.append("critical cells also appear in pairs")
    if seen | m.critical != cells:
        probs.append("cells neither critical nor matched")
    for y, x in m.pairs.items():
        diff = [t for t in range(len(y)) if y[t] != x[t]]
        if len(diff) != 1:
            probs.append(f"pair differs in {len(diff)} coordinates: {y} -> {x}")
            continue
        try:
            yi, xi = rank(y, ctx), rank(x, ctx)
        except InvariantViolation as exc:
            probs.append(str(exc))
            continue
        if (yi.rank, yi.t) != (xi.rank, xi.t) or yi.role != "redundant" or xi.role != "collapsible":
            probs.append(f"pair does not share rank and t: {y} -> {x}")
        elif diff[0] != yi.t - 1 or y[diff[0]] != ctx.iota(yi.rank) or x[diff[0]] != ctx.e(yi.rank):
            probs.append(f"pair is not the iota(e_j) -> e_j toggle: {y} -> {x}")
    ext = {c for c in cells if is_external(c, ctx, cv.k)}
    if ext != seen:
        probs.append(f"matched cells differ from external cells ({len(seen)} vs {len(ext)})")
    return probs


def verify_critical_subcomplex(cv: ComplexView, m: MatchingRecord) -> bool:
    g = cv.graph
    crit = m.critical
    for c in crit:
        if any(ch in g.edges for ch in c):
            if any(f not in crit for _, f in codim1_faces(g, c)):
                return False
    return True


@dataclass(frozen=True)
class AcyclicityReport:
    vpath_ok: bool
    toposort_ok: bool
    cycle: tuple[Cell, ...] = ()

    @property
    def ok(self) -> bool:
        return self.vpath_ok and self.toposort_ok


def vpath_cycle(cv: ComplexView, m: MatchingRecord) -> tuple[Cell, ...] | None:
    """Search for a closed alternating path y0 -> x0 -> y1 -> ... -> y0.

    Each step goes up a matched pair and down to a different face that is
    itself matched upward.
    """
    g = cv.graph
    succ: dict[Cell, list[Cell]] = {}
    for y, x in m.pairs.items():
        if len(x) != len(y) or not any(c in g.edges for c in x):
            succ[y] = []
            continue
        succ[y] = [f for _, f in codim1_faces(g, x) if f != y and f in m.pairs]
    color: dict[Cell, int] = {}
    for root in sorted(succ):
        if color.get(root):
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        path = [root]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                path.pop()
                continue
            c = color.get(nxt, 0)
            if c == 1:
                start = path.index(nxt)
                cyc = []
                for y in path[start:] + [nxt]:
                    cyc.append(y)
                    cyc.append(m.pairs[y])
                return tuple(cyc[:-2])
            if c == 0:
                color[nxt] = 1
                path.append(nxt)
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return None


def hasse_cycle(cv: ComplexView, m: MatchingRecord) -> tuple[Cell, ...] | None:
    """Topologically sort the whole modified Hasse diagram."""
    g = cv.graph
    ts = graphlib.TopologicalSorter()
    for c in cv.all_cells():
        ts.add(c)
    for d in range(1, cv.n + 1):
        for x in cv.cells(d):
            for _, y in codim1_faces(g, x):
                if m.pairs.get(y) == x:
                    ts.add(x, y)  # y -> x
                else:
                    ts.add(y, x)  # x -> y
    # matched pairs that are not face relations still reverse an arrow
    for y, x in m.pairs.items():
        ts.add(x, y)
    try:
        ts.prepare()
    except graphlib.CycleError as exc:
        return tuple(exc.args[1])
    return None


def verify_acyclic(cv: ComplexView, m: MatchingRecord) -> AcyclicityReport:
    """Two independent checks: alternating-path search and a full sort."""
    c1 = vpath_cycle(cv, m)
    c2 = hasse_cycle(cv, m)
    return AcyclicityReport(c1 is None, c2 is None, c1 or c2 or ())


# -- Morse complex -------------------------------------------------------


def morse_boundary_f2(cv: ComplexView, m: MatchingRecord, d: int, crit_index: dict[int, dict[Cell, int]]) -> list[int]:
    """Morse boundary of each critical d-cell as a bitmask over critical
    (d-1)-cells: parity of gradient paths, memoized over collapsible cells."""
    g = cv.graph
    memo: dict[Cell, int] = {}
    rows = crit_index.get(d - 1, {})

    def flow(z: Cell) -> int:
        # iterative post-order evaluation of the recursive path count
        stack = [z]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            pending = []
            acc = 0
            for _, y in codim1_faces(g, cur):
                if y in rows:
                    acc ^= 1 << rows[y]
                    continue
                x = m.pairs.get(y)
                if x is None or x == cur:
                    continue
                if x in memo:
                    acc ^= memo[x]
                else:
                    pending.append(x)
            if pending:
                stack.extend(pending)
                continue
            memo[cur] = acc
            stack.pop()
        return memo[z]

    cols = crit_index.get(d, {})
    return [flow(c) for c in sorted(cols, key=cols.get)]


def morse_betti(cv: ComplexView, m: MatchingRecord, coeff: str = "f2", check: bool = True) -> tuple[int, ...]:
    """Betti numbers over GF(2) of the Morse complex of an acyclic matching."""
    if coeff not in ("f2", "mod2"):
        raise ValueError("the Morse complex is computed over GF(2) only")
    if check:
        rep = verify_acyclic(cv, m)
        if not rep.ok:
            raise InvariantViolation("matching is not acyclic", rep.cycle[0] if rep.cycle else None)
    crit_index: dict[int, dict[Cell, int]] = {}
    g = cv.graph
    for c in sorted(m.critical):
        d = sum(1 for x in c if x in g.edges)
        crit_index.setdefault(d, {})
        crit_index[d][c] = len(crit_index[d])
    top = cv.top_dimension
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        cols = morse_boundary_f2(cv, m, d, crit_index)
        indptr = [0]
        idx: list[int] = []
        for mask in cols:
            while mask:
                low = mask & -mask
                idx.append(low.bit_length() - 1)
                mask ^= low
            indptr.append(len(idx))
        ranks[d], _ = kernels.gf2_reduce(np.array(indptr), np.array(idx, dtype=np.int64),
                                         np.zeros(len(cols), dtype=np.uint8))
    counts = [len(crit_index.get(d, {})) for d in range(top + 1)]
    return tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))


# -- lemma oracles -------------------------------------------------------


LEMMAS = ("rank_bound", "rank_bound_cycle", "iota_or_edge_present", "face_op",
          "field_wd", "acyclic_lemma", "const_rank", "const_diff")


@dataclass
class LemmaReport:
    checked: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    cases: Counter = field(default_factory=Counter)
    examples: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fail(self, name: str, msg: str) -> None:
        self.violations[name] += 1
        if len(self.examples) < 20:
            self.examples.append(f"{name}: {msg}")

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_json(self) -> dict:
        return {
            "checked": {k: self.checked[k] for k in sorted(self.checked)},
            "violations": {k: self.violations.get(k, 0) for k in sorted(self.checked)},
            "acyclic_lemma_cases": dict(sorted(self.cases.items())),
            "notes": list(self.notes),
        }


def _gap_set(ctx: SubdivisionContext, z: Sequence[str], s: int) -> frozenset[int]:
    """Coordinates whose closure touches v_s but which are not e_s."""
    vs, es = ctx.v(s), ctx.e(s)
    clo = ctx.sub.closures
    return frozenset(t for t, c in enumerate(z) if vs in clo[c] and c != es)


def _acyclic_lemma_case(ctx, j, h, f, u, rank_y) -> tuple[str, bool]:
    """Which item of the case analysis applies, and whether its claims hold."""
    i, l, B = ctx.i, ctx.l, ctx.case == "B"
    in_h = f in ctx.h_edges
    v = ctx.v
    e = ctx.e
    vi_in_f = v(i) in ctx.sub.edges[f]
    if h < 0:
        return "A", f == e(j) and u == v(j)
    if h == 0:
        if j in (1, i + 1):
            jp = i + 1 if j == 1 else 1
            return "B.1", u == ctx.w and f == e(jp)
        return "B.2", u == v(j - 1) and f == e(j - 1)
    if h == 1:
        if j == i + 1:
            ok = u != v(i) and vi_in_f and ((not in_h) or (f == e(l) and i < l - 2 and B))
            return "C.1", ok
        return "C.2", f == e(j) and u == v(j)
    s = rank_y + 1
    d1 = f == e(s) and u == v(s) and i + 1 != s and s <= j - 1
    d2 = (not in_h) and u != v(i) and vi_in_f and rank_y == i and i <= j - 2
    d3 = f == e(l) and j + 1 < l and u != v(i) and rank_y == i and i <= j - 2 and B
    hits = [name for name, ok in (("D.1", d1), ("D.2", d2), ("D.3", d3)) if ok]
    return (hits[0] if len(hits) == 1 else "D"), len(hits) == 1


def lemma_checks(cv: ComplexView, m: MatchingRecord, ctx: SubdivisionContext) -> LemmaReport:
    """Exhaustively evaluate the structural claims behind the matching."""
    rep = LemmaReport()
    for name in LEMMAS:
        rep.checked[name] += 0
    g = ctx.sub
    k = cv.k
    i, l, B = ctx.i, ctx.l, ctx.case == "B"
    ranks = {c: info.rank for c, info in m.annotations.items()}
    cells = cv.cell_set

    def ext_rank(c):
        return ranks.get(c)

    for x, info in m.annotations.items():
        j = info.rank
        rep.checked["rank_bound"] += 1
        s = minimal_R(x, ctx)
        if s is None or s > ctx.ell:
            rep.fail("rank_bound", f"{x} minimal R index {s} > {ctx.ell}")
        if B and i == l - 1:
            rep.checked["rank_bound_cycle"] += 1
            if j > l - 2:
                rep.fail("rank_bound_cycle", f"{x} rank {j} > {l - 2}")
        rep.checked["iota_or_edge_present"] += 1
        if sum(1 for c in x if c in (ctx.iota(j), ctx.e(j))) < 1:
            rep.fail("iota_or_edge_present", str(x))

    edge_pos = {ctx.e(s): s for s in range(1, l + 1)}
    w = ctx.w
    for x in cv.all_cells():
        for t, c in enumerate(x):
            j = edge_pos.get(c)
            if j is None:
                continue
            y = (*x[:t], ctx.iota(j), *x[t + 1:])
            if y not in cells:
                rep.fail("face_op", f"iota face {y} missing")
                continue
            rep.checked["face_op"] += 1
            wx = sum(1 for z in x if w in g.closures[z])
            wy = sum(1 for z in y if w in g.closures[z])
            if wx != wy:
                rep.fail("face_op", f"w-closure count changes {x} -> {y}")
            for s in range(1, l + 1):
                if B and {j, s} == {i, l}:
                    continue
                if _gap_set(ctx, x, s) != _gap_set(ctx, y, s):
                    rep.fail("face_op", f"gap set s={s} changes {x} -> {y}")
            rep.checked["field_wd"] += 1
            if (ext_rank(x) == j) != (ext_rank(y) == j):
                rep.fail("field_wd", f"{x} vs {y} at rank {j}")

    observed = set(ranks.values())
    for x, y in m.collapsible.items():
        j = ranks[x]
        for t, f in enumerate(x):
            if f not in g.edges:
                continue
            for u in g.edges[f]:
                yp = (*x[:t], u, *x[t + 1:])
                if yp == y or yp not in m.pairs:
                    continue
                # non-reversed arrow x -> yp between external cells
                rep.checked["acyclic_lemma"] += 1
                ry = ranks[yp]
                name, ok = _acyclic_lemma_case(ctx, j, j - ry, f, u, ry)
                rep.cases[name] += 1
                if not ok:
                    rep.fail("acyclic_lemma", f"case {name}: {x} -> {yp}")
        for t, f in enumerate(x):
            s = edge_pos.get(f)
            if s is None or s not in observed:
                continue
            yp = (*x[:t], ctx.iota(s), *x[t + 1:])
            if yp not in m.pairs:
                continue
            rep.checked["const_rank"] += 1
            if ranks[yp] != j:
                rep.fail("const_rank", f"{x} -> {yp}")
            elif yp != y and {s, j} != {1, i + 1}:
                rep.fail("const_rank", f"unexpected index pair {{{s}, {j}}} at {x}")

    if i + 1 in observed:
        for y, x in m.pairs.items():
            if ranks[y] > i + 1:
                continue
            rep.checked["const_diff"] += 1
            gx = _gap_set(ctx, x, i + 1)
            if _gap_set(ctx, y, i + 1) != gx:
                rep.fail("const_diff", f"pair {y} -> {x}")
            for _, y2 in codim1_faces(g, x):
                if y2 == y or y2 not in m.pairs or ranks[y2] > i + 1:
                    continue
                rep.checked["const_diff"] += 1
                if _gap_set(ctx, y2, i + 1) != gx:
                    rep.fail("const_diff", f"arrow {x} -> {y2}")
    else:
        rep.notes.append(f"const_diff skipped: no external cell has rank i+1={i + 1}")
        log.info("const_diff skipped for %s: rank %d not attained", ctx.a, i + 1)
    return rep


# -- fault injection -----------------------------------------------------


def corrupt_matching(cv: ComplexView, m: MatchingRecord, mode: str, index: int = 0) -> MatchingRecord:
    """A deliberately damaged copy of ``m``.

    ``drop`` unpairs one pair; ``repoint`` re-pairs a redundant cell with a
    different coface; ``swap`` exchanges the partners of two pairs in the
    same dimensions whose collapsible cells share a face.
    """
    g = cv.graph
    items = sorted(m.pairs.items())
    if not items:
        raise ValueError("nothing to corrupt")
    y, x = items[index % len(items)]
    pairs = dict(m.pairs)
    if mode == "drop":
        del pairs[y]
    elif mode == "repoint":
        cofaces = sorted(
            c for c in _cofaces(g, y) if c in cv.cell_set and c != x
        )
        if not cofaces:
            del pairs[y]
        else:
            pairs[y] = cofaces[0]
    elif mode == "swap":
        faces_x = {f for _, f in codim1_faces(g, x)}
        for y2, x2 in items:
            if y2 == y or len([c for c in x2 if c in g.edges]) != len([c for c in x if c in g.edges]):
                continue
            if faces_x & {f for _, f in codim1_faces(g, x2)}:
                pairs[y], pairs[y2] = x2, x
                break
        else:
            del pairs[y]
    else:
        raise ValueError(f"unknown corruption mode {mode!r}")
    return matching_from_pairs(cv, pairs, m.annotations)


def _cofaces(g, y: Cell) -> list[Cell]:
    out = []
    for t, c in enumerate(y):
        if c in g.edges:
            continue
        for e in g.incidence[c]:
            out.append((*y[:t], e, *y[t + 1:]))
    return out


def detect_corruption(cv: ComplexView, m: MatchingRecord, ctx: SubdivisionContext) -> dict[str, bool]:
    """Which of the three verifiers flag ``m``."""
    return {
        "coherence": bool(pair_coherence_problems(cv, m, ctx)),
        "subcomplex": not verify_critical_subcomplex(cv, m),
        "acyclic": not verify_acyclic(cv, m).ok,
    }


# -- full instance verification -----------------------------------------


def verify_instance(ctx: SubdivisionContext, k: int, n: int, budget: int | None = None,
                    with_betti: bool = True, coeff: str = "q") -> dict:
    """Run every verifier on one subdivision event and return the report."""
    from .complex import DEFAULT_BUDGET, enumerate_dconf

    budget = budget or DEFAULT_BUDGET
    require_sufficient(ctx, k, n)
    base = enumerate_dconf(ctx.base, k, n, budget)
    cv = enumerate_dconf(ctx.sub, k, n, budget)
    Y = build_Y(ctx.base, ctx.sub, ctx, k, n, base)
    m = build_matching(cv, ctx, Y)
    acyc = verify_acyclic(cv, m)
    lemmas = lemma_checks(cv, m, ctx)
    report = {
        "cells": len(cv),
        "counts": cv.counts(),
        "Y": len(Y),
        "Y_counts": Y.counts(),
        "external": len(m.annotations),
        "pairs": len(m.pairs),
        "critical": len(m.critical),
        "acyclic": acyc.ok,
        "acyclic_checkers": {"vpath": acyc.vpath_ok, "toposort": acyc.toposort_ok},
        "critical_equals_Y": m.critical == Y.cell_set,
        "critical_subcomplex": verify_critical_subcomplex(cv, m),
        "pair_coherence": not pair_coherence_problems(cv, m, ctx),
        "lemma_checks": lemmas.to_json(),
        "lemmas_ok": lemmas.ok,
    }
    if with_betti:
        b_base = betti_numbers(base, coeff)
        b_sub = betti_numbers(cv, coeff)
        b_y = betti_numbers(Y, coeff)
        b_morse = morse_betti(cv, m, "f2", check=False) if acyc.ok else None
        report["betti"] = {
            "coeff": coeff,
            "base": list(b_base),
            "subdivided": list(b_sub),
            "Y": list(b_y),
            "morse_f2": list(b_morse) if b_morse is not None else None,
        }
        report["betti_equal"] = (
            _trim(b_base) == _trim(b_sub) == _trim(b_y)
            and (b_morse is None or _trim(b_morse) == _trim(betti_numbers(cv, "f2")))
        )
    return report


def _trim(b: Sequence[int]) -> tuple[int, ...]:
    b = list(b)
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return tuple(b)
