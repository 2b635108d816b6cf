"""Single-vertex subdivision events and the deflation/inflation machinery.

After inserting ``w`` on an edge ``a`` of ``G``, the primitive edge of ``G``
that contains ``a`` is relabelled as a sequence ``v_1..v_l`` with oriented
edges ``e_1..e_l`` of ``G'``:

* ``e_1 = w -> v_1`` and ``e_{i+1} = w -> v_{i+1}`` replace ``a``;
* ``e_s = v_{s-1} -> v_s`` otherwise;
* ``v_i`` and ``v_l`` are the primitive endpoints (case A), or ``v_i == v_l``
  is the single primitive vertex of a cycle (case B).

All indices in the public API are 1-based, matching that labelling.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import Cell, ComplexView, closure_counts, enumerate_dconf, eta, is_dconf_cell
from .errors import GraphError, InvariantViolation
from .graph import Graph, primitive_chains


def _fresh(label: str, taken: set[str]) -> str:
    if label not in taken:
        return label
    for idx in itertools.count(2):
        cand = f"{label}_{idx}"
        if cand not in taken:
            return cand


def fresh_vertex(g: Graph, stem: str = "w") -> str:
    return _fresh(stem, set(g.closures))


def subdivide_edge(g: Graph, edge: str, w: str) -> Graph:
    """Insert the new vertex ``w`` in the middle of ``edge``.

    The two new edges are labelled by concatenating their sorted endpoint
    labels, with a numeric suffix when that label is already taken.
    """
    if edge not in g.edges:
        raise GraphError(f"unknown edge {edge!r}")
    if w in g.closures:
        raise GraphError(f"label {w!r} is already in use")
    u, v = g.edges[edge]
    taken = set(g.closures) | {w}
    edges = {lab: ends for lab, ends in g.edges.items() if lab != edge}
    for end in (u, v):
        lab = _fresh("".join(sorted((w, end))), taken)
        taken.add(lab)
        edges[lab] = (w, end)
    return Graph.from_edges([*g.vertices, w], edges)


def barycentric_subdivision(g: Graph, level: int = 1) -> tuple[Graph, list[tuple[str, str]]]:
    """Insert a midpoint on every edge, one edge at a time.

    Returns the subdivided graph and the ``(edge, new vertex)`` events in
    the order they were applied.
    """
    events = []
    cur = g
    for idx, e in enumerate(g.edge_labels):
        w = _fresh(f"m{level}.{idx}", set(cur.closures))
        cur = subdivide_edge(cur, e, w)
        events.append((e, w))
    return cur, events


def barycentric_tower(g: Graph, levels: int) -> list[Graph]:
    out = [g]
    for j in range(1, levels + 1):
        out.append(barycentric_subdivision(out[-1], j)[0])
    return out


@dataclass(frozen=True)
class SubdivisionContext:
    """Labelling of the primitive path or cycle carrying one insertion."""

    base: Graph = field(repr=False)
    sub: Graph = field(repr=False)
    w: str
    a: str
    case: str  # "A" (path) or "B" (cycle)
    labels: tuple[str, ...]  # v_1..v_l
    edges: tuple[str, ...]  # e_1..e_l, labels in the subdivided graph
    i: int

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.labels)

    @property
    def ell(self) -> int:
        """Upper bound for the rank of an external cell."""
        return self.l if self.case == "A" else self.l - 1

    def v(self, s: int) -> str:
        return self.labels[s - 1]

    def e(self, s: int) -> str:
        return self.edges[s - 1]

    def iota(self, s: int) -> str:
        return self.w if s in (1, self.i + 1) else self.labels[s - 2]

    def tau(self, s: int) -> str:
        return self.labels[s - 1]

    @property
    def endpoints(self) -> tuple[str, str]:
        """(v_1, v_{i+1}), the endpoints of the replaced edge."""
        return self.labels[0], self.labels[self.i]

    @property
    def h_edges(self) -> frozenset[str]:
        return frozenset(self.edges)

    @property
    def replacements(self) -> tuple[str, ...]:
        """Labels that may replace ``a`` under deflation."""
        v1, vi1 = self.endpoints
        return (v1, self.w, vi1, self.e(1), self.e(self.i + 1))

    @property
    def collapsed(self) -> frozenset[str]:
        """Labels that inflation maps back to ``a``."""
        return frozenset((self.w, self.e(1), self.e(self.i + 1)))

    def to_json(self) -> dict:
        return {
            "w": self.w,
            "a": self.a,
            "case": self.case,
            "labels": list(self.labels),
            "edges": [
                {"s": s, "id": self.e(s), "source": self.iota(s), "target": self.tau(s)}
                for s in range(1, self.l + 1)
            ],
            "i": self.i,
            "l": self.l,
            "ell": self.ell,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def locate_H(g: Graph, g_sub: Graph, w: str) -> SubdivisionContext:
    """Recover the subdivision event that produced ``g_sub`` from ``g``.

    The endpoint of the replaced edge with the smaller label becomes v_1.
    """
    if w in g.closures or not g_sub.is_vertex(w):
        raise GraphError(f"{w!r} is not a subdivision vertex of the graph")
    removed = [e for e in g.edge_labels if e not in g_sub.edges]
    new = sorted(g_sub.incidence[w])
    if len(removed) != 1 or len(new) != 2:
        raise GraphError(f"{w!r} is not a subdivision vertex of the graph")
    (a,) = removed
    ends = g.edges[a]
    if sorted(g_sub.other_end(e, w) for e in new) != sorted(ends):
        raise GraphError(f"{w!r} does not subdivide edge {a!r}")
    same_rest = {e: g_sub.edges[e] for e in g_sub.edge_labels if e not in new} == {
        e: g.edges[e] for e in g.edge_labels if e != a
    }
    if not same_rest or set(g_sub.vertices) != set(g.vertices) | {w}:
        raise GraphError("subdivided graph does not match a single insertion")

    _, chains = primitive_chains(g)
    (chain,) = [c for c in chains if a in c.edges]
    verts, cedges = list(chain.vertices), list(chain.edges)
    p = cedges.index(a)  # a joins verts[p] and verts[p + 1]
    v1 = min(ends)
    if verts[p] != v1:
        verts.reverse()
        cedges.reverse()
        p = cedges.index(a)
    case = "B" if chain.is_loop else "A"
    m = len(cedges)
    i = p + 1
    labels = [verts[p - r] for r in range(p + 1)] + verts[p + 1:]
    assert len(labels) == m + 1

    to_v1 = [e for e in new if g_sub.other_end(e, w) == labels[0]]
    e1 = to_v1[0]
    ei1 = [e for e in new if e != e1][0]
    edges = [e1]
    for s in range(2, i + 1):
        edges.append(cedges[p - s + 1])
    edges.append(ei1)
    edges.extend(cedges[p + 1:])
    ctx = SubdivisionContext(g, g_sub, w, a, case, tuple(labels), tuple(edges), i)
    _check_context(ctx)
    return ctx


def _check_context(ctx: SubdivisionContext) -> None:
    g = ctx.sub
    for s in range(1, ctx.l + 1):
        ends = set(g.edges[ctx.e(s)])
        if ends != {ctx.iota(s), ctx.tau(s)}:
            raise InvariantViolation(f"edge e_{s}={ctx.e(s)} does not join {ctx.iota(s)}->{ctx.tau(s)}")
    if ctx.case == "B" and ctx.v(ctx.i) != ctx.v(ctx.l):
        raise InvariantViolation("cycle case requires v_i == v_l")
    if ctx.case == "A" and ctx.v(ctx.i) == ctx.v(ctx.l):
        raise InvariantViolation("path case requires v_i != v_l")


def subdivision_contexts(g: Graph) -> list[SubdivisionContext]:
    """One context per edge of ``g``, inserting a fresh vertex on it."""
    out = []
    w = fresh_vertex(g)
    for e in g.edge_labels:
        out.append(locate_H(g, subdivide_edge(g, e, w), w))
    return out


# -- deflation / inflation ----------------------------------------------


def deflate(x: Sequence[str], ctx: SubdivisionContext, k: int) -> list[Cell]:
    """Every way of replacing each ``a`` coordinate by one of
    v_1, w, v_{i+1}, e_1, e_{i+1}."""
    if not is_dconf_cell(ctx.base, k, x):
        raise InvariantViolation("deflation needs a DConf cell of the base graph", tuple(x))
    slots = [ctx.replacements if c == ctx.a else (c,) for c in x]
    return [tuple(c) for c in itertools.product(*slots)]


def inflate(xp: Sequence[str], ctx: SubdivisionContext) -> Cell:
    col = ctx.collapsed
    return tuple(ctx.a if c in col else c for c in xp)


def build_Y(g: Graph, g_sub: Graph, ctx: SubdivisionContext, k: int, n: int,
            base_complex: ComplexView | None = None) -> ComplexView:
    """The subcomplex of DConf^k(g_sub, n) formed by all deflations."""
    cv = base_complex if base_complex is not None else enumerate_dconf(g, k, n)
    cells = set()
    for x in cv.all_cells():
        cells.update(deflate(x, ctx, k))
    return ComplexView.from_cells(g_sub, k, n, cells)


def spelled_external(xp: Sequence[str], ctx: SubdivisionContext, k: int) -> bool:
    """Externality through closure counts taken in the subdivided graph."""
    g = ctx.sub
    cc = closure_counts(g, xp)
    ww = cc[ctx.w]
    for s in (1, ctx.i + 1):
        if ww + cc[ctx.v(s)] - eta(g, xp, ctx.e(s)) >= k:
            return True
    return False


def is_external(xp: Sequence[str], ctx: SubdivisionContext, k: int) -> bool:
    """True iff the inflation of ``xp`` is not a DConf cell of the base graph.

    The two characterisations are evaluated independently and must agree.
    """
    by_inflation = not is_dconf_cell(ctx.base, k, inflate(xp, ctx))
    if by_inflation != spelled_external(xp, ctx, k):
        raise InvariantViolation("inflation and count-based externality tests disagree", tuple(xp))
    return by_inflation


def external_cells(cv: ComplexView, ctx: SubdivisionContext) -> list[Cell]:
    return [c for c in cv.all_cells() if is_external(c, ctx, cv.k)]
