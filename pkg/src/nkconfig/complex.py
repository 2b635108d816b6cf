"""Cells of the product cubical structure on G^n and the no-k-equal filter.

A cell is a plain tuple of labels, one per coordinate; each label is a
vertex or an edge of a fixed graph.  Its dimension is the number of edge
coordinates.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import GraphError, ParameterError
from .graph import Graph

Cell = tuple[str, ...]

DEFAULT_BUDGET = 10**7


# -- per-cell counts -----------------------------------------------------


def _check_label(g: Graph, label: str) -> None:
    if label not in g.closures:
        raise GraphError(f"unknown label {label!r}")


def eta(g: Graph, cell: Sequence[str], item: str, mode: str = "at") -> int:
    """Occurrence counts of a vertex or edge in a cell.

    ``mode="at"`` counts coordinates equal to ``item``; ``mode="closure"``
    counts coordinates whose closure contains the vertex ``item``.
    """
    _check_label(g, item)
    if mode == "at":
        return sum(1 for x in cell if x == item)
    if mode == "closure":
        if not g.is_vertex(item):
            raise GraphError(f"closure count needs a vertex, got edge {item!r}")
        clo = g.closures
        return sum(1 for x in cell if item in clo[x])
    raise ValueError(f"unknown mode {mode!r}")


def closure_counts(g: Graph, cell: Sequence[str]) -> Counter:
    """Vertex -> number of coordinates whose closure contains it."""
    c: Counter = Counter()
    clo = g.closures
    for x in cell:
        c.update(clo[x])
    return c


def dimension(g: Graph, cell: Sequence[str]) -> int:
    return sum(1 for x in cell if g.is_edge(x))


def is_dconf_cell(g: Graph, k: int, cell: Sequence[str]) -> bool:
    for x in cell:
        _check_label(g, x)
    return all(c <= k - 1 for c in closure_counts(g, cell).values())


def codim1_faces(g: Graph, cell: Sequence[str]) -> list[tuple[int, Cell]]:
    """Codimension-1 faces as ``(coordinate, face)`` pairs, two per edge
    coordinate (smaller endpoint first)."""
    out = []
    for t, x in enumerate(cell):
        if g.is_edge(x):
            for end in g.edges[x]:
                out.append((t, (*cell[:t], end, *cell[t + 1:])))
    if not out:
        raise ValueError("a zero-dimensional cell has no faces")
    return out


def ext_count(g: Graph, cell: Sequence[str], v: str, excluded: Iterable[str]) -> int:
    """Number of edge coordinates incident to ``v`` that are not in ``excluded``."""
    excluded = set(excluded)
    clo = g.closures
    return sum(1 for x in cell if g.is_edge(x) and x not in excluded and v in clo[x])


def serialize(g: Graph, cell: Sequence[str]) -> str:
    return "|".join(("e:" if g.is_edge(x) else "v:") + x for x in cell)


def parse_cell(g: Graph, text: str) -> Cell:
    out = []
    for part in text.split("|"):
        tag, _, label = part.partition(":")
        if tag not in ("v", "e") or (tag == "v") != g.is_vertex(label) or (tag == "e") != g.is_edge(label):
            raise GraphError(f"bad cell token {part!r}")
        out.append(label)
    return tuple(out)


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(g.dumps().encode()).hexdigest()[:16]


# -- complexes -----------------------------------------------------------


class ComplexView:
    """An immutable set of cells over ``graph`` grouped by dimension.

    Cells are stored as integer codes into ``items`` (vertices first, then
    edges, each sorted), one sorted ``(m, n)`` array per dimension.
    """

    def __init__(self, graph: Graph, k: int, n: int, codes: dict[int, np.ndarray]):
        self.graph = graph
        self.k = k
        self.n = n
        self._codes = {d: codes.get(d, np.zeros((0, n), dtype=np.int32)) for d in range(n + 1)}

    @staticmethod
    def items_of(graph: Graph) -> tuple[str, ...]:
        return graph.vertices + graph.edge_labels

    @cached_property
    def items(self) -> tuple[str, ...]:
        return self.items_of(self.graph)

    @cached_property
    def item_index(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.items)}

    @property
    def n_vertices(self) -> int:
        return len(self.graph.vertices)

    @classmethod
    def from_cells(cls, graph: Graph, k: int, n: int, cells: Iterable[Sequence[str]]) -> "ComplexView":
        items = cls.items_of(graph)
        index = {x: i for i, x in enumerate(items)}
        nv = len(graph.vertices)
        rows = sorted({tuple(index[x] for x in c) for c in cells})
        by_dim: dict[int, list] = {}
        for r in rows:
            if len(r) != n:
                raise ValueError(f"cell {r} does not have {n} coordinates")
            by_dim.setdefault(sum(1 for i in r if i >= nv), []).append(r)
        codes = {d: np.array(rs, dtype=np.int32).reshape(len(rs), n) for d, rs in by_dim.items()}
        return cls(graph, k, n, codes)

    def codes(self, d: int) -> np.ndarray:
        return self._codes.get(d, np.zeros((0, self.n), dtype=np.int32))

    def cells(self, d: int) -> list[Cell]:
        return self._cells_by_dim[d] if 0 <= d <= self.n else []

    @cached_property
    def _cells_by_dim(self) -> dict[int, list[Cell]]:
        items = self.items
        return {d: [tuple(items[i] for i in row) for row in arr.tolist()] for d, arr in self._codes.items()}

    def all_cells(self) -> list[Cell]:
        return [c for d in range(self.n + 1) for c in self.cells(d)]

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.all_cells())

    def __contains__(self, cell) -> bool:
        return tuple(cell) in self.cell_set

    def __len__(self) -> int:
        return sum(len(a) for a in self._codes.values())

    def counts(self) -> list[int]:
        return [len(self._codes[d]) for d in range(self.n + 1)]

    @property
    def top_dimension(self) -> int:
        dims = [d for d, a in self._codes.items() if len(a)]
        return max(dims) if dims else -1

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.counts()))

    def is_face_closed(self) -> bool:
        cs = self.cell_set
        g = self.graph
        return all(f in cs for d in range(1, self.n + 1) for c in self.cells(d) for _, f in codim1_faces(g, c))

    def header(self) -> dict:
        return {"g-hash": graph_hash(self.graph), "k": self.k, "n": self.n, "counts": self.counts()}

    def iter_jsonl(self):
        yield json.dumps(self.header(), sort_keys=True)
        for c in self.all_cells():
            yield serialize(self.graph, c)


def enumerate_dconf(g: Graph, k: int, n: int, budget: int = DEFAULT_BUDGET, backend: str | None = None) -> ComplexView:
    """All cells of DConf^k(g, n), by depth-first search over coordinates
    with pruning as soon as some vertex closure count reaches ``k``."""
    if not (2 <= k <= n):
        raise ParameterError(f"need 2 <= k <= n, got k={k}, n={n}")
    g.require_connected()
    items = ComplexView.items_of(g)
    vidx = {v: i for i, v in enumerate(g.vertices)}
    closures = [tuple(sorted(vidx[v] for v in g.closures[x])) for x in items]
    flat = kernels.enumerate_codes(n, k, len(g.vertices), closures, budget, backend=backend)
    nv = len(g.vertices)
    dims = (flat >= nv).sum(axis=1) if len(flat) else np.zeros(0, dtype=int)
    codes = {d: flat[dims == d] for d in range(n + 1)}
    return ComplexView(g, k, n, codes)
