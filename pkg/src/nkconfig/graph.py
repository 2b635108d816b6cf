"""Finite multigraphs, essential vertices, primitive graphs and the
(k, n)-sufficient-subdivision check.

Vertices and edges are identified by string labels.  The two label sets
must be disjoint so that a cell coordinate can be classified from its label
alone.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import GraphError, ParameterError


@dataclass(frozen=True)
class Graph:
    """Immutable finite multigraph.

    ``edges`` maps an edge label to its endpoint pair, stored sorted; a loop
    has equal endpoints.
    """

    vertices: tuple[str, ...]
    edge_list: tuple[tuple[str, tuple[str, str]], ...] = field(repr=False)

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex label")
        seen = set()
        for label, (u, v) in self.edge_list:
            if label in seen:
                raise GraphError(f"duplicate edge label {label!r}")
            seen.add(label)
            if u not in vset or v not in vset:
                raise GraphError(f"edge {label!r} has an undeclared endpoint")
        clash = vset & seen
        if clash:
            raise GraphError(f"labels used both as vertex and edge: {sorted(clash)}")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Mapping[str, tuple[str, str]]) -> "Graph":
        verts = tuple(sorted(vertices))
        elist = tuple(sorted((lab, tuple(sorted(ends))) for lab, ends in edges.items()))
        return cls(verts, elist)

    @cached_property
    def edges(self) -> dict[str, tuple[str, str]]:
        return dict(self.edge_list)

    @cached_property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.edge_list)

    @cached_property
    def _vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def incidence(self) -> dict[str, tuple[str, ...]]:
        """Vertex -> labels of incident edges (a loop is listed once)."""
        inc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for lab, (u, v) in self.edge_list:
            inc[u].append(lab)
            if v != u:
                inc[v].append(lab)
        return {v: tuple(labs) for v, labs in inc.items()}

    @cached_property
    def closures(self) -> dict[str, frozenset[str]]:
        """Label -> set of vertices in the closure of that vertex or edge."""
        out = {v: frozenset((v,)) for v in self.vertices}
        for lab, ends in self.edge_list:
            out[lab] = frozenset(ends)
        return out

    def is_vertex(self, label: str) -> bool:
        return label in self._vertex_set

    def is_edge(self, label: str) -> bool:
        return label in self.edges

    def other_end(self, edge: str, v: str) -> str:
        u, w = self.edges[edge]
        return w if u == v else u

    def is_simple(self) -> bool:
        pairs = set()
        for _, (u, v) in self.edge_list:
            if u == v or (u, v) in pairs:
                return False
            pairs.add((u, v))
        return True

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            x = todo.pop()
            for e in self.incidence[x]:
                y = self.other_end(e, x)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return len(seen) == len(self.vertices)

    def require_connected(self) -> None:
        if not self.is_connected():
            raise GraphError("graph is not connected")

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": lab, "ends": list(ends)} for lab, ends in self.edge_list],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            verts = [str(v) for v in data["vertices"]]
            edges = {}
            for rec in data["edges"]:
                ends = rec["ends"]
                if len(ends) != 2:
                    raise GraphError(f"edge {rec['id']!r} must have exactly two ends")
                if rec["id"] in edges:
                    raise GraphError(f"duplicate edge label {rec['id']!r}")
                edges[str(rec["id"])] = (str(ends[0]), str(ends[1]))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph record: {exc}") from exc
        return cls.from_edges(verts, edges)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def loads(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise GraphError("graph JSON must be an object")
        return cls.from_json(data)


def degree(g: Graph, v: str) -> int:
    """Number of edge-endpoint incidences at ``v``; a loop counts twice."""
    if not g.is_vertex(v):
        raise GraphError(f"unknown vertex {v!r}")
    return sum(2 if g.edges[e][0] == g.edges[e][1] else 1 for e in g.incidence[v])


def essential_vertices(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if degree(g, v) != 2)


def is_cycle_graph(g: Graph) -> bool:
    return g.is_connected() and bool(g.edge_list) and all(degree(g, v) == 2 for v in g.vertices)


# -- primitive graph ---------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """A primitive edge seen inside the original graph.

    ``vertices`` has one more entry than ``edges``; for a primitive loop the
    first and last vertex coincide.
    """

    label: str
    vertices: tuple[str, ...]
    edges: tuple[str, ...]

    @property
    def is_loop(self) -> bool:
        return self.vertices[0] == self.vertices[-1]


def primitive_chains(g: Graph) -> tuple[frozenset[str], list[Chain]]:
    """Primitive vertices of ``g`` and the chains of ``g``-edges covering
    each primitive edge, deterministically ordered and labelled."""
    g.require_connected()
    if is_cycle_graph(g):
        base = min(g.vertices)
        verts = [base]
        edges: list[str] = []
        prev_edge = None
        cur = base
        while True:
            nxt_edges = sorted(e for e in g.incidence[cur] if e != prev_edge)
            if prev_edge is None:
                e = nxt_edges[0]
            else:
                # a 2-cycle has two parallel edges; a 1-cycle has the loop itself
                e = nxt_edges[0] if nxt_edges else prev_edge
            cur = g.other_end(e, cur)
            edges.append(e)
            verts.append(cur)
            prev_edge = e
            if cur == base:
                break
        return frozenset((base,)), [Chain(min(edges), tuple(verts), tuple(edges))]

    prim = frozenset(v for v in g.vertices if degree(g, v) != 2)
    chains: list[Chain] = []
    used: set[str] = set()
    for start in sorted(prim):
        for e0 in sorted(g.incidence[start]):
            if e0 in used:
                continue
            verts = [start]
            edges = []
            e, cur = e0, start
            while True:
                nxt = g.other_end(e, cur)
                edges.append(e)
                verts.append(nxt)
                used.add(e)
                if nxt in prim:
                    break
                (e,) = [f for f in g.incidence[nxt] if f != e]
                cur = nxt
            chains.append(Chain(min(edges), tuple(verts), tuple(edges)))
    chains.sort(key=lambda c: c.label)
    return prim, chains


def primitive_graph(g: Graph) -> tuple[Graph, dict[str, tuple[str, ...]]]:
    """Smooth every degree-2 vertex (or collapse a cycle to a single loop).

    Returns the primitive graph and a map from each primitive edge label to
    the vertex sequence of ``g`` it covers.  Primitive edges reuse the
    smallest label among the ``g``-edges they cover.
    """
    prim, chains = primitive_chains(g)
    pg = Graph.from_edges(prim, {c.label: (c.vertices[0], c.vertices[-1]) for c in chains})
    return pg, {c.label: c.vertices for c in chains}


# -- sufficient subdivision ---------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # "path" or "cycle"
    witness: tuple[str, ...]
    touched: int
    required: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "witness": list(self.witness),
            "touched": self.touched,
            "required": self.required,
        }


@dataclass(frozen=True)
class SubdivReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _neighbors(g: Graph, v: str) -> list[str]:
    return sorted({g.other_end(e, v) for e in g.incidence[v]})


def _bfs(g: Graph, root: str) -> tuple[dict[str, int], dict[str, str]]:
    dist = {root: 0}
    parent: dict[str, str] = {}
    q = deque([root])
    while q:
        x = q.popleft()
        for y in _neighbors(g, x):
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                q.append(y)
    return dist, parent


def _trace(parent: dict[str, str], root: str, v: str) -> list[str]:
    path = [v]
    while path[-1] != root:
        path.append(parent[path[-1]])
    return path[::-1]


def shortest_cycle(g: Graph) -> tuple[str, ...] | None:
    """A shortest cycle as a vertex sequence (no repeated endpoint).

    Loops have length 1 and a pair of parallel edges has length 2.
    """
    loops = sorted(u for _, (u, v) in g.edge_list if u == v)
    if loops:
        return (loops[0],)
    pairs: dict[tuple[str, str], int] = {}
    for _, ends in g.edge_list:
        pairs[ends] = pairs.get(ends, 0) + 1
    multi = sorted(p for p, c in pairs.items() if c > 1)
    if multi:
        return multi[0]
    best: tuple[str, ...] | None = None
    for root in g.vertices:
        dist, parent = _bfs(g, root)
        for _, (x, y) in g.edge_list:
            if x not in dist or parent.get(x) == y or parent.get(y) == x:
                continue
            length = dist[x] + dist[y] + 1
            if best is None or length < len(best):
                px = _trace(parent, root, x)
                py = _trace(parent, root, y)
                cyc = tuple(px + py[::-1][:-1])
                if len(set(cyc)) == len(cyc) == length:
                    best = cyc
    return best


def check_sufficiently_subdivided(g: Graph, k: int, n: int) -> SubdivReport:
    """Check (S.1) and (S.2) through shortest-path distance and girth.

    Reports one violation per pair of essential vertices that are too close
    and one for the shortest cycle if it is too short.
    """
    if not (2 <= k <= n):
        raise ParameterError(f"need 2 <= k <= n, got k={k}, n={n}")
    g.require_connected()
    need_path = n - k + 2
    need_cycle = n - k + 3
    violations = []
    ess = sorted(essential_vertices(g))
    for idx, u in enumerate(ess):
        dist, parent = _bfs(g, u)
        for v in ess[idx + 1:]:
            if dist[v] + 1 < need_path:
                path = tuple(_trace(parent, u, v))
                violations.append(Violation("path", path, len(path), need_path))
    cyc = shortest_cycle(g)
    if cyc is not None and len(cyc) < need_cycle:
        violations.append(Violation("cycle", cyc, len(cyc), need_cycle))
    return SubdivReport(tuple(violations))
