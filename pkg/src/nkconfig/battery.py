"""Small named graphs used by the test battery, the benchmarks and the CLI."""

from __future__ import annotations

from typing import Sequence

from .graph import Graph

_LETTERS = "pqrstuvxyz"


def _edge_label(u: str, v: str) -> str:
    a, b = sorted((u, v))
    return a + b


def _names(spec: int | Sequence[str], prefix: str) -> list[str]:
    if isinstance(spec, int):
        if spec <= len(_LETTERS) and prefix == "":
            return list(_LETTERS[:spec])
        return [f"{prefix or 'v'}{i}" for i in range(spec)]
    return list(spec)


def path_graph(spec: int | Sequence[str] = 4) -> Graph:
    """P_m: ``m`` vertices in a row (default labels p, q, r, ...)."""
    names = _names(spec, "")
    edges = {_edge_label(a, b): (a, b) for a, b in zip(names, names[1:])}
    return Graph.from_edges(names, edges)


def cycle_graph(spec: int | Sequence[str] = 3) -> Graph:
    names = _names(spec, "")
    if len(names) < 3:
        raise ValueError("simple cycles need at least 3 vertices")
    pairs = list(zip(names, names[1:] + names[:1]))
    return Graph.from_edges(names, {_edge_label(a, b): (a, b) for a, b in pairs})


def star_graph(leaves: int = 3) -> Graph:
    """K_{1,m} with centre ``c`` and leaves ``l0``, ``l1``, ..."""
    names = [f"l{i}" for i in range(leaves)]
    return Graph.from_edges(["c", *names], {f"c{x}": ("c", x) for x in names})


def theta_graph() -> Graph:
    """Two degree-3 vertices ``x``, ``y`` joined by three length-2 branches."""
    mids = ["a", "b", "m"]
    edges = {}
    for m in mids:
        edges[f"x{m}"] = ("x", m)
        edges[f"{m}y"] = (m, "y")
    return Graph.from_edges(["x", "y", *mids], edges)


def tadpole_graph(cycle: int = 5, tail: int = 1) -> Graph:
    """A cycle through ``h`` with a path of ``tail`` edges hanging off ``h``."""
    ring = ["h"] + [f"c{i}" for i in range(1, cycle)]
    tails = [f"t{i}" for i in range(1, tail + 1)]
    edges = {}
    for a, b in zip(ring, ring[1:] + ring[:1]):
        edges[_edge_label(a, b)] = (a, b)
    for a, b in zip(["h"] + tails, tails):
        edges[_edge_label(a, b)] = (a, b)
    return Graph.from_edges(ring + tails, edges)


def single_edge() -> Graph:
    return Graph.from_edges(["a", "b"], {"ab": ("a", "b")})


def figure_graph() -> Graph:
    """Graph a-b with a doubled b-c edge; essential vertices are a and b."""
    return Graph.from_edges(["a", "b", "c"], {"ab": ("a", "b"), "bc1": ("b", "c"), "bc2": ("b", "c")})


def primitive_figure_graph() -> Graph:
    """Eight-vertex graph whose primitive graph has four vertices, one
    doubled edge and one loop."""
    pairs = ["ab", "bc", "cd", "ce", "ef", "fg", "fh", "gh"]
    edges = {p: (p[0], p[1]) for p in pairs}
    edges["cf"] = ("c", "f")
    return Graph.from_edges("abcdefgh", edges)


def loop_graph() -> Graph:
    return Graph.from_edges(["u"], {"L": ("u", "u")})


NAMED = {
    "P2": lambda: path_graph(2),
    "P3": lambda: path_graph(3),
    "P4": lambda: path_graph(4),
    "P5": lambda: path_graph(5),
    "P6": lambda: path_graph(6),
    "C3": lambda: cycle_graph(3),
    "C4": lambda: cycle_graph(4),
    "C5": lambda: cycle_graph(5),
    "C6": lambda: cycle_graph(6),
    "K13": lambda: star_graph(3),
    "K14": lambda: star_graph(4),
    "theta": theta_graph,
}
"""The acceptance battery, keyed by short name."""
