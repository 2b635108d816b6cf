import json

import pytest

from nkconfig.battery import (
    cycle_graph, figure_graph, loop_graph, path_graph, primitive_figure_graph, star_graph, theta_graph,
)
from nkconfig.errors import GraphError, ParameterError
from nkconfig.graph import (
    Graph, check_sufficiently_subdivided, degree, essential_vertices, primitive_graph, shortest_cycle,
)
from nkconfig.subdivision import subdivide_edge


def test_degree_examples():
    assert degree(figure_graph(), "b") == 3
    assert degree(path_graph(3), "q") == 2
    assert degree(loop_graph(), "u") == 2


def test_degree_unknown_vertex():
    with pytest.raises(GraphError):
        degree(path_graph(3), "zz")


def test_essential_vertices():
    assert essential_vertices(figure_graph()) == {"a", "b"}
    assert essential_vertices(cycle_graph(5)) == set()
    assert essential_vertices(star_graph(3)) == {"c", "l0", "l1", "l2"}


def test_primitive_of_cycle_is_single_loop():
    prim, cover = primitive_graph(cycle_graph(4))
    assert prim.vertices == ("p",)
    assert len(prim.edges) == 1
    (lab,) = prim.edge_labels
    assert prim.edges[lab] == ("p", "p")
    assert cover[lab][0] == cover[lab][-1] == "p"


def test_primitive_of_path():
    prim, cover = primitive_graph(path_graph(4))
    assert prim.vertices == ("p", "s")
    assert list(cover.values()) == [("p", "q", "r", "s")]


def test_primitive_of_figure_graph():
    prim, _ = primitive_graph(primitive_figure_graph())
    assert len(prim.vertices) == 4
    loops = [e for e, (u, v) in prim.edges.items() if u == v]
    assert len(loops) == 1
    pairs = [tuple(sorted(ends)) for ends in prim.edges.values()]
    assert any(pairs.count(p) == 2 for p in pairs)


def test_primitive_idempotent():
    for g in (theta_graph(), primitive_figure_graph(), cycle_graph(5), path_graph(5)):
        once, _ = primitive_graph(g)
        twice, _ = primitive_graph(once)
        assert (len(twice.vertices), len(twice.edges)) == (len(once.vertices), len(once.edges))


def test_figure_graph_sufficiency():
    for n in (3, 4, 5):
        rep = check_sufficiently_subdivided(figure_graph(), n - 1, n)
        assert not rep.ok
        assert len(rep.violations) == 2
        assert {v.kind for v in rep.violations} == {"path", "cycle"}


def test_figure_graph_becomes_sufficient():
    g = figure_graph()
    g = subdivide_edge(g, "ab", "x1")
    g = subdivide_edge(g, "bc1", "y1")
    assert not check_sufficiently_subdivided(g, 3, 4).ok
    g = subdivide_edge(g, "bc2", "y2")
    assert check_sufficiently_subdivided(g, 3, 4).ok


def test_simple_graphs_k_equals_n():
    for g in (path_graph(2), cycle_graph(3), star_graph(4), theta_graph()):
        for n in (2, 3, 4):
            assert check_sufficiently_subdivided(g, n, n).ok


def test_loop_never_sufficient():
    for n in (2, 3):
        for k in range(2, n + 1):
            assert not check_sufficiently_subdivided(loop_graph(), k, n).ok


def test_bad_parameters():
    with pytest.raises(ParameterError):
        check_sufficiently_subdivided(path_graph(3), 3, 2)
    with pytest.raises(ParameterError):
        check_sufficiently_subdivided(path_graph(3), 1, 2)


def test_shortest_cycle_girth_conventions():
    assert len(shortest_cycle(loop_graph())) == 1
    assert len(shortest_cycle(figure_graph())) == 2
    assert len(shortest_cycle(cycle_graph(5))) == 5
    assert shortest_cycle(path_graph(4)) is None


def test_report_json_shape():
    rep = check_sufficiently_subdivided(figure_graph(), 2, 3)
    data = rep.to_json()
    assert data["ok"] is False
    assert {"kind", "witness", "touched", "required"} <= set(data["violations"][0])


def test_json_round_trip_and_order_insensitive():
    g = theta_graph()
    assert Graph.loads(g.dumps()) == g
    data = g.to_json()
    data["vertices"].reverse()
    data["edges"].reverse()
    assert Graph.from_json(data) == g


@pytest.mark.parametrize("text", [
    "{bad",
    "[]",
    json.dumps({"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "b"]}]}),
    json.dumps({"vertices": ["a", "b"], "edges": [{"id": "e", "ends": ["a", "b"]}, {"id": "e", "ends": ["a", "b"]}]}),
    json.dumps({"vertices": ["a", "b"], "edges": [{"id": "a", "ends": ["a", "b"]}]}),
    json.dumps({"vertices": ["a", "b"], "edges": [{"id": "e", "ends": ["a"]}]}),
    json.dumps({"vertices": ["a"]}),
])
def test_malformed_json_rejected(text):
    with pytest.raises(GraphError):
        Graph.loads(text)


def test_disconnected_rejected_downstream():
    g = Graph.from_edges(["a", "b", "c"], {"ab": ("a", "b")})
    assert not g.is_connected()
    with pytest.raises(GraphError):
        check_sufficiently_subdivided(g, 2, 2)


def test_degree_sum():
    for g in (figure_graph(), primitive_figure_graph(), theta_graph(), loop_graph()):
        assert sum(degree(g, v) for v in g.vertices) == 2 * len(g.edges)
