import json

import pytest

from nkconfig.battery import figure_graph, loop_graph, path_graph
from nkconfig.cli import main, stabilization_table
from nkconfig.battery import star_graph, single_edge, cycle_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.json"):
        p = tmp_path / name
        p.write_text(g.dumps())
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_subdiv_figure_graph(capsys, graph_file):
    code, out, _ = run(capsys, "check-subdiv", "--input", graph_file(figure_graph()), "--k", "3", "--n", "4")
    assert code == 1
    assert len(json.loads(out)["violations"]) == 2


def test_check_subdiv_ok(capsys):
    code, out, _ = run(capsys, "check-subdiv", "--input", "battery:P4", "--k", "2", "--n", "2")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_malformed_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check-subdiv", "--input", str(bad), "--k", "2", "--n", "2")
    assert code == 2
    assert "invalid JSON" in err


def test_missing_file_and_bad_params(capsys, tmp_path):
    assert run(capsys, "betti", "--input", str(tmp_path / "none.json"), "--k", "2", "--n", "2")[0] == 2
    assert run(capsys, "betti", "--input", "battery:P4", "--k", "3", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["betti", "--input", "battery:P4", "--k", "2"])
    assert exc.value.code == 2


def test_pipeline_p4(capsys, graph_file):
    code, out, err = run(capsys, "pipeline", "--input", graph_file(path_graph(4)), "--edge", "qr", "--k", "2", "--n", "2")
    rep = json.loads(out)
    assert code == 0
    assert (rep["cells"], rep["Y"], rep["external"], rep["pairs"]) == (50, 34, 16, 8)
    assert rep["acyclic"] is True and rep["betti_equal"] is True
    assert "pairs=8" in err


def test_pipeline_c3(capsys):
    code, out, _ = run(capsys, "pipeline", "--input", "battery:C3", "--k", "2", "--n", "2", "--field", "f2")
    rep = json.loads(out)
    assert code == 0 and rep["acyclic"]
    assert rep["betti"]["base"] == [1, 1] and rep["betti"]["subdivided"][:2] == [1, 1]


def test_pipeline_loop_refused(capsys, graph_file):
    code, out, _ = run(capsys, "pipeline", "--input", graph_file(loop_graph()), "--k", "2", "--n", "2")
    assert code == 3
    assert json.loads(out)["error"] == "insufficient"


def test_pipeline_budget(capsys):
    code, _, _ = run(capsys, "pipeline", "--input", "battery:C4", "--k", "2", "--n", "2", "--budget", "10")
    assert code == 4


def test_pipeline_unknown_edge(capsys):
    assert run(capsys, "pipeline", "--input", "battery:P4", "--edge", "zz", "--k", "2", "--n", "2")[0] == 2


def test_pipeline_jsonl_and_out(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    jl = tmp_path / "m.jsonl"
    code, out, _ = run(capsys, "pipeline", "--input", "battery:P4", "--edge", "qr", "--k", "2", "--n", "2",
                       "--out", str(out_file), "--jsonl", str(jl))
    assert code == 0 and out == ""
    assert json.loads(out_file.read_text())["pairs"] == 8
    assert len(jl.read_text().splitlines()) == 16


def test_reports_are_byte_identical(capsys):
    args = ("pipeline", "--input", "battery:theta", "--k", "2", "--n", "3")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second


@pytest.mark.parametrize("g,k,n,expected", [
    (star_graph(3), 2, 2, (1, 1)),
    (single_edge(), 3, 3, (1, 1)),
])
def test_stabilize_examples(g, k, n, expected):
    rep = stabilization_table(g, k, n, 2)
    assert rep["constant"] and rep["complete"]
    first = rep["first_sufficient"]
    for row in rep["rows"][first:]:
        assert tuple(b for b in row["betti"][:len(expected)]) == expected
        assert not any(row["betti"][len(expected):])


def test_stabilize_c3_n3(capsys):
    code, out, err = run(capsys, "stabilize", "--input", "battery:C3", "--k", "2", "--n", "3", "--levels", "2")
    rep = json.loads(out)
    assert code == 0
    assert rep["first_sufficient"] == 1
    assert rep["rows"][0]["sufficient"] is False
    assert "B_2" in err


def test_stabilize_budget_exit(capsys):
    code, out, _ = run(capsys, "stabilize", "--input", "battery:P3", "--k", "2", "--n", "4",
                       "--levels", "3", "--budget", "100000")
    assert code == 4
    assert json.loads(out)["rows"][3]["skipped"] == "budget"


def test_enumerate_and_betti(capsys):
    code, out, _ = run(capsys, "enumerate", "--input", "battery:C3", "--k", "2", "--n", "2")
    lines = out.splitlines()
    assert code == 0 and json.loads(lines[0])["counts"] == [6, 6, 0] and len(lines) == 13
    code, out, _ = run(capsys, "betti", "--input", "battery:K13", "--k", "2", "--n", "2", "--field", "f2")
    assert json.loads(out)["betti"] == [1, 1]


def test_battery_subset(capsys):
    code, out, err = run(capsys, "battery", "--max-n", "2", "--workers", "1")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == 0 and rep["instances"] > 0
