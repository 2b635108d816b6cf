import numpy as np
import pytest

import oracles
from nkconfig.battery import NAMED, cycle_graph, loop_graph, path_graph, single_edge, star_graph
from nkconfig.complex import ComplexView, enumerate_dconf
from nkconfig.errors import InvariantViolation
from nkconfig.homology import betti_numbers, betti_report, boundary_matrix, boundary_ranks
from nkconfig.kernels import BACKENDS

# frozen from oracles.betti (dense Fraction / XOR elimination over brute-force cells)
KNOWN = [
    ("C3", cycle_graph(3), 2, 2, (1, 1)),
    ("K13", star_graph(3), 2, 2, (1, 1)),
    ("edge", single_edge(), 3, 3, (1, 1)),
    ("P4", path_graph(4), 2, 2, (2, 0, 0)),
    ("P5", path_graph(5), 2, 2, (2, 0, 0)),
    ("C4", cycle_graph(4), 2, 2, (1, 1, 0)),
]


@pytest.mark.parametrize("name,g,k,n,expected", KNOWN, ids=[row[0] for row in KNOWN])
@pytest.mark.parametrize("coeff", ["q", "f2"])
def test_known_betti(name, g, k, n, expected, coeff):
    assert betti_numbers(enumerate_dconf(g, k, n), coeff) == expected


@pytest.mark.parametrize("name,g,k,n,expected", KNOWN, ids=[row[0] for row in KNOWN])
def test_known_betti_against_dense_oracle(name, g, k, n, expected):
    assert oracles.betti(g, k, n, "q") == expected
    assert oracles.betti(g, k, n, "f2") == expected


def test_c3_first_boundary_rank():
    cv = enumerate_dconf(cycle_graph(3), 2, 2)
    bd = boundary_matrix(cv, 1)
    assert bd.shape == (6, 6)
    assert np.linalg.matrix_rank(bd.to_dense()) == 5
    assert boundary_ranks(cv) == [0, 5, 0]


def test_p4_euler():
    cv = enumerate_dconf(path_graph(4), 2, 2)
    assert cv.counts() == [12, 12, 2]
    assert cv.euler_characteristic() == 2


def test_boundary_matches_dense_oracle():
    for name in ("P4", "C3", "K13", "theta"):
        g = NAMED[name]()
        cv = enumerate_dconf(g, 2, 3)
        for d in range(1, 4):
            if not len(cv.codes(d)):
                continue
            ours = boundary_matrix(cv, d).to_dense()
            ref = np.array(oracles.dense_boundary(g, cv.cells(d), cv.cells(d - 1)))
            assert np.array_equal(ours, ref)


def test_edge_column_has_two_entries():
    g = path_graph(4)
    cv = enumerate_dconf(g, 2, 2)
    bd = boundary_matrix(cv, 1).to_dense()
    col = cv.cells(1).index(("pq", "s"))
    assert sorted(bd[:, col].tolist()) == [-1] + [0] * (bd.shape[0] - 2) + [1]


def _compose(lo, hi):
    """Sparse product lo @ hi as a dict of nonzero entries."""
    lp, lr, lv = lo.csc()
    hp, hr, hv = hi.csc()
    out = {}
    for j in range(hi.shape[1]):
        for mid, a in zip(hr[hp[j]:hp[j + 1]].tolist(), hv[hp[j]:hp[j + 1]].tolist()):
            for r, b in zip(lr[lp[mid]:lp[mid + 1]].tolist(), lv[lp[mid]:lp[mid + 1]].tolist()):
                out[r, j] = out.get((r, j), 0) + a * b
    return {key: v for key, v in out.items() if v}


@pytest.mark.parametrize("name", ["P4", "C4", "theta", "K14", "loop"])
def test_boundary_squares_to_zero(name):
    g = loop_graph() if name == "loop" else NAMED[name]()
    cv = enumerate_dconf(g, 3, 4)
    for d in range(2, 5):
        for coeff, mod in (("q", None), ("f2", 2)):
            prod = _compose(boundary_matrix(cv, d - 1, coeff), boundary_matrix(cv, d, coeff))
            if mod:
                prod = {key: v for key, v in prod.items() if v % mod}
            assert not prod


def test_q_and_f2_agree_on_battery():
    for name, make in NAMED.items():
        for k, n in ((2, 2), (2, 3), (3, 3), (3, 4)):
            cv = enumerate_dconf(make(), k, n)
            assert betti_numbers(cv, "q") == betti_numbers(cv, "f2"), (name, k, n)


def test_loops_cancel():
    g = loop_graph()
    cv = enumerate_dconf(g, 2, 2)
    assert betti_numbers(cv, "q") == oracles.betti(g, 2, 2, "q")


def test_not_face_closed_detected():
    g = path_graph(3)
    cv = ComplexView.from_cells(g, 2, 2, [("pq", "r")])
    with pytest.raises(InvariantViolation):
        boundary_matrix(cv, 1)


def test_report_and_triplets():
    cv = enumerate_dconf(cycle_graph(3), 2, 2)
    rep = betti_report(cv, "mod2")
    assert rep == {"coeff": "f2", "betti": [1, 1], "euler": 0}
    lines = list(boundary_matrix(cv, 1).triplet_lines())
    assert len(lines) == 12
    assert all(len(line.split()) == 3 for line in lines)


@pytest.mark.parametrize("backend", sorted(BACKENDS))
def test_backends_give_same_betti(backend):
    cv = enumerate_dconf(NAMED["theta"](), 3, 4)
    assert betti_numbers(cv, "f2", backend=backend) == (1, 8, 45, 2, 0)


def test_unknown_field():
    with pytest.raises(ValueError):
        betti_numbers(enumerate_dconf(single_edge(), 2, 2), "z3")
