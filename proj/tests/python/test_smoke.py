import pytest

import serreweights as sw


def test_weight_set_small_split():
    rows = sw.weight_set(3, 1, 1, "split", [[1], [0]], which="sch")
    classes = {(tuple(r["d"]), r["t"]) for r in rows}
    assert classes == {((0,), 0), ((0,), 1), ((2,), 0), ((2,), 1)}
    for r in rows:
        assert r["witness"] is not None
        assert not r["superset"]


def test_counterexample_weight_absent():
    rows = sw.weight_set(7, 2, 6, "split", [[6, 4], [6, 3]], which="sch")
    assert ((6, 1), 0) not in {(tuple(r["d"]), r["t"]) for r in rows}
    # but the determinant condition holds
    det = sw.det_weight_set(7, 2, [12, 7], 6)
    assert {"d": [6, 1], "t": 0} in det


def test_find_witness():
    w = sw.find_witness(5, 1, 1, "split", [[3], [0]], [2, 0])
    assert w == {"J": [0], "delta": [0]}
    none = sw.find_witness(7, 2, 6, "split", [[6, 4], [6, 3]], [6, 0, 1, 0])
    assert none is None


def test_equivalence():
    assert sw.weights_equivalent(3, 1, [2, 0], [4, 2])
    assert not sw.weights_equivalent(3, 1, [2, 0], [3, 1])


def test_adequacy_named():
    rep = sw.adequacy_named("GL2(3)")
    assert rep["adequate"] and rep["order"] == 48
    rep = sw.adequacy_named("SL2(5)")
    assert not rep["adequate"] and rep["h1_dim"] == 1


def test_adequacy_generators():
    # quaternion group inside SL2(F3): irreducible but fails the span test
    rep = sw.adequacy(2, 3, 1, [[0, -1, 1, 0], [1, 1, 1, -1]])
    assert rep["order"] == 8


def test_errors():
    with pytest.raises(sw.SerreError):
        sw.weight_set(3, 1, 2, "split", [[1], [0]], which="bdj")  # e != 1
