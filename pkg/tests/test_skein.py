import random
from fractions import Fraction

import pytest

import properties as PROP
from tripledimer.partitions import enumerate_partitions
from tripledimer.skein import (DegenerateDrawing, Reducer, all_colorings, draw_polylines, epsilon_c,
                               pairing_matrices, partition_diagram, reduce_to_classes, reduction_matrix,
                               resolve_crossing)
from tripledimer.webs import is_reduced, line_web, trace_vector


def _pt(x, y):
    return (Fraction(x), Fraction(y))


def crossed_wbwb():
    # nodes w0, b1, w2, b3 in convex position; chords 0-1 and 2-3 cross once
    pts = {0: _pt(0, 0), 1: _pt(4, 4), 2: _pt(4, 0), 3: _pt(0, 4), "kinds": {}}
    return draw_polylines("wbwb", [[0, 1], [2, 3]], pts)


def test_crossing_relation():
    d = crossed_wbwb()
    (x,) = d.crossings()
    kids = resolve_crossing(d, x)
    assert sorted(c for c, _ in kids) == [-1, 1]
    assert all(not k.crossings() for _, k in kids)
    assert PROP._sum_traces(kids) == trace_vector(d)


def test_free_loop_value():
    w = line_web()
    w.loops = 2
    assert Reducer().reduce(w) == {line_web().code(): 9}


def test_kink_removal():
    red = Reducer()
    pts = {0: _pt(0, 0), 1: _pt(6, 0), 10: _pt(4, 2), 11: _pt(4, 3), 12: _pt(2, 2), "kinds": {}}
    kink = draw_polylines("wb", [[0, 10, 11, 12, 1]], pts)
    assert red.reduce(kink) == red.reduce(draw_polylines("wb", [[0, 1]], {0: _pt(0, 0), 1: _pt(6, 0), "kinds": {}}))


@pytest.mark.parametrize("types", ["wbwb", "wwbb", "bwwww", "wbwbwb", "bbwbww", "bbbwww", "wwwwww"])
def test_reduction_matrix_structure(types):
    rm = reduction_matrix(types)
    assert all(is_reduced(rm.representative(c)) for c in rm.classes)
    # every class is hit and every pairing reduces to something nonzero
    assert all(any(row) for row in rm.matrix)
    assert all(any(rm.matrix[i][j] for i in range(len(rm.classes))) for j in range(len(rm.partitions)))
    # columns are integral combinations that preserve traces
    for j, t in enumerate(rm.partitions):
        d = partition_diagram(t)
        acc = {}
        for code, coef in rm.column(j).items():
            for c, v in trace_vector(rm.representative(code)).items():
                acc[c] = acc.get(c, 0) + coef * v
        assert {c: v for c, v in acc.items() if v} == trace_vector(d)


def test_pairing_matrices_are_consistent():
    for types in ["wbwb", "bwwww", "wbwbwb", "bbwbww"]:
        M, E, rm = pairing_matrices(types)
        n = len(M)
        assert all(M[i][j] == M[j][i] for i in range(n) for j in range(n))
        MP = [[sum(M[i][k] * rm.matrix[k][j] for k in range(n)) for j in range(len(E[0]))] for i in range(n)]
        assert MP == E


def test_epsilon_c_sign_of_traces():
    """All planar webs share one trace sign at a coloring."""
    for types in ["wbwb", "bwwww", "wbwbwb"]:
        rm = reduction_matrix(types)
        for c in all_colorings(len(types)):
            eps = epsilon_c(types, c)
            vals = [trace_vector(rm.representative(code)).get(c, 0) for code in rm.classes]
            if eps == 0:
                assert not any(vals)
            else:
                assert all(v * eps >= 0 for v in vals)


def test_random_reduction_orders_agree():
    rng = random.Random(21)
    for _ in range(10):
        d = PROP.random_diagram(rng, "wbwbwb", max_bends=1)
        ref = Reducer().reduce(d)
        for s in range(3):
            assert reduce_to_classes(d, Reducer(), random.Random(s)) == ref


def test_degenerate_drawing():
    pts = {0: _pt(0, 0), 1: _pt(0, 0), "kinds": {}}
    with pytest.raises(DegenerateDrawing):
        draw_polylines("wb", [[0, 1]], pts)
