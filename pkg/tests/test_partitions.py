import random

import pytest

from tripledimer import fixtures as F
from tripledimer.kasteleyn import boundary_measurement
from tripledimer.partitions import (InfeasibleTypeError, count_partitions, enumerate_partitions, kostka,
                                    n_triples, node_indexing, trace_tau, x_tau)
from tripledimer.skein import all_colorings, partition_diagram, reduction_matrix
from tripledimer.webs import trace

TYPES = ["wb", "www", "wbwb", "wwbb", "bwwww", "wbwbwb", "bbwbww", "bbbwww", "wwwwww", "wbbbww"]


def brute_partitions(types):
    """Set partitions of the positions into white-black pairs and white triples."""
    out = set()

    def rec(rest, pairs, triples):
        if not rest:
            out.add((tuple(sorted(pairs)), tuple(sorted(triples))))
            return
        first, others = rest[0], rest[1:]
        for i, x in enumerate(others):
            if {types[first], types[x]} == {"w", "b"}:
                w, b = (first, x) if types[first] == "w" else (x, first)
                rec(others[:i] + others[i + 1:], pairs + [(w, b)], triples)
            for j in range(i + 1, len(others)):
                y = others[j]
                if types[first] == types[x] == types[y] == "w":
                    rec([z for z in others if z not in (x, y)], pairs, triples + [(first, x, y)])

    rec(list(range(len(types))), [], [])
    return out


@pytest.mark.parametrize("types", TYPES)
def test_enumeration_matches_brute_force(types):
    ours = enumerate_partitions(types)
    assert {(t.pairs, t.triples) for t in ours} == brute_partitions(types)
    assert len(ours) == count_partitions(types) == len(set(ours))


def test_infeasible_types():
    for t in ["bw" + "b", "wwb", "bbww" + "b"]:
        with pytest.raises(InfeasibleTypeError):
            n_triples(t)


def test_node_indexing_positions():
    # whites counterclockwise from the first white, blacks clockwise from it
    assert node_indexing("bbwbww") == ([2, 4, 5], [1, 0, 3])
    assert node_indexing("wbwbwb") == ([0, 2, 4], [5, 3, 1])


@pytest.mark.parametrize("types", ["wbwb", "wwbb", "bwwww", "wbwbwb", "www", "bbwbww"])
def test_trace_tau_is_trace_of_the_drawing(types):
    for t in enumerate_partitions(types):
        d = partition_diagram(t)
        for c in all_colorings(len(types)):
            assert trace(d, c) == trace_tau(t, c)


def test_kostka_known_values():
    # standard Young tableaux of shapes 3, 3x3 and 3x3x3
    assert kostka(0, 3) == 1
    assert kostka(0, 6) == 5
    assert kostka(0, 9) == 42
    with pytest.raises(ValueError):
        kostka(1, 3)


@pytest.mark.parametrize("types", TYPES)
def test_kostka_counts_reduced_webs(types):
    assert len(reduction_matrix(types).classes) == kostka(types.count("b"), len(types))


def test_x_tau_for_pairings_is_a_signed_product():
    rng = random.Random(3)
    g0 = F.fixture_graph("wbwbwb")
    g = F.reweighted(g0, F.random_weights(g0, rng))
    X = boundary_measurement(g).X
    whites, blacks = node_indexing(g.type_vector)
    for t in enumerate_partitions(g.type_vector):
        by_white = dict(t.pairs)
        prod = t.sign()
        for i, w in enumerate(whites):
            prod *= X[i, blacks.index(by_white[w])]
        assert x_tau(t, X) == prod
