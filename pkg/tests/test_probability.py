import random
from fractions import Fraction

import pytest

from tripledimer import fixtures as F
from tripledimer import probability as P
from tripledimer.kasteleyn import dimer_partition_function
from tripledimer.partitions import enumerate_partitions, trace_tau
from tripledimer.skein import all_colorings


def brute_Z(g, colors):
    """Product of dimer partition functions of the three color classes, by enumeration."""
    col = dict(zip(g.nodes, colors))
    ns = g.node_set
    z = Fraction(1)
    for k in (1, 2, 3):
        ws = [v for v, t in g.types.items() if t == "w" and (v not in ns or col[v] == k)]
        bs = [v for v, t in g.types.items() if t == "b" and (v not in ns or col[v] == k)]
        z *= dimer_partition_function(g, ws, bs)
    return z


@pytest.mark.parametrize("name", ["4node", "2by3", "bwwww", "wbwbwb"])
def test_partition_function_is_product_of_dimer_counts(name):
    rng = random.Random(4)
    g0 = F.fixture_graph(name)
    g = F.reweighted(g0, F.random_weights(g0, rng))
    for c in all_colorings(len(g.nodes)):
        assert abs(P.partition_function(g, c)) == brute_Z(g, c)


@pytest.mark.parametrize("name", ["4node", "2by3", "bwwww", "wbwbwb", "bbwbww"])
def test_distributions(name):
    rng = random.Random(5)
    g0 = F.fixture_graph(name)
    g = F.reweighted(g0, F.random_weights(g0, rng))
    m = P.build_model(g)
    n = 0
    for c in P.feasible_colorings(g, m.kd):
        d = P.probabilities(g, c, m)     # asserts sum 1 and nonnegativity internally
        assert sum(d.probabilities.values()) == 1
        assert all(p >= 0 for p in d.probabilities.values())
        n += 1
    assert n > 0


def test_global_sign_is_consistent_over_colorings():
    rng = random.Random(6)
    g0 = F.fixture_graph("wbwbwb")
    g = F.reweighted(g0, F.random_weights(g0, rng))
    m = P.build_model(g)
    for c in P.feasible_colorings(g, m.kd):
        s = sum((x * trace_tau(t, c) for x, t in zip(m.x_taus, m.rm.partitions)), Fraction(0))
        assert P.partition_function(g, c) == m.eps_K * m.delta ** 3 * s


def test_infeasible_coloring():
    g = F.four_node()
    with pytest.raises(P.InfeasibleColoringError):
        P.probabilities(g, (1, 2, 1, 2))


def test_json_shape():
    d = P.probabilities(F.four_node(), (1, 1, 1, 1))
    js = d.as_json()
    assert set(js) == {"classes", "z", "delta"}
    assert all(set(c) == {"code", "p_value", "trace", "prob"} for c in js["classes"])
    assert sum(Fraction(c["prob"]) for c in js["classes"]) == 1


def test_hypothesis_errors():
    g = F.fixture_graph("bwwww")
    with pytest.raises(P.HypothesisError):
        P.lgv_parallel(g)
    with pytest.raises(P.HypothesisError):
        P.honeycomb_p(F.fixture_graph("wbwbwb"), 2, "T")


@pytest.mark.parametrize("start", range(4))
def test_lgv_on_four_node(start):
    g = F.reweighted(F.four_node(), F.random_weights(F.four_node(), random.Random(start)))
    m = P.build_model(g)
    assert P.lgv_parallel(g, start, m) == m.p_values()[P.parallel_class(g.type_vector, start)]
