import itertools
import random

import pytest

from tripledimer import fixtures as F
from tripledimer.oracle import (OracleSizeError, brute_C_lambda, brute_Zc, enumerate_multiwebs, oracle_check,
                                sample_reduction)
from tripledimer.probability import c_lambda_all, partition_function
from tripledimer.skein import epsilon_c


def naive_multiwebs(g):
    ns = g.node_set
    es = list(g.edges)
    out = []
    for ms in itertools.product(range(4), repeat=len(es)):
        m = dict(zip(es, ms))
        if all(sum(m[e] for e in g.rotation[v]) == (1 if v in ns else 3) for v in g.types):
            out.append({e: k for e, k in m.items() if k})
    return out


@pytest.mark.parametrize("name", ["4node", "2by3"])
def test_enumeration_against_product(name):
    g = F.fixture_graph(name)
    key = lambda m: sorted(m.items())
    assert sorted(map(key, enumerate_multiwebs(g))) == sorted(map(key, naive_multiwebs(g)))


@pytest.mark.parametrize("name", F.ORACLE_FIXTURES)
def test_oracle_identities(name):
    rng = random.Random(8)
    g0 = F.fixture_graph(name)
    g = F.reweighted(g0, F.random_weights(g0, rng))
    res = oracle_check(g)
    assert all(r.ok for r in res), [r for r in res if not r.ok]


def test_brute_helpers():
    g = F.two_by_three()
    assert brute_C_lambda(g) == c_lambda_all(g)
    for c in [(1, 1, 1, 1), (1, 2, 2, 1), (1, 2, 1, 2)]:
        z = partition_function(g, c)      # already signed: eps_c Z_1 Z_2 Z_3
        assert brute_Zc(g, c) == z
        assert z == 0 or (z > 0) == (epsilon_c(g.type_vector, c) > 0)


def test_size_guard():
    with pytest.raises(OracleSizeError):
        enumerate_multiwebs(F.fixture_graph("wbwbwb"), max_edges=3)


def test_sampler_is_deterministic():
    g = F.fixture_graph("2by3")
    a = sample_reduction(g, (1, 1, 1, 1), 500, seed=3)
    b = sample_reduction(g, (1, 1, 1, 1), 500, seed=3)
    assert a.counts == b.counts and sum(a.counts.values()) == 500
    assert set(a.counts) <= set(a.exact)
