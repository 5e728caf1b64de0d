import itertools
import random
from fractions import Fraction

import pytest

from tripledimer import fixtures as F
from tripledimer.oracle import enumerate_multiwebs
from tripledimer.skein import all_colorings
from tripledimer.webs import (WebError, abstract_web, check_multiweb, closed_value, hexagon_web, is_reduced,
                              line_web, multiweb_weight, reflect, tprime_web, trace, trace_vector, tripod_web,
                              web_from_edges)


def naive_trace_vector(w):
    """Sum over all edge colorings, grouped by node colors (crossing-free webs only)."""
    assert not w.crossings()
    edges = sorted({min(d, w.twin[d]) for d in w.origin})
    idx = {}
    for k, e in enumerate(edges):
        idx[e] = idx[w.twin[e]] = k
    verts = [(k, [idx[d] for d in w.rot[v]]) for v, k in w.kind.items() if k in ("w", "b")]
    out = {}
    for col in itertools.product((1, 2, 3), repeat=len(edges)):
        s = 1
        for kind, es in verts:
            a, b, c = (col[e] for e in es)
            if len({a, b, c}) < 3:
                s = 0
                break
            ccw = (b - a) % 3 == 1
            s *= (1 if ccw else -1) * (1 if kind == "b" else -1)
        if s:
            key = tuple(col[idx[w.rot[i][0]]] for i in range(w.n_nodes))
            out[key] = out.get(key, 0) + s * 3 ** w.loops
    return {k: v for k, v in out.items() if v}


def test_small_webs():
    assert trace(line_web(), (2, 2)) == 1 and trace(line_web(), (1, 2)) == 0
    t = tripod_web()
    assert trace(t, (1, 2, 3)) == 1 and trace(t, (1, 3, 2)) == -1 and trace(t, (1, 1, 2)) == 0


def test_hexagon():
    h = hexagon_web()
    assert is_reduced(h)
    assert all(trace(h, (c,) * 6) == 2 for c in (1, 2, 3))
    assert reflect(reflect(h)).code() == h.code()


@pytest.mark.parametrize("web", [hexagon_web(), tprime_web(1), tripod_web()])
def test_trace_matches_naive_count(web):
    naive = naive_trace_vector(web)
    for c in all_colorings(web.n_nodes):
        assert trace(web, c) == naive.get(c, 0)


def test_trace_vector_agrees_with_trace():
    w = tprime_web(2)
    tv = trace_vector(w)
    for c in all_colorings(6):
        assert tv.get(c, 0) == trace(w, c)


def test_free_loops():
    d = web_from_edges("", {}, {}, loops=2)
    assert closed_value(d) == 9


def test_code_is_label_invariant():
    internal = {6 + k: ("b" if k % 2 == 0 else "w") for k in range(6)}
    perm = {6 + k: 6 + (k * 5 + 3) % 6 for k in range(6)}
    perm.update({k: k for k in range(6)})
    rot = {}
    for k in range(6):
        rot[k] = [6 + k]
        rot[6 + k] = [k, 6 + (k + 1) % 6, 6 + (k - 1) % 6]
    relabeled = {perm[v]: [perm[u] for u in nb] for v, nb in rot.items()}
    w2 = web_from_edges("wbwbwb", {perm[v]: t for v, t in internal.items()}, relabeled)
    assert w2.code() == hexagon_web().code()


def test_multiwebs_of_the_four_node_graph():
    g = F.four_node()
    mws = enumerate_multiwebs(g)
    for m in mws:
        check_multiweb(g, m)
        w = abstract_web(g, m)
        w.check()
    with pytest.raises(WebError):
        check_multiweb(g, {"a": 1})


def test_multiweb_weight():
    rng = random.Random(1)
    g0 = F.four_node()
    g = F.reweighted(g0, F.random_weights(g0, rng))
    for m in enumerate_multiwebs(g):
        expect = Fraction(1)
        for e, k in m.items():
            expect *= g.edges[e].weight ** k
        assert multiweb_weight(g, m) == expect
