"""Brute-force ground truth by enumerating multiwebs.

Everything here is exponential in the number of edges and meant for small
fixtures only.  The results are used to check the determinant formulas.
"""
from __future__ import annotations

import bisect
import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import CircularPlanarGraph
from .probability import InfeasibleColoringError, probabilities
from .skein import Reducer, reduce_to_classes
from .webs import abstract_web, multiweb_weight, trace

MAX_EDGES = 30


class OracleSizeError(ValueError):
    pass


def _guard(g: CircularPlanarGraph, max_edges: int | None):
    limit = MAX_EDGES if max_edges is None else max_edges
    if len(g.edges) > limit:
        raise OracleSizeError(f"graph has {len(g.edges)} edges; brute force is limited to {limit}")


def enumerate_multiwebs(g: CircularPlanarGraph, max_edges: int | None = MAX_EDGES) -> list[dict[str, int]]:
    """All edge multiplicities in {0,1,2,3} with degree 1 at nodes and 3 elsewhere."""
    _guard(g, max_edges)
    ns = g.node_set
    need = {v: (1 if v in ns else 3) for v in g.types}
    # process edges so that each vertex is closed as early as possible
    order = []
    seen = set()
    for v in sorted(g.types, key=lambda v: len(g.rotation[v])):
        for e in g.rotation[v]:
            if e not in seen:
                seen.add(e)
                order.append(e)
    last = {}
    for k, e in enumerate(order):
        ed = g.edges[e]
        last[ed.white] = k
        last[ed.black] = k
    left = dict(need)
    cur: dict[str, int] = {}
    out = []

    def rec(k):
        if k == len(order):
            out.append({e: m for e, m in cur.items() if m})
            return
        e = order[k]
        ed = g.edges[e]
        u, v = ed.white, ed.black
        hi = min(3, left[u], left[v])
        for m in range(hi + 1):
            if last[u] == k and left[u] != m:
                continue
            if last[v] == k and left[v] != m:
                continue
            left[u] -= m
            left[v] -= m
            cur[e] = m
            rec(k + 1)
            left[u] += m
            left[v] += m
        cur.pop(e, None)

    if any(not g.rotation[v] for v in g.types):
        return []
    rec(0)
    return out


def multiweb_trace(g: CircularPlanarGraph, m, colors: Sequence[int]) -> int:
    return trace(abstract_web(g, m), colors)


def brute_Zc(g: CircularPlanarGraph, colors: Sequence[int], max_edges: int | None = MAX_EDGES) -> Fraction:
    """``sum_m nu(m) Tr_m(c)`` over all multiwebs."""
    total = Fraction(0)
    for m in enumerate_multiwebs(g, max_edges):
        t = multiweb_trace(g, m, colors)
        if t:
            total += multiweb_weight(g, m) * t
    return total


def reduce_multiweb(g: CircularPlanarGraph, m, reducer: Reducer | None = None) -> dict[str, int]:
    return reduce_to_classes(abstract_web(g, m), reducer)


def brute_C_lambda(g: CircularPlanarGraph, max_edges: int | None = MAX_EDGES,
                   reducer: Reducer | None = None) -> dict[str, Fraction]:
    """``C_lambda = sum_m nu(m) C_lambda(m)``, reducing every multiweb in the skein module."""
    out: dict[str, Fraction] = {}
    for m in enumerate_multiwebs(g, max_edges):
        w = multiweb_weight(g, m)
        for code, coef in reduce_multiweb(g, m, reducer).items():
            out[code] = out.get(code, Fraction(0)) + w * coef
    return {c: v for c, v in out.items() if v}


@dataclass
class SampleResult:
    counts: Counter
    n_samples: int
    exact: dict[str, Fraction]

    def frequencies(self) -> dict[str, float]:
        if not self.n_samples:
            return {}
        return {c: k / self.n_samples for c, k in sorted(self.counts.items())}


def _cumulative(weights: Sequence[Fraction]) -> list[int]:
    """Cumulative weights scaled to integers by the common denominator."""
    den = math.lcm(*(Fraction(w).denominator for w in weights)) if weights else 1
    acc, out = 0, []
    for w in weights:
        acc += int(w * den)
        out.append(acc)
    return out


def _draw(rng: random.Random, cum: list[int]) -> int:
    return bisect.bisect_right(cum, rng.randrange(cum[-1]))


def sample_reduction(g: CircularPlanarGraph, colors: Sequence[int], n_samples: int, seed: int = 0,
                     max_edges: int | None = MAX_EDGES) -> SampleResult:
    """Sample a Tr_c-weighted multiweb, then one class of its reduction.

    A multiweb ``m`` is drawn with probability ``nu(m) Tr_m(c) / Z(c)``; the
    class is then drawn with weight ``C_lambda(m) Tr_lambda(c)``, which sums to
    ``Tr_m(c)`` over the classes.
    """
    colors = tuple(colors)
    dist = probabilities(g, colors)        # raises on infeasible colorings
    traces = dist.traces
    sign = 1 if dist.z > 0 else -1      # every Tr_m(c) carries the sign of Z(c)
    mws, weights, branches = [], [], []
    for m in enumerate_multiwebs(g, max_edges):
        t = multiweb_trace(g, m, colors)
        if not t:
            continue
        red = reduce_multiweb(g, m)
        opts = sorted((c, Fraction(k * traces.get(c, 0), t)) for c, k in red.items())
        opts = [(c, w) for c, w in opts if w]
        if any(w < 0 for _, w in opts):
            raise ValueError(f"negative reduction weight for multiweb {m}")
        if sign * t < 0:
            raise ValueError(f"multiweb {m} has trace of the wrong sign")
        mws.append(m)
        weights.append(multiweb_weight(g, m) * t * sign)
        branches.append(([c for c, _ in opts], _cumulative([w for _, w in opts])))
    if not mws:
        raise InfeasibleColoringError(f"coloring {colors} admits no multiweb")
    cum = _cumulative(weights)
    rng = random.Random(seed)
    counts: Counter = Counter()
    for _ in range(n_samples):
        i = _draw(rng, cum)
        classes, bcum = branches[i]
        counts[classes[_draw(rng, bcum)]] += 1
    return SampleResult(counts, n_samples, dict(dist.probabilities))


@dataclass
class Identity:
    name: str
    ok: bool
    detail: str = ""


def oracle_check(g: CircularPlanarGraph, max_edges: int | None = MAX_EDGES) -> list[Identity]:
    """Compare the determinant formulas with brute force on one graph.

    Checks ``Delta^3 P_lambda = sum_m nu(m) C_lambda(m)`` for every class and,
    for every node coloring, ``sum_m nu(m) Tr_m(c) = eps_c Z_1 Z_2 Z_3``; for the
    feasible colorings it also checks that the probabilities are a distribution.
    """
    from .probability import build_model, c_lambda_all, _partition_function
    from .webs import trace_vector
    from .skein import all_colorings
    from .linalg import format_rational
    mws = enumerate_multiwebs(g, max_edges)
    model = build_model(g)
    out = []
    brute_c: dict[str, Fraction] = {}
    brute_z: dict[tuple, Fraction] = {}
    reducer = Reducer()
    for m in mws:
        w = multiweb_weight(g, m)
        web = abstract_web(g, m)
        for code, coef in reduce_to_classes(web, reducer).items():
            brute_c[code] = brute_c.get(code, Fraction(0)) + w * coef
        for c, t in trace_vector(web).items():
            brute_z[c] = brute_z.get(c, Fraction(0)) + w * t
    det_c = c_lambda_all(g, model)
    for code in sorted(set(det_c) | set(brute_c)):
        a, b = det_c.get(code, Fraction(0)), brute_c.get(code, Fraction(0))
        out.append(Identity(f"C[{code}]", a == b, f"{format_rational(a)} vs {format_rational(b)}"))
    bad_z, feasible, bad_pr = [], 0, []
    for c in all_colorings(len(g.nodes)):
        z = _partition_function(g, model.kd, c)
        if brute_z.get(c, Fraction(0)) != z:
            bad_z.append(c)
        if z:
            feasible += 1
            try:
                probabilities(g, c, model)
            except (AssertionError, InfeasibleColoringError) as exc:
                bad_pr.append((c, str(exc)))
    out.append(Identity("Z(c) for every coloring", not bad_z,
                        f"{3 ** len(g.nodes)} colorings" + (f"; mismatch at {bad_z[:3]}" if bad_z else "")))
    out.append(Identity("Pr_c is a distribution", not bad_pr,
                        f"{feasible} feasible colorings" + (f"; failures {bad_pr[:3]}" if bad_pr else "")))
    return out
