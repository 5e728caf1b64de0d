"""Closed forms against the general formula, and the general formula against brute force.

Run with ``python demos/03_closed_forms_and_oracle.py``.
"""
import random

from tripledimer import fixtures as F
from tripledimer import probability as P
from tripledimer.linalg import format_rational as R
from tripledimer.oracle import oracle_check

rng = random.Random(1)

# Two-determinant products for the parallel crossing, and honeycomb minors.
g0 = F.fixture_graph("wbwbwb")
g = F.reweighted(g0, F.random_weights(g0, rng))
m = P.build_model(g)
pv = m.p_values()
for start in range(3):
    v = P.lgv_parallel(g, start, m)
    print(f"parallel crossing from node {start}: {R(v)}  equal to P_lambda: {v == pv[P.parallel_class('wbwbwb', start)]}")
v = P.honeycomb_p(g, 1, "T", m)
print(f"hexagon T_1: {R(v)}  equal to P_lambda: {v == pv[P.honeycomb_class('wbwbwb', 1)]}")

g0 = F.fixture_graph("wwwwww")
g = F.reweighted(g0, F.random_weights(g0, rng))
m = P.build_model(g)
v = P.honeycomb_p(g, 2, "Tprime", m)
print(f"T'_2: {R(v)}  equal to P_lambda: {v == m.p_values()[P.honeycomb_class('wwwwww', 2, 'Tprime')]}")

# Brute force: enumerate every multiweb, reduce it in the skein module and sum.
print()
for name in F.ORACLE_FIXTURES:
    res = oracle_check(F.fixture_graph(name))
    print(f"{name}: {sum(r.ok for r in res)}/{len(res)} identities hold;", res[-2].detail, "|", res[-1].detail)
