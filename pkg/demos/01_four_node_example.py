"""The four-node example: boundary measurements, partition functions and web probabilities.

Run with ``python demos/01_four_node_example.py``.
"""
from fractions import Fraction

from tripledimer import fixtures as F
from tripledimer.linalg import format_rational as R
from tripledimer.probability import build_model, c_lambda_all, probabilities

# Edge weights a..k; any positive rationals work.
w = {"a": 2, "b": 3, "d": 1, "e": Fraction(1, 2), "f": 5, "g": 2, "h": Fraction(3, 4), "k": 7}
g = F.four_node(w)
m = build_model(g)

print("nodes counterclockwise:", g.nodes, "types", g.type_vector)
print("X (rows: whites ccw from w1, columns: blacks cw from w1):")
for i in range(m.X.rows):
    print("   ", [R(m.X[i, j]) for j in range(m.X.cols)])
print("Delta =", R(m.delta), " expected +-(eg+fh) =", R(w["e"] * w["g"] + w["f"] * w["h"]))

# Each reduced web class gets a coefficient C_lambda, a polynomial in the weights.
for code, c in c_lambda_all(g, m).items():
    print(f"C[{code}] = {R(c)}")

# Connection probabilities for two boundary colorings.
for colors in [(1, 1, 1, 1), (1, 2, 2, 1)]:
    d = probabilities(g, colors, m)
    print(f"\ncoloring {colors}: Z = {R(d.z)}")
    for code in d.classes:
        print(f"  Pr[{code}] = {R(d.probabilities[code])}  (trace {d.traces[code]})")
