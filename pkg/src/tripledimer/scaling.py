"""Half-plane scaling limits and a square-lattice approximation.

This is the only floating-point module.  The continuum formulas take real
boundary points ``z_1 < z_2 < ...``; the lattice check builds the square grid
strip with nodes on its bottom row and evaluates the boundary measurement
matrix with sparse linear algebra.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .graph import CircularPlanarGraph, from_embedding
from .kasteleyn import assign_signs, boundary_measurement

SUM_TOL = 1e-12
EXACT_VERTEX_LIMIT = 100


class ScalingError(ValueError):
    pass


def _check_increasing(z: Sequence[float], count: int | None = None) -> list[float]:
    z = [float(x) for x in z]
    if count is not None and len(z) != count:
        raise ScalingError(f"expected {count} points, got {len(z)}")
    if any(b <= a for a, b in zip(z, z[1:])):
        raise ScalingError("boundary points must be strictly increasing")
    return z


def limit_entry(z_w: float, z_b: float) -> float:
    """Leading term of X_{w,b} with the lattice spacing divided out: 2/(pi (z_b - z_w))."""
    if z_w == z_b:
        raise ScalingError("coincident boundary points")
    return 2.0 / (math.pi * (z_b - z_w))


def four_point_prob(w1: float, b1: float, w2: float, b2: float) -> float:
    """Limit probability that w1 joins b1 and w2 joins b2 (boundary colors all equal)."""
    w1, b1, w2, b2 = _check_increasing((w1, b1, w2, b2))
    return (b2 - w1) * (w2 - b1) / ((b2 - b1) * (w2 - w1))


def six_point_probs(z: Sequence[float]) -> list[float]:
    """Limit probabilities of the six reduced webs for alternating nodes w,b,w,b,w,b at z_1..z_6.

    The order is: the three planar pairings (1-2,3-4,5-6), (1-6,2-3,4-5), the two
    mixed pairings sharing the pair 1-6 and 1-2 respectively, the pairing
    sharing 3-4, and finally the hexagon, whose trace at constant colors is 2.
    """
    z1, z2, z3, z4, z5, z6 = _check_increasing(z, 6)
    D = (z3 - z1) * (z4 - z2) * (z5 - z3) * (z6 - z4) * (z5 - z1) * (z6 - z2)
    p = [
        (z3 - z2) * (z4 - z1) * (z5 - z2) * (z5 - z4) * (z6 - z1) * (z6 - z3) / D,
        (z2 - z1) * (z4 - z1) * (z4 - z3) * (z5 - z2) * (z6 - z3) * (z6 - z5) / D,
        (z3 - z2) * (z4 - z3) * (z6 - z1) * (z6 - z5) / ((z3 - z1) * (z5 - z3) * (z6 - z4) * (z6 - z2)),
        (z2 - z1) * (z4 - z3) * (z5 - z4) * (z6 - z1) / ((z3 - z1) * (z4 - z2) * (z6 - z4) * (z5 - z1)),
        (z2 - z1) * (z3 - z2) * (z5 - z4) * (z6 - z5) / ((z4 - z2) * (z5 - z3) * (z6 - z2) * (z5 - z1)),
        2 * (z2 - z1) * (z3 - z2) * (z4 - z3) * (z5 - z4) * (z6 - z5) * (z6 - z1) / D,
    ]
    s = sum(p)
    if abs(s - 1) > SUM_TOL:
        raise AssertionError(f"six-point probabilities sum to {s!r}")
    return p


def honeycomb_limit_prob(w: Sequence[float], b: Sequence[float], trace_value: int) -> float:
    """Limit probability of the honeycomb T_n at constant boundary colors.

    ``w`` and ``b`` hold the 3n white and 3n black points, interleaved on the
    line as w_1 < b_1 < w_2 < ... < b_{3n}.  Sides are I_k = {(k-1)n+1, ..., kn}.
    ``trace_value`` is Tr_{T_n}(1).
    """
    if len(w) != len(b) or len(w) % 3:
        raise ScalingError("need 3n white and 3n black points")
    pts = [x for pair in zip(w, b) for x in pair]
    _check_increasing(pts)
    n = len(w) // 3
    side = [i // n for i in range(3 * n)]
    num = 1.0
    for i in range(3 * n):
        for j in range(3 * n):
            if side[j] != (side[i] + 1) % 3:
                num *= (w[i] - b[j])
    den = 1.0
    for i in range(3 * n):
        for j in range(i + 1, 3 * n):
            if side[i] != side[j]:
                den *= (w[i] - w[j]) * (b[i] - b[j])
    return num / den * trace_value


# -- lattice approximation -------------------------------------------------------------

def strip_graph(width: int, height: int, node_x: Sequence[int]) -> CircularPlanarGraph:
    """Square grid ``[0, width) x [0, height)`` with pendant nodes below ``(x, 0)`` for ``x`` in ``node_x``.

    Grid vertex ``(x, y)`` is white when ``x + y`` is even; the node hanging
    below it has the opposite color.  Every grid vertex is internal, so an entry
    of X is a ratio of two grid partition functions with two boundary monomers.
    Node order is left to right, which is counterclockwise.
    """
    xs = sorted(node_x)
    if len(set(xs)) != len(xs) or xs[0] < 0 or xs[-1] >= width:
        raise ScalingError("node abscissae must be distinct and inside the strip")
    if (width * height) % 2:
        raise ScalingError("the grid needs an even number of vertices")
    pos, types, edges = {}, {}, []
    for x in range(width):
        for y in range(height):
            v = f"v{x}_{y}"
            pos[v] = (x, y)
            types[v] = "w" if (x + y) % 2 == 0 else "b"
    for x in range(width):
        for y in range(height):
            if x + 1 < width:
                edges.append((f"h{x}_{y}", f"v{x}_{y}", f"v{x + 1}_{y}", 1))
            if y + 1 < height:
                edges.append((f"u{x}_{y}", f"v{x}_{y}", f"v{x}_{y + 1}", 1))
    nodes = []
    for x in xs:
        v = f"n{x}"
        pos[v] = (x, -1)
        types[v] = "b" if x % 2 == 0 else "w"
        edges.append((f"p{x}", v, f"v{x}_0", 1))
        nodes.append(v)
    return from_embedding(pos, types, edges, nodes)


def float_boundary_measurement(g: CircularPlanarGraph, signs=None) -> tuple[np.ndarray, list[str], list[str]]:
    """``X = A - B D^{-1} C`` in floating point for graphs whose internal colors balance."""
    if len(g.internal("b")) != len(g.internal("w")):
        raise ScalingError("the float path handles graphs without internal surplus only")
    signs = signs or assign_signs(g)
    whites, blacks = g.node_indexing()
    rows = whites + g.internal("w")
    cols = blacks + g.internal("b")
    ri = {v: i for i, v in enumerate(rows)}
    ci = {v: j for j, v in enumerate(cols)}
    r, c, d = [], [], []
    for e in g.edges.values():
        r.append(ri[e.white])
        c.append(ci[e.black])
        d.append(signs[e.id] * float(e.weight))
    K = sp.csc_matrix((d, (r, c)), shape=(len(rows), len(cols)))
    nw, nb = len(whites), len(blacks)
    A = K[:nw, :nb].toarray()
    B = K[:nw, nb:]
    C = K[nw:, :nb]
    D = K[nw:, nb:]
    lu = spla.splu(D.tocsc())
    Y = lu.solve(C.toarray())
    return A - B @ Y, whites, blacks


def lattice_X(g: CircularPlanarGraph, exact_limit: int = EXACT_VERTEX_LIMIT) -> np.ndarray:
    """Boundary measurement matrix, exactly for small graphs and in floats above ``exact_limit`` vertices."""
    if len(g.types) <= exact_limit:
        kd = boundary_measurement(g)
        return np.array([[float(kd.X[i, j]) for j in range(kd.X.cols)] for i in range(kd.X.rows)])
    return float_boundary_measurement(g)[0]


@dataclass
class EntryCheck:
    spacing: int          # lattice steps between the two nodes
    ratio: float          # X * pi * (z_b - z_w) / (2 eps)

    @property
    def deviation(self) -> float:
        return abs(self.ratio - 1.0)


def lattice_entry_check(d: int, box: int = 8, exact_limit: int = EXACT_VERTEX_LIMIT) -> EntryCheck:
    """Compare X_{w,b} on a strip with the limit kernel.

    The white node hangs below x0 (odd) and the black one below x0 + d (d odd)
    on the bottom row of a ``box*d`` by ``box*d/2`` strip; with ``eps = 1/d`` the
    points are one unit apart.
    """
    if d % 2 == 0:
        raise ScalingError("the two nodes need opposite colors: use an odd spacing")
    width, height = box * d, box * d // 2
    width += width % 2
    x0 = (width - d) // 2
    x0 += 1 - x0 % 2
    g = strip_graph(width, height, [x0, x0 + d])
    X = lattice_X(g, exact_limit=exact_limit)
    # the sign of a single entry is a gauge choice
    ratio = abs(X[0, 0]) * math.pi * d / 2
    return EntryCheck(d, ratio)


def lattice_entry_sequence(levels: int = 4) -> list[EntryCheck]:
    """Entry checks as the grid is refined: spacing 2^k + 1 inside a strip 2^(k+2) spacings wide.

    Both the lattice spacing and the distance to the far boundary shrink
    (relative to the node separation) by a factor of two per level.
    """
    return [lattice_entry_check(2 ** k + 1, box=2 ** (k + 2)) for k in range(1, levels + 1)]


def lattice_four_point(points: Sequence[int], box: int = 8) -> tuple[float, float]:
    """Lattice and limit probability that w1-b1, w2-b2 are joined (colors all equal).

    ``points`` are the bottom-row abscissae of w1 < b1 < w2 < b2 (odd, even, odd, even).
    """
    xs = list(points)
    if len(xs) != 4 or any(b <= a for a, b in zip(xs, xs[1:])):
        raise ScalingError("need four increasing abscissae")
    if any((x + k) % 2 != 1 for k, x in enumerate(xs)):
        raise ScalingError("abscissae must alternate odd (white node) and even (black node)")
    span = xs[-1] - xs[0]
    width, height = box * span, box * span // 2
    width += width % 2
    shift = (width - span) // 2 - xs[0]
    shift -= shift % 2                  # keep the parities, hence the node colors
    xs = [x + shift for x in xs]
    g = strip_graph(width, height, xs)
    X, whites, blacks = float_boundary_measurement(g)
    # columns are clockwise from w1: b2 first, then b1
    pair = -X[0, 1] * X[1, 0]
    prob = pair / (X[0, 0] * X[1, 1] - X[0, 1] * X[1, 0])
    return float(prob), four_point_prob(*points)
