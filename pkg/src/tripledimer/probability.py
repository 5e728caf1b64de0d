"""Connection probabilities of reduced webs.

For a nondegenerate circular planar graph, each reduced web class lambda has
a polynomial ``P_lambda`` in the entries of the boundary measurement matrix X,

    P_lambda = eps_K * sum_tau Pmat[lambda, tau] * X_tau,

and the weighted count of multiwebs reducing to lambda is ``C_lambda = Delta^3 P_lambda``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Mapping, Sequence

from .graph import CircularPlanarGraph, DegenerateGraphError
from .kasteleyn import KasteleynData, boundary_measurement, restricted_kasteleyn
from .linalg import ExactMatrix, det, permutation_sign
from .partitions import ThreePartition, enumerate_partitions, node_indexing, trace_tau, x_tau
from .skein import ReductionMatrix, epsilon_c, reduction_matrix
from .webs import trace


class InfeasibleColoringError(ValueError):
    pass


class HypothesisError(ValueError):
    """The boundary does not have the shape a closed-form theorem requires."""


@dataclass
class Model:
    """Everything derived from one graph (and one choice of signs and B_int_star)."""
    g: CircularPlanarGraph
    kd: KasteleynData
    rm: ReductionMatrix
    x_taus: list[Fraction]
    raw: dict[str, Fraction]          # sum_tau Pmat X_tau, before the global sign
    eps_K: int
    reference_coloring: tuple[int, ...]

    @property
    def types(self) -> str:
        return self.rm.types

    @property
    def X(self) -> ExactMatrix:
        return self.kd.X

    @property
    def delta(self) -> Fraction:
        return self.kd.delta

    def p_values(self) -> dict[str, Fraction]:
        return {c: self.eps_K * v for c, v in self.raw.items()}


def _coloring_of(g: CircularPlanarGraph, colors: Sequence[int]) -> dict[str, int]:
    if len(colors) != len(g.nodes):
        raise ValueError(f"expected {len(g.nodes)} node colors, got {len(colors)}")
    if any(c not in (1, 2, 3) for c in colors):
        raise ValueError("colors must be 1, 2 or 3")
    return dict(zip(g.nodes, colors))


def color_dets(g: CircularPlanarGraph, kd: KasteleynData, colors: Sequence[int]) -> list[Fraction] | None:
    """Determinants of the Kasteleyn matrices of the three color-restricted graphs, or None if unbalanced."""
    col = _coloring_of(g, colors)
    out = []
    for i in (1, 2, 3):
        try:
            out.append(det(restricted_kasteleyn(g, kd, col, i)))
        except ValueError:
            return None
    return out


def _partition_function(g, kd, colors) -> Fraction:
    dets = color_dets(g, kd, colors)
    if dets is None or any(d == 0 for d in dets):
        return Fraction(0)
    z = Fraction(1)
    for d in dets:
        z *= abs(d)
    return epsilon_c(g.type_vector, colors) * z


def partition_function(g: CircularPlanarGraph, colors: Sequence[int], kd: KasteleynData | None = None) -> Fraction:
    """``Z(c) = eps_c Z_1 Z_2 Z_3``; zero when ``c`` is infeasible."""
    if kd is None:
        kd = boundary_measurement(g)
    return _partition_function(g, kd, colors)


def is_feasible(g: CircularPlanarGraph, colors: Sequence[int], kd: KasteleynData | None = None) -> bool:
    if kd is None:
        kd = boundary_measurement(g)
    dets = color_dets(g, kd, colors)
    return dets is not None and all(d != 0 for d in dets)


def feasible_colorings(g: CircularPlanarGraph, kd: KasteleynData | None = None, limit: int | None = None):
    if kd is None:
        kd = boundary_measurement(g)
    found = 0
    for c in product((1, 2, 3), repeat=len(g.nodes)):
        if is_feasible(g, c, kd):
            yield c
            found += 1
            if limit is not None and found >= limit:
                return


def build_model(g: CircularPlanarGraph, signs=None, matching=None) -> Model:
    kd = boundary_measurement(g, signs=signs, matching=matching)
    types = g.type_vector
    rm = reduction_matrix(types)
    xs = [x_tau(t, kd.X) for t in rm.partitions]
    raw = {}
    for i, code in enumerate(rm.classes):
        raw[code] = sum((rm.matrix[i][j] * xs[j] for j in range(len(xs)) if rm.matrix[i][j]), Fraction(0))
    # fix the global sign from one feasible coloring: Z(c) = eps_K Delta^3 sum_tau X_tau Tr_tau(c)
    eps = None
    ref = None
    for c in feasible_colorings(g, kd):
        s = sum((x * trace_tau(t, c) for x, t in zip(xs, rm.partitions) if x), Fraction(0))
        if s == 0:
            continue
        z = _partition_function(g, kd, c)
        ratio = z / (kd.delta ** 3 * s)
        if ratio not in (1, -1):
            raise AssertionError(f"Z(c) / (Delta^3 sum X_tau Tr_tau) = {ratio} is not a sign")
        eps, ref = int(ratio), c
        break
    if eps is None:
        raise DegenerateGraphError("no feasible node coloring")
    return Model(g, kd, rm, xs, raw, eps, ref)


def p_lambda_all(g: CircularPlanarGraph, model: Model | None = None) -> dict[str, Fraction]:
    return (model or build_model(g)).p_values()


def c_lambda_all(g: CircularPlanarGraph, model: Model | None = None) -> dict[str, Fraction]:
    m = model or build_model(g)
    d3 = m.delta ** 3
    return {c: d3 * v for c, v in m.p_values().items()}


@dataclass
class WebDistribution:
    classes: list[str]
    p_values: dict[str, Fraction]
    traces: dict[str, int]
    probabilities: dict[str, Fraction]
    z: Fraction
    delta: Fraction
    colors: tuple[int, ...] = field(default=())

    def as_json(self) -> dict:
        from .linalg import format_rational
        return {
            "classes": [{"code": c, "p_value": format_rational(self.p_values[c]), "trace": self.traces[c],
                         "prob": format_rational(self.probabilities[c])} for c in self.classes],
            "z": format_rational(self.z),
            "delta": format_rational(self.delta),
        }


def probabilities(g: CircularPlanarGraph, colors: Sequence[int], model: Model | None = None) -> WebDistribution:
    m = model or build_model(g)
    colors = tuple(colors)
    z = _partition_function(g, m.kd, colors)
    if z == 0:
        raise InfeasibleColoringError(f"coloring {colors} is infeasible: Z(c) = 0")
    pv = m.p_values()
    d3 = m.delta ** 3
    traces = {c: trace(m.rm.representative(c), colors) for c in m.rm.classes}
    probs = {c: d3 * pv[c] * traces[c] / z for c in m.rm.classes}
    total = sum(probs.values(), Fraction(0))
    if total != 1:
        raise AssertionError(f"probabilities sum to {total}")
    neg = [c for c, p in probs.items() if p < 0]
    if neg:
        raise AssertionError(f"negative probability for classes {neg}")
    return WebDistribution(list(m.rm.classes), pv, traces, probs, z, m.delta, colors)


# -- alternative choices --------------------------------------------------------------

def alternative_b_stars(g: CircularPlanarGraph, signs=None) -> list[list[str]]:
    """Every set of internal black vertices whose removal leaves an invertible block D."""
    from .kasteleyn import assign_signs, kasteleyn_matrix
    signs = signs or assign_signs(g)
    w_int, b_int = g.internal("w"), g.internal("b")
    N = len(b_int) - len(w_int)
    out = []
    for S in combinations(b_int, N):
        rest = [b for b in b_int if b not in S]
        D = kasteleyn_matrix(g, signs, w_int, rest)
        if det(D) != 0:
            out.append(sorted(S, key=g.vertex_index))
    return out


def model_with_b_star(g: CircularPlanarGraph, b_star: Sequence[str], signs=None) -> Model:
    return build_model(g, signs=signs, matching=({}, [], list(b_star)))


# -- closed forms -----------------------------------------------------------------------

def _indexed(g: CircularPlanarGraph):
    whites, blacks = node_indexing(g.type_vector)
    return {p: i for i, p in enumerate(whites)}, {p: i for i, p in enumerate(blacks)}


def _block_det_product(X: ExactMatrix, blocks: Sequence[tuple[Sequence[int], Sequence[int]]]) -> Fraction:
    """``sgn * prod det X[rows_k, cols_k]``, the sign chosen so that the result is the signed sum
    of the monomials ``sgn(sigma) prod X[w, sigma(w)]`` over bijections respecting the blocks."""
    nrows = sum(len(r) for r, _ in blocks)
    perm = [None] * nrows
    value = Fraction(1)
    for rows, cols in blocks:
        if len(rows) != len(cols):
            raise HypothesisError("a block is not square")
        for r, c in zip(rows, cols):
            perm[r] = c
        if rows:
            value *= det(X.submatrix(list(rows), list(cols)))
    return permutation_sign(perm) * value


def parallel_partition(types: str, start: int = 0) -> ThreePartition:
    """The pairing ``v_i <-> v_{2n+1-i}`` with ``v_1`` at node position ``start``."""
    n2 = len(types)
    if n2 % 2:
        raise HypothesisError("parallel crossing needs an even number of nodes")
    pairs = []
    for i in range(n2 // 2):
        a, b = (start + i) % n2, (start + n2 - 1 - i) % n2
        if types[a] == types[b]:
            raise HypothesisError(f"nodes {a} and {b} have the same type")
        pairs.append((a, b) if types[a] == "w" else (b, a))
    return ThreePartition(types, tuple(sorted(pairs)), ())


def _two_block_p(g: CircularPlanarGraph, start: int, m: Model) -> Fraction:
    """``eps_K * det X[W1, B2] * det X[W2, B1]`` with side 1 the first half of the nodes from ``start``."""
    n2 = len(g.nodes)
    left = {(start + i) % n2 for i in range(n2 // 2)}
    wi, bi = _indexed(g)
    W1 = [wi[p] for p in sorted(wi, key=wi.get) if p in left]
    W2 = [wi[p] for p in sorted(wi, key=wi.get) if p not in left]
    B1 = [bi[p] for p in sorted(bi, key=bi.get) if p in left]
    B2 = [bi[p] for p in sorted(bi, key=bi.get) if p not in left]
    if len(W1) != len(B2) or len(W2) != len(B1):
        raise HypothesisError("each side must have as many white nodes as the other side has black nodes")
    return m.eps_K * _block_det_product(m.X, [(W1, B2), (W2, B1)])


def lgv_parallel(g: CircularPlanarGraph, start: int = 0, model: Model | None = None) -> Fraction:
    """``eps_K * det X[W1, B2] * det X[W2, B1]`` for the parallel crossing.

    The left side is the first half of the nodes counted from position ``start``.
    The returned value carries the global sign eps_K and the sign of the block
    arrangement in the node indexing, so it is directly comparable with ``P_lambda``.
    """
    m = model or build_model(g)
    parallel_partition(g.type_vector, start)   # checks the hypothesis
    return _two_block_p(g, start, m)


def parallel_class(types: str, start: int = 0) -> str:
    from .skein import partition_diagram, reduce_to_classes
    (code, coef), = reduce_to_classes(partition_diagram(parallel_partition(types, start))).items()
    assert coef == 1
    return code


def crossbar_p(g: CircularPlanarGraph, bars: Sequence[int], start: int = 0, model: Model | None = None) -> Fraction:
    """Closed form for a crossing with interlaced crossbars: the same two-determinant product."""
    from .webs import crossbar_web
    crossbar_web(g.type_vector, bars, start)   # validates interlacing and node types
    return _two_block_p(g, start, model or build_model(g))


def crossbar_class(types: str, bars: Sequence[int], start: int = 0) -> str:
    from .webs import crossbar_web
    return crossbar_web(types, bars, start).code()


def _tn_blocks(g: CircularPlanarGraph, n: int):
    """Row/column blocks of X for T_n: whites of side k against blacks of side k+1.

    Black nodes are numbered counterclockwise starting right after the first
    white node, which is what makes the sides consecutive in both indexings.
    """
    wi, bi = _indexed(g)
    ccw_col = [bi[2 * j + 1] for j in range(3 * n)]
    blocks = []
    for k in range(3):
        rows = [wi[2 * (k * n + i)] for i in range(n)]
        cols = [ccw_col[((k + 1) % 3) * n + j] for j in range(n)]
        blocks.append((rows, cols))
    return blocks


def tn_sign(n: int) -> int:
    """Common value of the reduction coefficients of T_n on its supporting pairings.

    Every such pairing reaches T_n through double-Y resolutions only, one per
    black-white pair of trivalent vertices; T_n has 3n(n+1) trivalent vertices.
    """
    return (-1) ** (3 * n * (n + 1) // 2)


def honeycomb_p(g: CircularPlanarGraph, n: int, variant: str = "T", model: Model | None = None) -> Fraction:
    """Closed forms for the triangular honeycombs.

    ``T``: nodes alternate w, b, ... (6n nodes, starting with a white node);
    a product of three n x n minors of X pairing each side's whites with the
    next side's blacks.  ``T'``: 3n white nodes; product of the three maximal
    minors on consecutive blocks of n rows.
    """
    m = model or build_model(g)
    types = g.type_vector
    X = m.X
    if variant == "T":
        if types != "wb" * (3 * n):
            raise HypothesisError(f"T_{n} needs the type vector {'wb' * (3 * n)}, got {types}")
        # the block product already carries the sign of the pairing in our column order
        return m.eps_K * tn_sign(n) * _block_det_product(X, _tn_blocks(g, n))
    if variant in ("T'", "Tprime"):
        if types != "w" * (3 * n):
            raise HypothesisError(f"T'_{n} needs {3 * n} white nodes, got {types}")
        value = Fraction(1)
        cols = list(range(n))
        for k in range(3):
            value *= det(X.submatrix(list(range(k * n, (k + 1) * n)), cols))
        return m.eps_K * tprime_sign(n) * value
    raise ValueError(f"unknown honeycomb variant {variant!r}")


def tprime_sign(n: int) -> int:
    """Relative sign between ``sum_tau Pmat X_tau`` and the product of minors for T'_n.

    The diagonal monomial of the product has coefficient +1.  In ``X_tau`` for
    the partition into triples ``(i, n+i, 2n+i)`` it comes with the sign of the
    column arrangement in the tripled matrix, and that partition reduces to
    T'_n with coefficient ``(-1)^(n(n-1)/2)``, one double-Y per hexagon corner
    pair added when the tripods are stacked.  The two signs always agree.
    """
    cols = [0] * (3 * n)
    for i in range(n):
        for k in range(3):
            cols[k * n + i] = 3 * i + k
    return permutation_sign(cols) * (-1) ** (n * (n - 1) // 2)


def honeycomb_class(types: str, n: int, variant: str = "T") -> str:
    """Class code of T_n (identified by the support of its reduction row) or T'_n."""
    from .webs import tprime_web
    if variant in ("T'", "Tprime"):
        return tprime_web(n).code()
    rm = reduction_matrix(types)
    whites, blacks = node_indexing(types)
    ccw = [2 * j + 1 for j in range(3 * n)]
    side_w = [[2 * (k * n + i) for i in range(n)] for k in range(3)]
    side_b = [ccw[k * n:(k + 1) * n] for k in range(3)]
    support = {j for j, t in enumerate(rm.partitions)
               if all(b in side_b[(k + 1) % 3] for w, b in t.pairs for k in range(3) if w in side_w[k])}
    for i, code in enumerate(rm.classes):
        if {j for j, v in enumerate(rm.matrix[i]) if v} == support:
            return code
    raise LookupError(f"no class of {types} is supported on the T_{n} pairings")
