"""Fixture graphs and reference data.

Graphs are embedded in the text format of :mod:`tripledimer.graph`.  Reference
tables are stored in the column convention of the source tables together with
the maps that translate them to the conventions used in this package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .graph import CircularPlanarGraph, dumps, from_embedding
from .linalg import format_rational
from .partitions import ThreePartition, enumerate_partitions, node_indexing


def grid_graph(rows: int, cols: int, attachments: Sequence[tuple], removed: Sequence[tuple] = (),
               weights=None) -> CircularPlanarGraph:
    """Square-grid host with pendant boundary nodes.

    Grid vertex ``(i, j)`` sits at ``(j, i)`` and is white when ``i + j`` is even.
    ``attachments`` lists ``((i, j), (dx, dy))`` in counterclockwise order; each
    adds a node of the opposite color just outside ``(i, j)`` in direction
    ``(dx, dy)``.  ``weights`` maps edge ids to weights (default 1).
    """
    removed = set(removed)
    pos, types, edges = {}, {}, []
    name = {}
    for i in range(rows):
        for j in range(cols):
            if (i, j) in removed:
                continue
            t = "w" if (i + j) % 2 == 0 else "b"
            v = f"{t.upper()}{i}_{j}"
            name[i, j] = v
            pos[v], types[v] = (j, i), t
    k = 0
    for (i, j), v in name.items():
        for di, dj in ((0, 1), (1, 0)):
            u = name.get((i + di, j + dj))
            if u:
                k += 1
                edges.append((f"e{k}", v, u))
    nodes = []
    for n, ((i, j), (dx, dy)) in enumerate(attachments):
        v = name[i, j]
        t = "b" if types[v] == "w" else "w"
        nv = f"{t}{n + 1}"
        pos[nv] = (j + Fraction(dx, 2), i + Fraction(dy, 2))
        types[nv] = t
        nodes.append(nv)
        k += 1
        edges.append((f"e{k}", nv, v))
    weights = weights or {}
    edges = [(eid, u, v, weights.get(eid, 1)) for eid, u, v in edges]
    return from_embedding(pos, types, edges, nodes)


def boundary_slots(rows: int, cols: int) -> list[tuple]:
    """Attachment slots around a grid, counterclockwise from the bottom-left corner."""
    out = [((0, j), (0, -1)) for j in range(cols)]
    out += [((i, cols - 1), (1, 0)) for i in range(rows)]
    out += [((rows - 1, j), (0, 1)) for j in range(cols - 1, -1, -1)]
    out += [((i, 0), (-1, 0)) for i in range(rows - 1, -1, -1)]
    return out


def random_weights(g: CircularPlanarGraph, rng, max_num: int = 9, max_den: int = 5) -> dict[str, Fraction]:
    """Independent positive rational weights ``p/q`` with ``1 <= p <= max_num``, ``1 <= q <= max_den``."""
    return {e: Fraction(rng.randint(1, max_num), rng.randint(1, max_den)) for e in sorted(g.edges)}


def reweighted(g: CircularPlanarGraph, weights) -> CircularPlanarGraph:
    from .graph import loads
    text = dumps(g)
    out = []
    for ln in text.splitlines():
        if ln.startswith("edge "):
            _, eid, w, b, _ = ln.split()
            ln = f"edge {eid} {w} {b} {format_rational(weights[eid])}"
        out.append(ln)
    return loads("\n".join(out) + "\n")


# -- small worked examples ---------------------------------------------------------------

FOUR_NODE_EDGES = {"a": ("W3", "b1"), "b": ("w1", "B3"), "d": ("w2", "B4"), "e": ("W3", "B3"),
                   "f": ("W4", "B3"), "g": ("W4", "B4"), "h": ("W3", "B4"), "k": ("W4", "b2")}


def four_node(weights=None) -> CircularPlanarGraph:
    """Four nodes ``w1, b2, w2, b1`` around a square of internal vertices; edges named ``a..k``."""
    weights = weights or {}
    pos = {"W3": (0, 0), "B3": (1, 0), "W4": (1, 1), "B4": (0, 1),
           "b1": (-1, -1), "w1": (2, -1), "b2": (2, 2), "w2": (-1, 2)}
    types = {v: v[0].lower() for v in pos}
    edges = [(e, u, v, weights.get(e, 1)) for e, (u, v) in FOUR_NODE_EDGES.items()]
    return from_embedding(pos, types, edges, ["w1", "b2", "w2", "b1"])


TWO_BY_THREE_EDGES = {"a": ("w1", "b1"), "b": ("w1", "B3"), "k": ("w2", "b2"), "d": ("w2", "B3"),
                      "g": ("W3", "b1"), "e": ("W3", "b2"), "f": ("W3", "B3")}


def two_by_three(weights=None) -> CircularPlanarGraph:
    """The 3 x 2 grid with nodes ``w1, w2, b2, b1`` at its corners; edges named ``a..k``."""
    weights = weights or {}
    pos = {"w1": (0, 0), "B3": (1, 0), "w2": (2, 0), "b1": (0, 1), "W3": (1, 1), "b2": (2, 1)}
    types = {v: v[0].lower() for v in pos}
    edges = [(e, u, v, weights.get(e, 1)) for e, (u, v) in TWO_BY_THREE_EDGES.items()]
    return from_embedding(pos, types, edges, ["w1", "w2", "b2", "b1"])


# -- grid hosts --------------------------------------------------------------------------
# (rows, cols, attachments, removed grid vertices); found by searching small grids for
# nondegenerate hosts of each boundary type.

GRID_HOSTS = {
    "bwwww": (4, 4, [((0, 2), (0, -1)), ((2, 3), (1, 0)), ((3, 0), (-1, 0)), ((1, 0), (-1, 0)),
                     ((0, 1), (0, -1))], [(1, 2), (3, 1), (0, 0)]),
    "wbwbwb": (4, 4, [((0, 3), (0, -1)), ((3, 3), (0, 1)), ((3, 0), (-1, 0)), ((0, 0), (0, -1)),
                      ((0, 1), (0, -1)), ((0, 2), (0, -1))], [(3, 2), (3, 1)]),
    "www": (4, 4, [((0, 1), (0, -1)), ((0, 3), (0, -1)), ((2, 3), (1, 0))], [(2, 1), (1, 3), (2, 2)]),
    "wwwwww": (4, 4, [((0, 1), (0, -1)), ((0, 3), (1, 0)), ((2, 3), (1, 0)), ((3, 2), (0, 1)),
                      ((3, 0), (-1, 0)), ((1, 0), (-1, 0))], [(0, 0), (3, 3)]),
    "wbbbww": (4, 4, [((0, 3), (1, 0)), ((1, 3), (1, 0)), ((3, 3), (1, 0)), ((2, 0), (-1, 0)),
                      ((1, 0), (-1, 0)), ((0, 1), (0, -1))], [(3, 2), (0, 0)]),
    "bbwbww": (4, 4, [((1, 3), (1, 0)), ((3, 3), (0, 1)), ((3, 2), (0, 1)), ((3, 1), (0, 1)),
                      ((3, 0), (-1, 0)), ((0, 1), (0, -1))], [(1, 2), (1, 1)]),
    "bbbwww": (4, 4, [((1, 3), (1, 0)), ((3, 3), (1, 0)), ((2, 0), (-1, 0)), ((1, 0), (-1, 0)),
                      ((0, 1), (0, -1)), ((0, 3), (1, 0))], [(3, 2), (0, 0)]),
    "wb6": (4, 5, [((0, 1), (0, -1)), ((0, 2), (0, -1)), ((0, 3), (0, -1)), ((0, 4), (0, -1)),
                   ((1, 4), (1, 0)), ((2, 4), (1, 0)), ((3, 4), (0, 1)), ((3, 1), (0, 1)),
                   ((3, 0), (-1, 0)), ((2, 0), (-1, 0)), ((1, 0), (-1, 0)), ((0, 0), (-1, 0))], []),
}


def grid_host(name: str, weights=None) -> CircularPlanarGraph:
    rows, cols, att, removed = GRID_HOSTS[name]
    return grid_graph(rows, cols, att, removed, weights)


GRAPHS = {
    "4node": four_node,
    "2by3": two_by_three,
    **{name: (lambda weights=None, _n=name: grid_host(_n, weights)) for name in GRID_HOSTS},
}

# fixtures small enough for the multiweb enumeration (at most 30 edges)
ORACLE_FIXTURES = ["4node", "2by3", "bwwww", "wbwbwb"]


def fixture_graph(name: str, weights=None) -> CircularPlanarGraph:
    try:
        return GRAPHS[name](weights)
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(GRAPHS)}") from None


# -- printed reduction matrices ----------------------------------------------------------
# Pairing columns are labelled by the permutation (white i -> black label[i]) with black
# nodes numbered counterclockwise from the first node; the all-white columns by the part
# containing white 1; the (b,w,w,w,w) columns by the white paired with the black node.

PAIR_LABELS = ["123", "132", "213", "231", "312", "321"]

PRINTED_TABLES = {
    "bwwww": (["1", "2", "3", "4"], [
        [0, 0, 1, 1],
        [1, 1, 0, 0],
        [0, -1, -1, 0]]),
    "wbwbwb": (PAIR_LABELS, [
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, -1, 0, 0]]),
    "bbwbww": (PAIR_LABELS, [
        [0, 0, 0, 0, 1, 1],
        [1, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, -1, 0],
        [-1, 0, -1, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0]]),
    "bbbwww": (PAIR_LABELS, [
        [1, 1, 1, 1, 1, 1],
        [-1, -1, -1, 0, -1, 0],
        [-1, -1, -1, -1, 0, 0],
        [-1, 0, 0, 0, 0, 0],
        [1, 1, 0, 0, 0, 0],
        [1, 0, 1, 0, 0, 0]]),
    "wwwwww": (["123", "124", "125", "126", "134", "135", "136", "145", "146", "156"], [
        [0, 0, 1, 1, 0, 1, 1, 0, 0, 0],
        [1, 1, 0, 0, 0, 1, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, -1, -1, -1, -1, 0],
        [0, -1, -1, 0, -1, -1, 0, 0, 0, 0]]),
}

# Canonical class code of the web drawn in each printed row (the figure order).
FIGURE_CLASSES = {
    "wbwb": ["w0:3.0|b1:2.0|w2:1.0|b3:0.0", "w0:1.0|b1:0.0|w2:3.0|b3:2.0"],
    "wwbb": ["w0:4.0|w1:4.1|b2:5.1|b3:5.2|b4:0.0,1.0,5.0|w5:4.2,2.0,3.0", "w0:3.0|w1:2.0|b2:1.0|b3:0.0"],
    "bwwww": [
        "b0:4.0|w1:5.0|w2:5.1|w3:5.2|w4:0.0|b5:1.0,2.0,3.0",
        "b0:1.0|w1:0.0|w2:5.0|w3:5.1|w4:5.2|b5:2.0,3.0,4.0",
        "b0:5.0|w1:6.1|w2:6.2|w3:7.1|w4:7.2|w5:0.0,6.0,7.0|b6:5.1,1.0,2.0|b7:5.2,3.0,4.0",
    ],
    "wbwbwb": [
        "w0:1.0|b1:0.0|w2:3.0|b3:2.0|w4:5.0|b5:4.0",
        "w0:5.0|b1:2.0|w2:1.0|b3:4.0|w4:3.0|b5:0.0",
        "w0:1.0|b1:0.0|w2:5.0|b3:4.0|w4:3.0|b5:2.0",
        "w0:3.0|b1:2.0|w2:1.0|b3:0.0|w4:5.0|b5:4.0",
        "w0:5.0|b1:4.0|w2:3.0|b3:2.0|w4:1.0|b5:0.0",
        "w0:6.0|b1:7.1|w2:9.1|b3:11.1|w4:10.2|b5:8.2|b6:0.0,7.0,8.0|w7:6.1,1.0,9.0|w8:6.2,10.0,5.0"
        "|b9:7.2,2.0,11.0|b10:8.1,11.2,4.0|w11:9.2,3.0,10.1",
    ],
    "bbwbww": [
        "b0:5.0|b1:4.0|w2:3.0|b3:2.0|w4:1.0|w5:0.0",
        "b0:5.0|b1:2.0|w2:1.0|b3:4.0|w4:3.0|w5:0.0",
        "b0:6.0|b1:6.1|w2:3.0|b3:2.0|w4:7.1|w5:7.2|w6:0.0,1.0,7.0|b7:6.2,4.0,5.0",
        "b0:6.0|b1:2.0|w2:1.0|b3:6.1|w4:7.1|w5:7.2|w6:0.0,3.0,7.0|b7:6.2,4.0,5.0",
        "b0:6.0|b1:6.1|w2:7.1|b3:4.0|w4:3.0|w5:7.2|w6:0.0,1.0,7.0|b7:6.2,2.0,5.0",
        "b0:6.0|b1:6.1|w2:7.1|b3:8.1|w4:9.1|w5:9.2|w6:0.0,1.0,7.0|b7:6.2,2.0,8.0|w8:7.2,3.0,9.0"
        "|b9:8.2,4.0,5.0",
    ],
    "bbbwww": [
        "b0:5.0|b1:4.0|b2:3.0|w3:2.0|w4:1.0|w5:0.0",
        "b0:6.0|b1:6.1|b2:3.0|w3:2.0|w4:7.1|w5:7.2|w6:0.0,1.0,7.0|b7:6.2,4.0,5.0",
        "b0:5.0|b1:6.0|b2:6.1|w3:7.1|w4:7.2|w5:0.0|w6:1.0,2.0,7.0|b7:6.2,3.0,4.0",
        "b0:6.0|b1:6.1|b2:6.2|w3:7.0|w4:7.1|w5:7.2|w6:0.0,1.0,2.0|b7:3.0,4.0,5.0",
        "b0:6.0|b1:6.1|b2:8.1|w3:9.1|w4:9.2|w5:7.2|w6:0.0,1.0,7.0|b7:6.2,8.0,5.0|w8:7.1,2.0,9.0"
        "|b9:8.2,3.0,4.0",
        "b0:6.0|b1:9.1|b2:9.2|w3:7.2|w4:8.1|w5:8.2|w6:0.0,7.0,8.0|b7:6.1,9.0,3.0|b8:6.2,4.0,5.0"
        "|w9:7.1,1.0,2.0",
    ],
    "wwwwww": [
        "w0:6.0|w1:6.1|w2:7.0|w3:7.1|w4:7.2|w5:6.2|b6:0.0,1.0,5.0|b7:2.0,3.0,4.0",
        "w0:6.0|w1:6.1|w2:6.2|w3:7.0|w4:7.1|w5:7.2|b6:0.0,1.0,2.0|b7:3.0,4.0,5.0",
        "w0:6.0|w1:7.0|w2:7.1|w3:7.2|w4:6.1|w5:6.2|b6:0.0,4.0,5.0|b7:1.0,2.0,3.0",
        "w0:6.0|w1:8.1|w2:8.2|w3:9.1|w4:9.2|w5:6.2|b6:0.0,7.0,5.0|w7:6.1,8.0,9.0|b8:7.1,1.0,2.0"
        "|b9:7.2,3.0,4.0",
        "w0:6.0|w1:6.1|w2:8.1|w3:8.2|w4:9.1|w5:9.2|b6:0.0,1.0,7.0|w7:6.2,8.0,9.0|b8:7.1,2.0,3.0"
        "|b9:7.2,4.0,5.0",
    ],
}


def printed_black_order(types: str) -> list[int]:
    """Black node positions in the printed numbering: counterclockwise from position 0."""
    return [i for i, t in enumerate(types) if t == "b"]


def printed_partition(types: str, label: str) -> ThreePartition:
    """The 3-partition a printed column label stands for."""
    whites = node_indexing(types)[0]
    blacks = printed_black_order(types)
    if types.count("b") == 0:
        first = {whites[int(ch) - 1] for ch in label}
        rest = tuple(w for w in whites if w not in first)
        pairs, triples = (), tuple(sorted([tuple(sorted(first)), rest]))
    elif types.count("w") == types.count("b"):
        pairs = tuple(sorted((whites[i], blacks[int(ch) - 1]) for i, ch in enumerate(label)))
        triples = ()
    else:
        # one black node paired with white ``label``; the remaining whites form a triple
        w = whites[int(label) - 1]
        pairs = ((w, blacks[0]),)
        triples = (tuple(x for x in whites if x != w),)
    for t in enumerate_partitions(types):
        if t.pairs == pairs and t.triples == triples:
            return t
    raise ValueError(f"no 3-partition of {types} matches label {label!r}")


def printed_column_map(types: str) -> list[int]:
    """For each printed column, the index of the same 3-partition in our enumeration."""
    from .skein import reduction_matrix
    parts = reduction_matrix(types).partitions
    labels = PRINTED_TABLES[types][0]
    return [parts.index(printed_partition(types, lab)) for lab in labels]


def table_in_printed_order(types: str) -> list[list[int]]:
    """Our reduction matrix with rows in figure order and columns in printed order."""
    from .skein import reduction_matrix
    rm = reduction_matrix(types)
    cols = printed_column_map(types)
    return [[rm.matrix[rm.classes.index(code)][j] for j in cols] for code in FIGURE_CLASSES[types]]


# -- pairing matrices for (w,b,w,b,w,b) ----------------------------------------------------
# Rows and columns of M, and rows of E, follow our canonical class order.  Column j < 5 of
# E is the planar pairing underlying class j and the last column is the crossing pairing;
# the labels below are our own pairing labels (blacks numbered clockwise from w1).

PRINTED_M = [[27, 9, 9, 3, 9, 24], [9, 27, 3, 9, 3, 24], [9, 3, 27, 9, 3, 24],
             [3, 9, 9, 27, 9, 24], [9, 3, 3, 9, 27, 24], [24, 24, 24, 24, 24, 72]]
PRINTED_E = [[27, 9, 9, 3, 9, 3], [9, 27, 3, 9, 3, 9], [9, 3, 27, 9, 3, 9],
             [3, 9, 9, 27, 9, 3], [9, 3, 3, 9, 27, 9], [24, 24, 24, 24, 24, 0]]
E_COLUMN_LABELS = ["321", "312", "231", "132", "123", "213"]


# -- printed polynomials ------------------------------------------------------------------
# Each polynomial is a list of (coefficient, ((row, column), ...)) with 1-based printed
# indices.  Comparisons are up to one global sign per boundary type.

POLY_4N = [  # (w,b,w,b)
    [(1, ((1, 1), (2, 2)))],
    [(-1, ((1, 2), (2, 1)))],
]

POLY_2BY3 = [  # (w,w,b,b)
    [(1, ((1, 2), (2, 1)))],
    [(1, ((1, 1), (2, 2))), (-1, ((1, 2), (2, 1)))],
]

POLY_BWWWW = [
    [(1, ((1, 2), (2, 2), (3, 1), (4, 2))), (-1, ((1, 2), (2, 2), (4, 1), (3, 2)))],
    [(1, ((3, 2), (4, 2), (1, 1), (2, 2))), (-1, ((3, 2), (4, 2), (2, 1), (1, 2)))],
    [(1, ((1, 2), (4, 2), (2, 1), (3, 2))), (-1, ((1, 2), (4, 2), (3, 1), (2, 2)))],
]


def _monomial(sign: int, sigma: str):
    return (sign, tuple((i + 1, int(ch)) for i, ch in enumerate(sigma)))


POLY_SIX_NODE = {
    "wbwbwb": [
        [_monomial(1, "123")],
        [_monomial(1, "312")],
        [_monomial(-1, "132"), _monomial(1, "231")],
        [_monomial(-1, "213"), _monomial(1, "231")],
        [_monomial(-1, "321"), _monomial(1, "231")],
        [_monomial(-1, "231")],
    ],
    "bbwbww": [
        [_monomial(1, "312"), _monomial(-1, "321")],
        [_monomial(1, "123"), _monomial(-1, "132"), _monomial(-1, "213"), _monomial(1, "231")],
        [_monomial(-1, "312")],
        [_monomial(-1, "123"), _monomial(1, "213")],
        [_monomial(-1, "123"), _monomial(1, "132")],
        [_monomial(1, "123")],
    ],
}


def eval_poly(poly, X, col_of=None) -> Fraction:
    """Evaluate a printed polynomial; ``col_of`` maps printed column numbers to 0-based columns of X."""
    col_of = col_of or (lambda j: j - 1)
    total = Fraction(0)
    for coef, mono in poly:
        term = Fraction(coef)
        for i, j in mono:
            term *= X[i - 1, col_of(j)]
        total += term
    return total


def printed_to_x_column(types: str):
    """Map printed black numbers to columns of X (blacks clockwise from the first white)."""
    blacks = node_indexing(types)[1]
    order = printed_black_order(types)
    return lambda j: blacks.index(order[j - 1])


def fixture_path(name: str):
    """Path of the shipped graph file for a fixture."""
    from importlib.resources import files
    return files("tripledimer") / "data" / f"{name}.graph"
