"""Kasteleyn signs, Kasteleyn matrices and the boundary measurement matrix."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graph import CircularPlanarGraph, DegenerateGraphError, find_matching_M
from .linalg import ExactMatrix, SingularMatrixError, det, schur_complement


class KasteleynSignError(ValueError):
    pass


def face_sign_target(length: int) -> int:
    """Required product of signs around a bounded face of the given length."""
    return -1 if (length // 2 + 1) % 2 else 1


def assign_signs(g: CircularPlanarGraph, normalize: bool = True) -> dict[str, int]:
    """Kasteleyn signs: a bounded face of length l carries (l/2 + 1) mod 2 minus signs.

    Signs on a spanning tree are set to +1; the remaining edges are fixed by
    peeling bounded faces off the dual tree, one free edge at a time.
    """
    signs: dict[str, int] = {}
    seen = set()
    for start in g.types:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in g.rotation[v]:
                u = g.edges[e].other(v)
                if u not in seen:
                    seen.add(u)
                    signs[e] = 1
                    queue.append(u)
    faces = g.bounded_faces()
    edge_faces: dict[str, list[int]] = {}
    for k, f in enumerate(faces):
        for e in f:
            edge_faces.setdefault(e, []).append(k)
    free = [sum(1 for e in f if e not in signs) for f in faces]
    queue = deque(k for k, n in enumerate(free) if n == 1)
    done = [False] * len(faces)
    while queue:
        k = queue.popleft()
        if done[k] or free[k] != 1:
            continue
        f = faces[k]
        e0 = next(e for e in f if e not in signs)
        prod = 1
        for e in f:
            if e != e0:
                prod *= signs[e]
        signs[e0] = face_sign_target(len(f)) * prod
        done[k] = True
        for j in edge_faces[e0]:
            if j != k:
                free[j] -= 1
                if free[j] == 1:
                    queue.append(j)
    for e in g.edges:
        signs.setdefault(e, 1)
    for f in faces:
        prod = 1
        for e in f:
            prod *= signs[e]
        if prod != face_sign_target(len(f)):
            raise KasteleynSignError("face constraints are inconsistent with the embedding")
    if normalize:
        signs = normalize_boundary_signs(g, signs)
    return signs


def gauge(g: CircularPlanarGraph, signs: Mapping[str, int], flips: Mapping[str, int]) -> dict[str, int]:
    """Apply vertex sign flips (a gauge transformation) to an edge sign function."""
    return {e: s * flips.get(g.edges[e].white, 1) * flips.get(g.edges[e].black, 1) for e, s in signs.items()}


def normalize_boundary_signs(g: CircularPlanarGraph, signs: Mapping[str, int]) -> dict[str, int]:
    """Gauge so that every edge of the outer cycle is +1 except possibly the edge
    just clockwise of the first white node.  Left unchanged if the outer walk is not a simple cycle."""
    orbits = g.outer_orbits()
    if len(orbits) != 1:
        return dict(signs)
    walk = g.face_orbits()[orbits[0]]
    verts = [u for _, u in walk]
    if len(set(verts)) != len(verts) or len(walk) < 2:
        return dict(signs)
    whites, _ = g.node_indexing()
    start = verts.index(whites[0]) if whites and whites[0] in verts else 0
    walk = walk[start:] + walk[:start]
    verts = [u for _, u in walk]
    flips = {verts[0]: 1}
    cur = dict(signs)
    # walk goes clockwise around the outer boundary: walk[0] is the edge just clockwise of w1
    L = len(walk)
    for k in range(L - 1, 0, -1):
        e = walk[k][0]
        v = verts[k]
        f = cur[e] * flips.get(verts[(k + 1) % L], 1)
        flips[v] = f
    return gauge(g, signs, flips)


def kasteleyn_matrix(g: CircularPlanarGraph, signs: Mapping[str, int], rows: Sequence[str],
                     cols: Sequence[str]) -> ExactMatrix:
    ri = {v: i for i, v in enumerate(rows)}
    ci = {v: j for j, v in enumerate(cols)}
    data = [[Fraction(0)] * len(cols) for _ in rows]
    for e in g.edges.values():
        if e.white in ri and e.black in ci:
            data[ri[e.white]][ci[e.black]] += signs[e.id] * e.weight
    return ExactMatrix(data, shape=(len(rows), len(cols)))


@dataclass
class KasteleynData:
    signs: dict[str, int]
    K: ExactMatrix
    rows: list[str]            # white vertices labelling rows of K
    cols: list[str]            # black vertices labelling columns of K
    X: ExactMatrix
    x_rows: list[str]          # white nodes in node-indexing order
    x_cols: list[str]          # black nodes in node-indexing order, then B_int_star
    delta: Fraction
    b_int_star: list[str]
    w_star: list[str]
    matching: dict[str, str]


def boundary_measurement(g: CircularPlanarGraph, signs: Mapping[str, int] | None = None,
                         matching=None) -> KasteleynData:
    """Maximal Schur reduction of the Kasteleyn matrix onto the nodes (plus ``B_int_star``)."""
    if signs is None:
        signs = assign_signs(g)
    if matching is None:
        matching = find_matching_M(g)
    m, w_star, b_star = matching
    whites, blacks = g.node_indexing()
    w_int = g.internal("w")
    b_rest = [b for b in g.internal("b") if b not in set(b_star)]
    rows = whites + w_int
    cols = blacks + list(b_star) + b_rest
    K = kasteleyn_matrix(g, signs, rows, cols)
    keep_c = list(range(len(blacks) + len(b_star)))
    try:
        X, delta = schur_complement(K, list(range(len(whites))), keep_c)
    except SingularMatrixError as exc:
        raise DegenerateGraphError("the eliminated block D is singular") from exc
    return KasteleynData(dict(signs), K, rows, cols, X, whites, blacks + list(b_star), delta,
                         list(b_star), list(w_star), dict(m))


def restricted_kasteleyn(g: CircularPlanarGraph, kd: KasteleynData, coloring: Mapping[str, int],
                         color: int) -> ExactMatrix:
    """Kasteleyn matrix of the graph with all nodes not of ``color`` removed."""
    ns = g.node_set
    rows = [i for i, v in enumerate(kd.rows) if v not in ns or coloring[v] == color]
    cols = [j for j, v in enumerate(kd.cols) if v not in ns or coloring[v] == color]
    if len(rows) != len(cols):
        raise ValueError(f"color {color}: {len(rows)} white vs {len(cols)} black vertices remain")
    return kd.K.submatrix(rows, cols)


def dimer_partition_function(g: CircularPlanarGraph, whites: Sequence[str], blacks: Sequence[str]) -> Fraction:
    """Weighted count of perfect matchings of the induced subgraph, by direct enumeration."""
    if len(whites) != len(blacks):
        return Fraction(0)
    bs = set(blacks)
    adj: dict[str, list[tuple[str, Fraction]]] = {w: [] for w in whites}
    for e in g.edges.values():
        if e.white in adj and e.black in bs:
            adj[e.white].append((e.black, e.weight))
    order = sorted(whites, key=lambda w: len(adj[w]))
    used: set[str] = set()

    def rec(i: int) -> Fraction:
        if i == len(order):
            return Fraction(1)
        total = Fraction(0)
        for b, wt in adj[order[i]]:
            if b not in used:
                used.add(b)
                total += wt * rec(i + 1)
                used.discard(b)
        return total

    return rec(0)


def entry_interpretation_check(g: CircularPlanarGraph, kd: KasteleynData, w: str, b: str) -> Fraction:
    """Check ``|X_wb| = Z(G_wb) / |Delta|`` by enumerating dimer covers; returns ``Z(G_wb)``."""
    ns = g.node_set
    keep_w = [v for v in kd.rows if v not in ns or v == w]
    keep_b = [v for v in kd.cols if (v not in ns and v not in kd.b_int_star) or v == b]
    z = dimer_partition_function(g, keep_w, keep_b)
    x = kd.X[kd.x_rows.index(w), kd.x_cols.index(b)]
    if abs(x) != z / abs(kd.delta):
        raise AssertionError(f"|X[{w},{b}]| = {abs(x)} but Z(G_wb)/|Delta| = {z / abs(kd.delta)}")
    return z


def det_K_square(kd: KasteleynData) -> Fraction:
    return det(kd.K)
