"""Skein calculus: crossing resolution, planar reduction and the reduction matrix.

A diagram with crossings is rewritten with

    crossing = smoothing - doubleY,

then planar reductions are applied (loop = 3, bigon = 2 x edge, square = sum of
its two parallel resolutions) until only reduced webs remain.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .partitions import ThreePartition, enumerate_partitions, node_indexing, trace_tau
from .webs import Diagram, WebError, closed_value, trace_vector

FormalSum = dict  # canonical code -> integer coefficient


class ReductionError(RuntimeError):
    pass


def add_into(acc: dict, other: dict, coef: int = 1) -> None:
    for k, v in other.items():
        s = acc.get(k, 0) + coef * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


# -- local moves ----------------------------------------------------------------

def _strand_pattern(d: Diagram, x: int) -> int:
    """Index i such that darts i, i+1 at the crossing head the same way."""
    r = d.rot[x]
    for i in range(4):
        if d.tb[r[i]] == d.tb[r[(i + 1) % 4]] and d.tb[r[(i + 2) % 4]] == d.tb[r[(i + 3) % 4]]:
            return i
    raise WebError(f"crossing {x} does not join two consistently oriented strands")


def _rewire(d: Diagram, darts: Sequence[int], partner: dict[int, int]) -> tuple[list[tuple[int, int]], int]:
    """Plan the joins when ``darts`` are cut out and reconnected in pairs by ``partner``.

    A dart whose twin is another cut dart continues through that dart's partner,
    so chains of cut edges collapse to one edge.  Chains that close up are free
    loops.  Returns the pairs of outside darts to connect and the number of loops.
    """
    here = set(darts)
    visited = set()
    joins = []
    for s in darts:
        if s in visited or d.twin[s] in here:
            continue
        visited.add(s)
        nxt = partner[s]
        visited.add(nxt)
        while d.twin[nxt] in here:
            t = d.twin[nxt]
            visited.add(t)
            nxt = partner[t]
            visited.add(nxt)
        joins.append((d.twin[s], d.twin[nxt]))
    rest = [s for s in darts if s not in visited]
    loops = 0
    while rest:
        s = rest[0]
        cur = s
        while True:
            rest.remove(cur)
            p = partner[cur]
            rest.remove(p)
            cur = d.twin[p]
            if cur == s:
                break
        loops += 1
    return joins, loops


def _cut_and_join(d: Diagram, verts: Sequence[int], darts: Sequence[int], partner: dict[int, int]) -> Diagram:
    out = d.copy()
    joins, loops = _rewire(out, darts, partner)
    for v in verts:
        out.remove_vertex(v)
    for a, b in joins:
        out.connect(a, b)
    out.loops += loops
    return out


def smoothing(d: Diagram, x: int) -> Diagram:
    """Replace a crossing by the planar smoothing that joins each strand end to an end of opposite orientation."""
    r = d.rot[x]
    i = _strand_pattern(d, x)
    # pattern (same, same, other, other) from i: join i+1 with i+2 and i+3 with i
    partner = {}
    for a, b in ((r[(i + 1) % 4], r[(i + 2) % 4]), (r[(i + 3) % 4], r[i])):
        partner[a], partner[b] = b, a
    return _cut_and_join(d, [x], list(r), partner)


def double_y(d: Diagram, x: int) -> Diagram:
    """Replace a crossing by a black-white pair of trivalent vertices."""
    out = d.copy()
    r = list(out.rot[x])
    i = _strand_pattern(out, x)
    if out.tb[r[i]]:
        i = (i + 2) % 4
    # r[i], r[i+1] head toward white ends: they attach to a new black vertex
    beta = out.add_vertex("b")
    alpha = out.add_vertex("w")
    eb, ea = out.new_dart(beta, False), out.new_dart(alpha, True)
    for k, v in ((0, beta), (1, beta), (2, alpha), (3, alpha)):
        out.origin[r[(i + k) % 4]] = v
    out.rot[beta] = [r[i], r[(i + 1) % 4], eb]
    out.rot[alpha] = [r[(i + 2) % 4], r[(i + 3) % 4], ea]
    out.connect(eb, ea)
    del out.rot[x]
    del out.kind[x]
    return out


def resolve_crossing(d: Diagram, x: int) -> list[tuple[int, Diagram]]:
    if d.kind.get(x) != "x":
        raise WebError(f"vertex {x} is not a crossing")
    return [(1, smoothing(d, x)), (-1, double_y(d, x))]


def remove_bigon(d: Diagram, face: Sequence[int]) -> Diagram:
    """Collapse a bigon to a single edge (the caller supplies the factor 2)."""
    d0, d1 = face
    v0, v1 = d.origin[d0], d.origin[d1]
    l0 = next(z for z in d.rot[v0] if z not in (d0, d.twin[d1]))
    l1 = next(z for z in d.rot[v1] if z not in (d1, d.twin[d0]))
    # when l0 and l1 are one edge the bigon was a theta graph and leaves a loop
    return _cut_and_join(d, [v0, v1], [l0, l1], {l0: l1, l1: l0})


def square_resolutions(d: Diagram, face: Sequence[int]) -> list[Diagram]:
    verts = [d.origin[z] for z in face]
    legs = []
    for k, v in enumerate(verts):
        on_face = (face[k], d.twin[face[k - 1]])
        legs.append(next(z for z in d.rot[v] if z not in on_face))
    outs = []
    for shift in (0, 1):
        partner = {}
        for k in (shift, shift + 2):
            a, b = legs[k % 4], legs[(k + 1) % 4]
            partner[a], partner[b] = b, a
        outs.append(_cut_and_join(d, verts, legs, partner))
    return outs


def _planar_moves(d: Diagram, label: dict[int, int]):
    """Reducible internal faces whose vertices are all trivalent, smallest first."""
    cands = []
    for f in d.internal_faces():
        if len(f) not in (2, 4):
            continue
        verts = [d.origin[z] for z in f]
        if any(d.kind[v] not in ("w", "b") for v in verts) or len(set(verts)) != len(verts):
            continue
        cands.append(((len(f), sorted(label[v] for v in verts)), f))
    cands.sort(key=lambda c: c[0])
    return [f for _, f in cands]


def _apply_face(d: Diagram, f) -> list[tuple[int, Diagram]]:
    if len(f) == 2:
        return [(2, remove_bigon(d, f))]
    return [(1, s) for s in square_resolutions(d, f)]


def _strip_scalars(d: Diagram) -> tuple[int, Diagram]:
    """Remove free loops and closed components, returning their product of traces."""
    scalar = 3 ** d.loops
    d = d.copy()
    d.loops = 0
    _, closed = d.node_components()
    for comp in closed:
        scalar *= closed_value(d.sub_diagram(comp))
        for v in comp:
            d.remove_vertex(v)
    return scalar, d


class Reducer:
    """Memoized reduction of diagrams to reduced web classes.

    ``reps`` keeps one representative diagram per class code encountered.
    """

    def __init__(self, max_steps: int = 10 ** 7):
        self.memo: dict[str, dict] = {}
        self.reps: dict[str, Diagram] = {}
        self.max_steps = max_steps
        self.steps = 0

    def reduce(self, d: Diagram) -> FormalSum:
        scalar, d = _strip_scalars(d)
        if scalar == 0:
            return {}
        code, label = d.canonical()
        if code not in self.memo:
            self.memo[code] = self._reduce_stripped(d, label, code)
        return {k: scalar * v for k, v in self.memo[code].items()}

    def _children(self, d: Diagram, label) -> list[tuple[int, Diagram]] | None:
        self.steps += 1
        if self.steps > self.max_steps:
            raise ReductionError("reduction step limit exceeded")
        faces = _planar_moves(d, label)
        if faces:
            return _apply_face(d, faces[0])
        xs = d.crossings()
        if xs:
            x = min(xs, key=lambda v: label[v])
            return resolve_crossing(d, x)
        for f in d.internal_faces():
            if len(f) in (2, 4):
                raise ReductionError("a reducible face could not be reduced")
        return None

    def _reduce_stripped(self, d: Diagram, label, code: str) -> FormalSum:
        kids = self._children(d, label)
        if kids is None:
            self.reps.setdefault(code, d)
            return {code: 1}
        acc: dict = {}
        for coef, child in kids:
            add_into(acc, self.reduce(child), coef)
        return acc

    def reduce_random(self, d: Diagram, rng: random.Random) -> FormalSum:
        """Unmemoized reduction choosing every move at random (for confluence checks)."""
        scalar, d = _strip_scalars(d)
        if scalar == 0:
            return {}
        moves: list = [("face", f) for f in d.internal_faces() if len(f) in (2, 4)
                       and all(d.kind[d.origin[z]] in ("w", "b") for z in f)
                       and len({d.origin[z] for z in f}) == len(f)]
        moves += [("x", x) for x in d.crossings()]
        if not moves:
            code = d.code()
            self.reps.setdefault(code, d)
            return {code: scalar}
        kind, m = rng.choice(moves)
        kids = _apply_face(d, m) if kind == "face" else resolve_crossing(d, m)
        acc: dict = {}
        for coef, child in kids:
            add_into(acc, self.reduce_random(child, rng), coef * scalar)
        return acc


_default = Reducer()


def default_reducer() -> Reducer:
    return _default


def planar_reduce(w: Diagram, reducer: Reducer | None = None) -> FormalSum:
    if w.crossings():
        raise WebError("planar_reduce needs a diagram without crossings")
    return (reducer or _default).reduce(w)


def reduce_to_classes(d: Diagram, reducer: Reducer | None = None, rng: random.Random | None = None) -> FormalSum:
    r = reducer or _default
    if rng is not None:
        return r.reduce_random(d, rng)
    return r.reduce(d)


def representative(code: str, reducer: Reducer | None = None) -> Diagram:
    return (reducer or _default).reps[code]


# -- drawing 3-partitions ---------------------------------------------------------

def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _angle_cmp(u, v):
    def half(p):
        x, y = p
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    c = _cross(u[0], u[1], v[0], v[1])
    return -1 if c > 0 else (1 if c < 0 else 0)


def node_points(n: int, attempt: int = 0) -> list[tuple[Fraction, Fraction]]:
    """Nodes in convex position, counterclockwise, with exact coordinates.

    Later attempts jitter the abscissae to break accidental concurrences of chords.
    """
    xs = [Fraction(i) + Fraction(attempt * ((7 * i * i + 3 * i) % 11), 53) for i in range(n)]
    return [(x, x * x) for x in xs]


class DegenerateDrawing(Exception):
    pass


def draw_strands(node_types: Sequence[str], segments: Sequence[tuple], points: dict) -> Diagram:
    """Diagram from straight segments ``(start, end)``; each runs from its white end to its black end.

    ``points`` maps vertex ids (nodes ``0..n-1`` and extra trivalent vertices) to
    coordinates; ``'b'``/``'w'`` vertices other than nodes are listed in
    ``points['kinds']``.  Raises :class:`DegenerateDrawing` on non-generic input.
    """
    kinds = points.get("kinds", {})
    d = Diagram.empty(node_types)
    d._next_v = max([len(node_types) - 1, *kinds]) + 1
    for v, k in kinds.items():
        d.kind[v] = k
        d.rot[v] = []
    P = {v: p for v, p in points.items() if v != "kinds"}
    used = {v for seg in segments for v in seg}
    if len({P[v] for v in used}) != len(used):
        raise DegenerateDrawing("two vertices at the same point")
    cuts: list[list[tuple[Fraction, int]]] = [[] for _ in segments]
    for i in range(len(segments)):
        a, b = segments[i]
        pa, pb = P[a], P[b]
        for j in range(i + 1, len(segments)):
            c, e = segments[j]
            pc, pe = P[c], P[e]
            rx, ry = pb[0] - pa[0], pb[1] - pa[1]
            sx, sy = pe[0] - pc[0], pe[1] - pc[1]
            den = _cross(rx, ry, sx, sy)
            qx, qy = pc[0] - pa[0], pc[1] - pa[1]
            shared = {a, b} & {c, e}
            if den == 0:
                if _cross(qx, qy, rx, ry) == 0:
                    # collinear: overlapping unless they only meet at an end going opposite ways
                    if shared:
                        v = shared.pop()
                        o1 = b if v == a else a
                        o2 = e if v == c else c
                        ux, uy = P[o1][0] - P[v][0], P[o1][1] - P[v][1]
                        wx, wy = P[o2][0] - P[v][0], P[o2][1] - P[v][1]
                        if ux * wx + uy * wy > 0:
                            raise DegenerateDrawing("overlapping segments")
                    else:
                        # disjoint collinear segments are harmless
                        rr = rx * rx + ry * ry
                        t0 = (qx * rx + qy * ry) / rr
                        t1 = ((pe[0] - pa[0]) * rx + (pe[1] - pa[1]) * ry) / rr
                        if max(t0, t1) >= 0 and min(t0, t1) <= 1:
                            raise DegenerateDrawing("collinear segments")
                continue
            t = _cross(qx, qy, sx, sy) / den
            u = _cross(qx, qy, rx, ry) / den
            if shared:
                if 0 < t < 1 and 0 < u < 1:
                    raise DegenerateDrawing("segments with a common end cross")
                continue
            if 0 < t < 1 and 0 < u < 1:
                x = d.add_vertex("x")
                cuts[i].append((t, x))
                cuts[j].append((u, x))
            elif 0 <= t <= 1 and 0 <= u <= 1:
                raise DegenerateDrawing("a segment passes through a vertex")
    for cs in cuts:
        ts = [t for t, _ in cs]
        if len(set(ts)) != len(ts):
            raise DegenerateDrawing("three segments through one point")
    crossing_pt = {}
    for k, cs in enumerate(cuts):
        a, b = segments[k]
        for t, x in cs:
            crossing_pt[x] = (P[a][0] + t * (P[b][0] - P[a][0]), P[a][1] + t * (P[b][1] - P[a][1]))
    allp = dict(P)
    allp.update(crossing_pt)
    out_dirs: dict[int, list[tuple[tuple, int]]] = {v: [] for v in d.kind}
    for k, (a, b) in enumerate(segments):
        chain = [a] + [x for _, x in sorted(cuts[k])] + [b]
        for u, v in zip(chain, chain[1:]):
            du = d.new_dart(u, True)
            dv = d.new_dart(v, False)
            d.connect(du, dv)
            out_dirs[u].append(((allp[v][0] - allp[u][0], allp[v][1] - allp[u][1]), du))
            out_dirs[v].append(((allp[u][0] - allp[v][0], allp[u][1] - allp[v][1]), dv))
    for v, lst in out_dirs.items():
        lst.sort(key=functools.cmp_to_key(lambda p, q: _angle_cmp(p[0], q[0])))
        d.rot[v] = [z for _, z in lst]
    for v in [v for v, k in d.kind.items() if k == "v"]:
        # bend point: join the edge arriving from the white side to the one leaving it
        if len(d.rot[v]) != 2:
            raise DegenerateDrawing(f"bend point {v} is not on exactly one strand")
        inc, out = sorted(d.rot[v], key=lambda z: d.tb[z])
        if d.tb[inc] or not d.tb[out]:
            raise DegenerateDrawing(f"strand through bend point {v} is not oriented consistently")
        a, b = d.twin[inc], d.twin[out]
        d.remove_vertex(v)
        d.connect(a, b)
    d.check()
    return d


def draw_polylines(node_types: Sequence[str], paths: Sequence[Sequence], points: dict) -> Diagram:
    """Diagram from polyline strands, each listed from its white end to its black end.

    Interior points of a path are bends; ``points['kinds']`` gives the types of
    trivalent vertices as in :func:`draw_strands`.
    """
    pts = dict(points)
    kinds = dict(points.get("kinds", {}))
    segments = []
    for path in paths:
        for v in path[1:-1]:
            kinds.setdefault(v, "v")
        segments += list(zip(path, path[1:]))
    pts["kinds"] = kinds
    return draw_strands(node_types, segments, pts)


def partition_diagram(t: ThreePartition, attempt: int = 0) -> Diagram:
    """Straight-line drawing of a 3-partition: chords for pairs, tripods for triples."""
    n = len(t.types)
    pts = node_points(n, attempt)
    P: dict = {i: pts[i] for i in range(n)}
    kinds = {}
    segments = []
    for w, b in t.pairs:
        segments.append((w, b))
    for k, tr in enumerate(t.triples):
        c = n + k
        kinds[c] = "b"
        ws = [Fraction(1), Fraction(1) + Fraction(attempt * (k + 1), 31), Fraction(1) + Fraction(2 * attempt, 37 + k)]
        tot = sum(ws)
        P[c] = (sum(wt * pts[v][0] for wt, v in zip(ws, tr)) / tot,
                sum(wt * pts[v][1] for wt, v in zip(ws, tr)) / tot)
        for v in tr:
            segments.append((v, c))
    P["kinds"] = kinds
    try:
        return draw_strands(t.types, segments, P)
    except DegenerateDrawing:
        if attempt > 50:
            raise
        return partition_diagram(t, attempt + 1)


# -- reduction matrix ---------------------------------------------------------------

@dataclass
class ReductionMatrix:
    types: str
    classes: list[str]
    partitions: list[ThreePartition]
    matrix: list[list[int]]
    reducer: Reducer

    def column(self, j: int) -> dict[str, int]:
        return {c: self.matrix[i][j] for i, c in enumerate(self.classes) if self.matrix[i][j]}

    def representative(self, code: str) -> Diagram:
        return self.reducer.reps[code]


@functools.lru_cache(maxsize=64)
def _reduction_matrix_cached(types: str) -> ReductionMatrix:
    red = Reducer()
    parts = enumerate_partitions(types)
    cols = [red.reduce(partition_diagram(t)) for t in parts]
    classes = sorted({c for col in cols for c in col})
    M = [[col.get(c, 0) for col in cols] for c in classes]
    return ReductionMatrix(types, classes, parts, M, red)


def reduction_matrix(types: Sequence[str]) -> ReductionMatrix:
    return _reduction_matrix_cached("".join(types))


# -- pairing matrices -----------------------------------------------------------------

def all_colorings(n: int) -> Iterable[tuple[int, ...]]:
    return product((1, 2, 3), repeat=n)


def pairing_matrices(types: Sequence[str]) -> tuple[list[list[int]], list[list[int]], ReductionMatrix]:
    """Web pairing matrix M (classes x classes) and extended matrix E (classes x partitions).

    Gluing a web to the mirror image of another along the nodes gives a closed
    web whose trace is the sum over node colorings of the product of traces,
    the mirror contributing a factor -1 per trivalent vertex.
    """
    rm = reduction_matrix(types)
    reps = [rm.representative(c) for c in rm.classes]
    tv = [trace_vector(r) for r in reps]
    nint = [r.n_trivalent() for r in reps]
    M = [[sum(v * tv[j].get(c, 0) for c, v in tv[i].items()) * (-1) ** nint[j]
          for j in range(len(reps))] for i in range(len(reps))]
    n = len(types)
    cols = list(all_colorings(n))
    E = []
    for i in range(len(reps)):
        row = []
        for t in rm.partitions:
            s = sum(tv[i].get(c, 0) * trace_tau(t, c) for c in cols) * (-1) ** len(t.triples)
            row.append(s)
        E.append(row)
    return M, E, rm


# -- signs of node colorings ----------------------------------------------------------------

def epsilon_c(types: Sequence[str], colors: Sequence[int]) -> int:
    """Common sign of all colorings of planar webs with node colors ``colors``.

    Computed as ``(-1)^(M+T)`` on the drawing of any 3-partition compatible with
    the colors: M counts crossings of differently colored strands, T triples
    colored clockwise.  Returns 0 when no 3-partition is compatible.
    """
    from .webs import nonmonochromatic_crossings
    for t in enumerate_partitions("".join(types)):
        tr = trace_tau(t, colors)
        if tr:
            m = nonmonochromatic_crossings(partition_diagram(t), colors)
            return tr * (-1) ** m
    return 0
