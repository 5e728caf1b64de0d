"""Webs as planar maps in a disk.

A :class:`Diagram` is a half-edge (dart) structure.  Vertices ``0..n-1`` are
the boundary nodes in counterclockwise order; other vertices are trivalent
(``'w'`` or ``'b'``) or 4-valent crossings (``'x'``).  Every dart carries the
orientation of its underlying web edge: ``tb[d]`` is true when moving along
``d`` heads toward the black end of the edge.  Vertex-free closed loops are
only counted.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import CircularPlanarGraph


class WebError(ValueError):
    pass


@dataclass
class Diagram:
    node_types: tuple[str, ...]
    kind: dict[int, str] = field(default_factory=dict)
    rot: dict[int, list[int]] = field(default_factory=dict)
    twin: dict[int, int] = field(default_factory=dict)
    origin: dict[int, int] = field(default_factory=dict)
    tb: dict[int, bool] = field(default_factory=dict)
    loops: int = 0
    _next_v: int = 0
    _next_d: int = 0

    @classmethod
    def empty(cls, node_types: Sequence[str]) -> "Diagram":
        d = cls(tuple(node_types))
        for i, t in enumerate(node_types):
            d.kind[i] = "N"
            d.rot[i] = []
        d._next_v = len(node_types)
        return d

    @property
    def n_nodes(self) -> int:
        return len(self.node_types)

    def copy(self) -> "Diagram":
        return Diagram(self.node_types, dict(self.kind), {v: list(r) for v, r in self.rot.items()},
                       dict(self.twin), dict(self.origin), dict(self.tb), self.loops, self._next_v, self._next_d)

    # -- construction -----------------------------------------------------
    def vtype(self, v: int) -> str:
        k = self.kind[v]
        return self.node_types[v] if k == "N" else k

    def add_vertex(self, kind: str) -> int:
        v = self._next_v
        self._next_v += 1
        self.kind[v] = kind
        self.rot[v] = []
        return v

    def new_dart(self, v: int, tb: bool) -> int:
        d = self._next_d
        self._next_d += 1
        self.origin[d] = v
        self.tb[d] = tb
        return d

    def connect(self, a: int, b: int) -> None:
        self.twin[a] = b
        self.twin[b] = a

    def remove_vertex(self, v: int) -> None:
        for d in self.rot.pop(v):
            del self.origin[d]
            del self.tb[d]
            self.twin.pop(d, None)
        del self.kind[v]

    def internal_vertices(self) -> list[int]:
        return [v for v, k in self.kind.items() if k != "N"]

    def crossings(self) -> list[int]:
        return [v for v, k in self.kind.items() if k == "x"]

    def n_trivalent(self) -> int:
        return sum(1 for k in self.kind.values() if k in ("w", "b"))

    def neighbor(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def check(self) -> None:
        """Raise :class:`WebError` on structural inconsistencies."""
        for v, k in self.kind.items():
            deg = len(self.rot[v])
            want = {"N": 1, "w": 3, "b": 3, "x": 4}[k]
            if deg != want:
                raise WebError(f"vertex {v} of kind {k} has degree {deg}")
            for d in self.rot[v]:
                if self.origin[d] != v:
                    raise WebError("rotation lists a dart with another origin")
                t = self.twin[d]
                if self.twin[t] != d or t == d:
                    raise WebError("twin map is not an involution")
                if self.tb[t] == self.tb[d]:
                    raise WebError("edge orientation flags disagree")
            t = self.vtype(v)
            if t in ("w", "b"):
                for d in self.rot[v]:
                    if self.tb[d] != (t == "w"):
                        raise WebError(f"dart orientation at {t} vertex {v} is wrong")
        for d, v in self.origin.items():
            u = self.neighbor(d)
            tv, tu = self.vtype(v), self.vtype(u)
            if tv in ("w", "b") and tu in ("w", "b") and tv == tu:
                raise WebError("edge joins two vertices of the same type")

    # -- faces ------------------------------------------------------------
    def next_in_face(self, d: int) -> int:
        t = self.twin[d]
        r = self.rot[self.origin[t]]
        return r[r.index(t) - 1]

    def faces(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for v in sorted(self.rot):
            for d in self.rot[v]:
                if d in seen:
                    continue
                f = []
                while d not in seen:
                    seen.add(d)
                    f.append(d)
                    d = self.next_in_face(d)
                out.append(f)
        return out

    def internal_faces(self) -> list[list[int]]:
        """Faces whose boundary walk avoids every node (they do not touch the disk boundary)."""
        return [f for f in self.faces() if all(self.kind[self.origin[d]] != "N" for d in f)]

    def node_components(self) -> tuple[set[int], list[set[int]]]:
        """Vertices reachable from the nodes, and the remaining closed components."""
        reach = set()
        queue = deque(v for v in self.kind if self.kind[v] == "N")
        reach.update(queue)
        while queue:
            v = queue.popleft()
            for d in self.rot[v]:
                u = self.neighbor(d)
                if u not in reach:
                    reach.add(u)
                    queue.append(u)
        rest = [v for v in self.kind if v not in reach]
        comps = []
        seen = set()
        for s in rest:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for d in self.rot[v]:
                    u = self.neighbor(d)
                    if u not in seen:
                        seen.add(u)
                        comp.add(u)
                        queue.append(u)
            comps.append(comp)
        return reach, comps

    def sub_diagram(self, verts: Iterable[int]) -> "Diagram":
        verts = set(verts)
        d = Diagram.empty(())
        d.node_types = ()
        d.kind = {v: self.kind[v] for v in verts}
        d.rot = {v: list(self.rot[v]) for v in verts}
        darts = [x for v in verts for x in self.rot[v]]
        d.twin = {x: self.twin[x] for x in darts}
        d.origin = {x: self.origin[x] for x in darts}
        d.tb = {x: self.tb[x] for x in darts}
        d._next_v, d._next_d = self._next_v, self._next_d
        return d

    # -- canonical form -------------------------------------------------
    def canonical(self) -> tuple[str, dict[int, int]]:
        """Canonical code (fixing every node) and the vertex labelling behind it.

        Components are traversed breadth-first from their smallest node,
        reading each rotation from the dart of first arrival.  Requires every
        component to contain a node.
        """
        n = self.n_nodes
        label: dict[int, int] = {}
        start: dict[int, int] = {}
        order: list[int] = []
        nxt = n
        for s in range(n):
            if s in label:
                continue
            label[s] = s
            start[s] = self.rot[s][0]
            order.append(s)
            queue = deque([s])
            while queue:
                v = queue.popleft()
                r = self.rot[v]
                i0 = r.index(start[v])
                for k in range(len(r)):
                    dd = r[(i0 + k) % len(r)]
                    t = self.twin[dd]
                    u = self.origin[t]
                    if u not in label:
                        if self.kind[u] == "N":
                            label[u] = u
                        else:
                            label[u] = nxt
                            nxt += 1
                        start[u] = t
                        order.append(u)
                        queue.append(u)
        if len(label) != len(self.kind):
            raise WebError("a component without nodes has no canonical form")
        parts = []
        for v in sorted(order, key=lambda x: label[x]):
            r = self.rot[v]
            i0 = r.index(start[v])
            items = []
            for k in range(len(r)):
                dd = r[(i0 + k) % len(r)]
                t = self.twin[dd]
                u = self.origin[t]
                ru = self.rot[u]
                off = (ru.index(t) - ru.index(start[u])) % len(ru)
                flag = ("+" if self.tb[dd] else "-") if self.kind[v] == "x" else ""
                items.append(f"{label[u]}.{off}{flag}")
            tag = self.node_types[v] if self.kind[v] == "N" else self.kind[v]
            parts.append(f"{tag}{label[v]}:" + ",".join(items))
        code = "|".join(parts)
        if self.loops:
            code += f"|L{self.loops}"
        return code, label

    def code(self) -> str:
        return self.canonical()[0]

    def adjacency_listing(self) -> str:
        """Human-readable adjacency listing in canonical labels."""
        _, label = self.canonical()
        lines = []
        for v in sorted(self.kind, key=lambda x: label[x]):
            tag = f"node {label[v]} ({self.node_types[v]})" if self.kind[v] == "N" else f"{self.kind[v]}{label[v]}"
            nbrs = " ".join(str(label[self.neighbor(d)]) for d in self.rot[v])
            lines.append(f"{tag}: {nbrs}")
        return "\n".join(lines)


# -- multiwebs ----------------------------------------------------------------

def check_multiweb(g: CircularPlanarGraph, m: Mapping[str, int]) -> None:
    ns = g.node_set
    for v in g.types:
        s = sum(m.get(e, 0) for e in g.rotation[v])
        want = 1 if v in ns else 3
        if s != want:
            raise WebError(f"multiweb has degree {s} at {v}, expected {want}")
    for e, k in m.items():
        if k not in (0, 1, 2, 3):
            raise WebError(f"edge {e} has multiplicity {k}")


def multiweb_weight(g: CircularPlanarGraph, m: Mapping[str, int]):
    from fractions import Fraction
    w = Fraction(1)
    for e, k in m.items():
        if k:
            w *= g.edges[e].weight ** k
    return w


def abstract_web(g: CircularPlanarGraph, m: Mapping[str, int]) -> Diagram:
    """Contract the 12-paths of a multiweb; drop tripled edges; count closed 12-paths as loops."""
    check_multiweb(g, m)
    ns = g.node_set
    node_pos = {v: i for i, v in enumerate(g.nodes)}
    d = Diagram.empty([g.types[v] for v in g.nodes])

    def ones(v):
        return [e for e in g.rotation[v] if m.get(e, 0) == 1]

    vid: dict[str, int] = {}
    for v in g.types:
        if v in ns:
            vid[v] = node_pos[v]
        elif len(ones(v)) == 3:
            vid[v] = d.add_vertex(g.types[v])
    dart_of: dict[tuple[str, str], int] = {}
    for v, i in vid.items():
        for e in ones(v):
            dart_of[(v, e)] = d.new_dart(i, g.types[v] == "w")
        d.rot[i] = [dart_of[(v, e)] for e in ones(v)]
    visited_path: set[str] = set()
    for (v, e), dart in dart_of.items():
        if dart in d.twin:
            continue
        prev, cur, edge = v, g.edges[e].other(v), e
        while cur not in vid:
            visited_path.add(cur)
            nxt = [f for f in g.rotation[cur] if f != edge and m.get(f, 0)]
            if len(nxt) != 1:
                raise WebError(f"vertex {cur} is neither trivalent nor on a 12-path")
            edge = nxt[0]
            prev, cur = cur, g.edges[edge].other(cur)
        d.connect(dart, dart_of[(cur, edge)])
    # closed 12-paths
    for v in g.types:
        if v in vid or v in visited_path:
            continue
        inc = [e for e in g.rotation[v] if m.get(e, 0)]
        if len(inc) == 2:
            d.loops += 1
            stack = [v]
            while stack:
                x = stack.pop()
                if x in visited_path:
                    continue
                visited_path.add(x)
                for e in g.rotation[x]:
                    if m.get(e, 0) in (1, 2):
                        u = g.edges[e].other(x)
                        if u not in visited_path:
                            stack.append(u)
    return d


# -- reducedness --------------------------------------------------------------

def is_reduced(w: Diagram) -> bool:
    if w.loops or w.crossings():
        return False
    _, closed = w.node_components()
    if closed:
        return False
    return all(len(f) not in (2, 4) for f in w.internal_faces())


def canonical_class(w: Diagram) -> str:
    if w.loops:
        raise WebError("web classes are defined for webs without free loops")
    return w.code()


# -- traces -------------------------------------------------------------------

def _local_sign(vtype: str, colors: Sequence[int]) -> int:
    ccw = (colors[1] - colors[0]) % 3 == 1 and (colors[2] - colors[1]) % 3 == 1
    s = 1 if ccw else -1
    return s if vtype == "b" else -s


def _coloring_problem(w: Diagram):
    """Variables are strands (edges joined straight through crossings)."""
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent.setdefault(parent[x], parent[x])
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for dd in w.origin:
        union(dd, w.twin[dd])
    for v, k in w.kind.items():
        if k == "x":
            r = w.rot[v]
            union(r[0], r[2])
            union(r[1], r[3])
    root_idx: dict[int, int] = {}
    for dd in w.origin:
        root_idx.setdefault(find(dd), len(root_idx))
    var_of = {dd: root_idx[find(dd)] for dd in w.origin}
    nvars = len(root_idx)
    verts = []
    for v, k in w.kind.items():
        if k in ("w", "b"):
            verts.append((k, [var_of[dd] for dd in w.rot[v]]))
    node_vars = [var_of[w.rot[i][0]] for i in range(w.n_nodes)]
    return nvars, verts, node_vars, var_of


def _enumerate_colorings(w: Diagram, fixed: Mapping[int, int]):
    """Yield ``(assignment, sign)`` over proper colorings extending ``fixed`` (var -> color)."""
    nvars, verts, _, _ = _coloring_problem(w)
    by_var: list[list[int]] = [[] for _ in range(nvars)]
    for k, (_, vs) in enumerate(verts):
        for x in vs:
            by_var[x].append(k)
    # order variables so that vertex constraints close early
    order: list[int] = []
    seen = set(fixed)
    adj = [set() for _ in range(nvars)]
    for _, vs in verts:
        for a in vs:
            adj[a].update(vs)
    for s in list(fixed) + list(range(nvars)):
        if s in seen and s not in fixed:
            continue
        queue = deque([s])
        if s not in fixed:
            seen.add(s)
            order.append(s)
        while queue:
            a = queue.popleft()
            for b in sorted(adj[a]):
                if b not in seen:
                    seen.add(b)
                    order.append(b)
                    queue.append(b)
    col = [0] * nvars
    for x, c in fixed.items():
        col[x] = c
    pos = {x: i for i, x in enumerate(order)}
    # a vertex is checked once its last variable is assigned
    check_at: list[list[int]] = [[] for _ in range(len(order) + 1)]
    for k, (_, vs) in enumerate(verts):
        last = max((pos[x] + 1 if x in pos else 0) for x in vs)
        check_at[last].append(k)

    def ok(k):
        a, b, c = (col[x] for x in verts[k][1])
        return a != b and b != c and a != c

    for k in check_at[0]:
        if not ok(k):
            return

    def rec(i):
        if i == len(order):
            s = 1
            for kind, vs in verts:
                s *= _local_sign(kind, [col[x] for x in vs])
            yield col, s
            return
        x = order[i]
        for c in (1, 2, 3):
            col[x] = c
            if all(ok(k) for k in check_at[i + 1]):
                yield from rec(i + 1)
        col[x] = 0

    yield from rec(0)


def trace(w: Diagram, colors: Sequence[int]) -> int:
    """Signed number of edge colorings with node ``i`` colored ``colors[i]``; each loop contributes 3."""
    _, _, node_vars, _ = _coloring_problem(w)
    fixed: dict[int, int] = {}
    for i, x in enumerate(node_vars):
        if fixed.get(x, colors[i]) != colors[i]:
            return 0
        fixed[x] = colors[i]
    total = sum(s for _, s in _enumerate_colorings(w, fixed))
    return total * 3 ** w.loops


def trace_vector(w: Diagram) -> dict[tuple[int, ...], int]:
    """Trace for every node coloring with nonzero value."""
    _, _, node_vars, _ = _coloring_problem(w)
    out: dict[tuple[int, ...], int] = {}
    for col, s in _enumerate_colorings(w, {}):
        key = tuple(col[x] for x in node_vars)
        out[key] = out.get(key, 0) + s
    f = 3 ** w.loops
    return {k: v * f for k, v in out.items() if v}


def closed_value(w: Diagram) -> int:
    """Trace of a diagram without nodes (a scalar)."""
    return sum(s for _, s in _enumerate_colorings(w, {})) * 3 ** w.loops


def reflect(w: Diagram) -> Diagram:
    """Mirror image: reverse every rotation and the node order."""
    n = w.n_nodes
    out = w.copy()
    out.node_types = tuple(w.node_types[(n - i) % n] for i in range(n)) if n else ()
    relabel = {i: (n - i) % n for i in range(n)}
    if n:
        kind, rot = {}, {}
        for v in w.kind:
            nv = relabel.get(v, v)
            kind[nv] = w.kind[v]
            rot[nv] = list(reversed(w.rot[v]))
        for dd, v in w.origin.items():
            out.origin[dd] = relabel.get(v, v)
        out.kind, out.rot = kind, rot
    else:
        out.rot = {v: list(reversed(r)) for v, r in w.rot.items()}
    return out


# -- small constructors ---------------------------------------------------------

def line_web() -> Diagram:
    d = Diagram.empty("wb")
    a, b = d.new_dart(0, True), d.new_dart(1, False)
    d.rot[0], d.rot[1] = [a], [b]
    d.connect(a, b)
    return d


def tripod_web() -> Diagram:
    d = Diagram.empty("www")
    c = d.add_vertex("b")
    for i in range(3):
        a, b = d.new_dart(i, True), d.new_dart(c, False)
        d.rot[i] = [a]
        d.rot[c].append(b)
        d.connect(a, b)
    return d


def web_from_edges(node_types: Sequence[str], internal: Mapping[int, str],
                   rotations: Mapping[int, Sequence[int]], loops: int = 0) -> Diagram:
    """Build a web from neighbor rotations.

    Vertices ``0..n-1`` are nodes; ``internal`` gives the type of the others;
    ``rotations[v]`` lists the neighbors of ``v`` counterclockwise (no parallel edges).
    """
    d = Diagram.empty(node_types)
    d.kind.update(internal)
    d._next_v = max([len(node_types) - 1, *internal]) + 1
    darts = {}
    for v, nbrs in rotations.items():
        t = d.vtype(v)
        d.rot[v] = []
        for u in nbrs:
            x = d.new_dart(v, t == "w")
            darts[(v, u)] = x
            d.rot[v].append(x)
    for (v, u), x in darts.items():
        d.twin[x] = darts[(u, v)]
    d.loops = loops
    d.check()
    return d


def strand_colors(w: Diagram, colors: Sequence[int]) -> dict[int, int]:
    """Color of each dart inherited from the node at the end of its strand (diagrams of 3-partitions)."""
    _, _, node_vars, var_of = _coloring_problem(w)
    by_var = {}
    for i, x in enumerate(node_vars):
        by_var[x] = colors[i]
    return {d: by_var.get(x, 0) for d, x in var_of.items()}


def nonmonochromatic_crossings(w: Diagram, colors: Sequence[int]) -> int:
    sc = strand_colors(w, colors)
    count = 0
    for x in w.crossings():
        r = w.rot[x]
        if sc[r[0]] != sc[r[1]]:
            count += 1
    return count


def crossbar_web(types: Sequence[str], bars: Sequence[int], start: int = 0) -> Diagram:
    """Parallel strands ``v_i -- v_{2n+1-i}`` (``v_1`` at position ``start``) with crossbars.

    ``bars`` lists crossbars from left to right; ``k`` joins strands ``k`` and
    ``k+1`` (1-based, strand 1 on top).  Crossbars must be interlaced, and the
    node types must be the ones forced by bipartiteness along the strands.
    """
    types = "".join(types)
    n2 = len(types)
    if n2 % 2:
        raise WebError("a crossbar web needs an even number of nodes")
    n = n2 // 2
    for k in bars:
        if not 1 <= k < n:
            raise WebError(f"crossbar {k} does not join two adjacent strands")
    for k in range(1, n):
        idx = [t for t, b in enumerate(bars) if b == k]
        for a, b in zip(idx, idx[1:]):
            between = bars[a + 1:b]
            for nb in (k - 1, k + 1):
                # a missing neighbor pair counts as zero crossbars
                if (between.count(nb) if 1 <= nb < n else 0) != 1:
                    raise WebError(f"crossbars on strands {k},{k + 1} are not interlaced with those on {nb},{nb + 1}")
    pos = lambda i: (start + i - 1) % n2          # node v_i, 1-based
    from fractions import Fraction as F
    L = len(bars) + 1
    P: dict = {}
    kinds: dict[int, str] = {}
    chains: dict[int, list[int]] = {}
    for i in range(1, n + 1):
        P[pos(i)] = (F(0), F(n - i))
        P[pos(n2 + 1 - i)] = (F(L), F(n - i))
        chains[i] = [pos(i)]
    nxt = n2
    bar_pairs = []
    for t, k in enumerate(bars):
        a, b = nxt, nxt + 1
        nxt += 2
        P[a] = (F(t + 1), F(n - k))
        P[b] = (F(t + 1), F(n - k - 1))
        chains[k].append(a)
        chains[k + 1].append(b)
        bar_pairs.append((a, b))
    for i in range(1, n + 1):
        chains[i].append(pos(n2 + 1 - i))
        # types alternate along each strand, starting from its left node
        t = "b" if types[pos(i)] == "w" else "w"
        for v in chains[i][1:-1]:
            kinds[v] = t
            t = "w" if t == "b" else "b"
        if t != types[pos(n2 + 1 - i)]:
            raise WebError(f"vertex types along strand {i} do not alternate up to its right node")
    segments = []

    def typ(v):
        return types[v] if v < n2 else kinds[v]

    for i in range(1, n + 1):
        for u, v in zip(chains[i], chains[i][1:]):
            segments.append((u, v) if typ(u) == "w" else (v, u))
    for a, b in bar_pairs:
        if typ(a) == typ(b):
            raise WebError("a crossbar joins two vertices of the same type")
        segments.append((a, b) if typ(a) == "w" else (b, a))
    P["kinds"] = kinds
    from .skein import draw_strands
    d = draw_strands(types, segments, P)
    return d


def tprime_web(n: int) -> Diagram:
    """Triangular honeycomb with 3n white nodes: the dual of a triangle of side n cut into unit triangles."""
    from fractions import Fraction as F
    from .skein import draw_strands

    def pt(i, j):
        return (F(2 * i + j), F(2 * j))

    def centroid(*ps):
        return (sum(p[0] for p in ps) / len(ps), sum(p[1] for p in ps) / len(ps))

    up = [(i, j) for j in range(n) for i in range(n - j)]
    down = [(i, j) for j in range(n - 1) for i in range(n - 1 - j)]
    P: dict = {}
    kinds: dict[int, str] = {}
    vid = {}
    nxt = 3 * n
    for u in up:
        vid[("u",) + u] = nxt
        kinds[nxt] = "b"
        i, j = u
        P[nxt] = centroid(pt(i, j), pt(i + 1, j), pt(i, j + 1))
        nxt += 1
    for dn in down:
        vid[("d",) + dn] = nxt
        kinds[nxt] = "w"
        i, j = dn
        P[nxt] = centroid(pt(i + 1, j), pt(i, j + 1), pt(i + 1, j + 1))
        nxt += 1
    segments = []
    for (i, j) in down:
        d = vid[("d", i, j)]
        for u in ((i, j), (i + 1, j), (i, j + 1)):
            segments.append((d, vid[("u",) + u]))
    # legs: bottom (left to right), right side (bottom to top), left side (top to bottom)
    node = 0
    for i in range(n):
        a, b = pt(i, 0), pt(i + 1, 0)
        P[node] = ((a[0] + b[0]) / 2, F(-1))
        segments.append((node, vid[("u", i, 0)]))
        node += 1
    for j in range(n):
        i = n - 1 - j
        a, b = pt(i + 1, j), pt(i, j + 1)
        m = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        P[node] = (m[0] + 1, m[1] + F(1, 2))
        segments.append((node, vid[("u", i, j)]))
        node += 1
    for j in range(n - 1, -1, -1):
        a, b = pt(0, j), pt(0, j + 1)
        m = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        P[node] = (m[0] - 1, m[1] + F(1, 2))
        segments.append((node, vid[("u", 0, j)]))
        node += 1
    P["kinds"] = kinds
    return draw_strands("w" * (3 * n), segments, P)


def hexagon_web() -> Diagram:
    """The order-1 triangular honeycomb: a hexagon with one leg at each corner, nodes w,b,w,b,w,b."""
    internal = {6 + k: ("b" if k % 2 == 0 else "w") for k in range(6)}
    rot = {}
    for k in range(6):
        rot[k] = [6 + k]
        h = 6 + k
        rot[h] = [k, 6 + (k + 1) % 6, 6 + (k - 1) % 6]
    return web_from_edges("wbwbwb", internal, rot)
