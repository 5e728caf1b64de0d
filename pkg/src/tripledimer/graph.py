"""Circular planar bipartite graphs.

A graph is a weighted bipartite planar map given by a rotation system (the
counterclockwise order of edges around each vertex) together with the
counterclockwise circular order of its boundary nodes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .linalg import format_rational, parse_rational, to_rational

FORMAT_HEADER = "tripledimer-graph 1"


class GraphFormatError(ValueError):
    pass


class DegenerateGraphError(ValueError):
    """The graph lacks one of the partial matchings the construction needs."""


@dataclass(frozen=True)
class Edge:
    id: str
    white: str
    black: str
    weight: Fraction

    def other(self, v: str) -> str:
        return self.black if v == self.white else self.white


@dataclass
class CircularPlanarGraph:
    types: dict[str, str]                    # vertex -> 'w' | 'b'
    nodes: list[str]                         # boundary nodes, counterclockwise
    edges: dict[str, Edge]                   # in edge-id order
    rotation: dict[str, list[str]]           # vertex -> incident edge ids, counterclockwise
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    # -- basic sets -------------------------------------------------------
    @property
    def vertices(self) -> list[str]:
        return list(self.types)

    @property
    def node_set(self) -> frozenset[str]:
        return frozenset(self.nodes)

    def is_node(self, v: str) -> bool:
        return v in self.node_set

    def white_nodes(self) -> list[str]:
        return [v for v in self.nodes if self.types[v] == "w"]

    def black_nodes(self) -> list[str]:
        return [v for v in self.nodes if self.types[v] == "b"]

    def internal(self, t: str) -> list[str]:
        ns = self.node_set
        return [v for v, tv in self.types.items() if tv == t and v not in ns]

    @property
    def type_vector(self) -> str:
        return "".join(self.types[v] for v in self.nodes)

    @property
    def n_triples(self) -> int:
        return (len(self.white_nodes()) - len(self.black_nodes())) // 3

    def vertex_index(self, v: str) -> int:
        idx = self._cache.get("vindex")
        if idx is None:
            idx = self._cache["vindex"] = {u: i for i, u in enumerate(self.types)}
        return idx[v]

    def neighbors(self, v: str) -> list[str]:
        return [self.edges[e].other(v) for e in self.rotation[v]]

    def with_weights(self, weights: Mapping[str, object]) -> "CircularPlanarGraph":
        edges = {e: Edge(ed.id, ed.white, ed.black, to_rational(weights.get(e, ed.weight)))
                 for e, ed in self.edges.items()}
        return CircularPlanarGraph(dict(self.types), list(self.nodes), edges,
                                   {v: list(r) for v, r in self.rotation.items()})

    def with_nodes(self, nodes: Sequence[str]) -> "CircularPlanarGraph":
        return CircularPlanarGraph(dict(self.types), list(nodes), dict(self.edges),
                                   {v: list(r) for v, r in self.rotation.items()})

    # -- node indexing ----------------------------------------------------
    def node_indexing(self) -> tuple[list[str], list[str]]:
        """White nodes counterclockwise from the first white node ``w1``;
        black nodes clockwise, starting with the first black node clockwise of ``w1``."""
        if not self.nodes:
            return [], []
        whites = self.white_nodes()
        if not whites:
            blacks = self.black_nodes()
            return [], blacks[::-1]
        start = self.nodes.index(whites[0])
        n = len(self.nodes)
        blacks = [self.nodes[(start - k) % n] for k in range(1, n + 1)]
        return whites, [v for v in blacks if self.types[v] == "b"]

    # -- faces ------------------------------------------------------------
    def _next_dart(self, dart: tuple[str, str]) -> tuple[str, str]:
        e, u = dart
        v = self.edges[e].other(u)
        rot = self.rotation[v]
        i = rot.index(e)
        e2 = rot[i - 1]
        return e2, v

    def face_orbits(self) -> list[list[tuple[str, str]]]:
        """All face boundary walks; each dart is ``(edge, origin)`` and faces keep the face on the left."""
        if "orbits" in self._cache:
            return self._cache["orbits"]
        seen = set()
        orbits = []
        for e, ed in self.edges.items():
            for u in (ed.white, ed.black):
                d = (e, u)
                if d in seen:
                    continue
                orbit = []
                while d not in seen:
                    seen.add(d)
                    orbit.append(d)
                    d = self._next_dart(d)
                orbits.append(orbit)
        self._cache["orbits"] = orbits
        return orbits

    def components(self) -> list[set[str]]:
        G = nx.Graph()
        G.add_nodes_from(self.types)
        G.add_edges_from((ed.white, ed.black) for ed in self.edges.values())
        return [set(c) for c in nx.connected_components(G)]

    def outer_orbits(self) -> list[int]:
        """Indices (into :meth:`face_orbits`) of the outer face walk of each component."""
        if "outer" in self._cache:
            return self._cache["outer"]
        orbits = self.face_orbits()
        result = []
        for comp in self.components():
            comp_nodes = [v for v in self.nodes if v in comp]
            if not comp_nodes:
                raise GraphFormatError("component without boundary nodes")
            best = None
            for k, orb in enumerate(orbits):
                if orb[0][1] not in comp:
                    continue
                verts = [u for _, u in orb]
                if not set(comp_nodes) <= set(verts):
                    continue
                if not _appears_in_cyclic_order(verts, comp_nodes[::-1]):
                    continue
                if best is None or len(orb) > len(orbits[best]):
                    best = k
            if best is None:
                if len(comp) == 1:
                    continue
                raise GraphFormatError("nodes are not on a common outer face in the stated order")
            result.append(best)
        self._cache["outer"] = result
        return result

    def bounded_faces(self) -> list[list[str]]:
        """Bounded faces as cyclic sequences of edge ids."""
        outer = set(self.outer_orbits())
        return [[e for e, _ in orb] for k, orb in enumerate(self.face_orbits()) if k not in outer]

    def outer_walk(self) -> list[tuple[str, str]]:
        walk = []
        for k in self.outer_orbits():
            walk.extend(self.face_orbits()[k])
        return walk


def _appears_in_cyclic_order(seq: list[str], target: list[str]) -> bool:
    """True if ``seq`` (a walk, possibly with repeats) visits ``target`` in its cyclic order."""
    if len(target) <= 2:
        return True
    pos = set(target)
    visits = [v for v in seq if v in pos]
    # a walk may revisit cut vertices; accept if some cyclic reading order matches
    doubled = visits + visits
    for start in range(len(visits)):
        if doubled[start] != target[0]:
            continue
        k = 0
        for v in doubled[start:start + len(visits)]:
            if k < len(target) and v == target[k]:
                k += 1
        if k == len(target):
            return True
    return False


# -- construction -------------------------------------------------------------

def from_embedding(positions: Mapping[str, tuple[float, float]], types: Mapping[str, str],
                   edges: Iterable[tuple], nodes: Sequence[str]) -> CircularPlanarGraph:
    """Build a graph from a straight-line drawing.

    ``edges`` holds ``(u, v)`` or ``(u, v, weight)`` or ``(id, u, v, weight)`` tuples.
    The rotation at each vertex is read off the drawing by angle.
    """
    emap: dict[str, Edge] = {}
    for k, item in enumerate(edges):
        if len(item) == 4:
            eid, u, v, w = item
        elif len(item) == 3:
            (u, v, w), eid = item, f"e{k + 1}"
        else:
            (u, v), w, eid = item, 1, f"e{k + 1}"
        if types[u] == types[v]:
            raise GraphFormatError(f"edge {eid} joins two vertices of type {types[u]}")
        white, black = (u, v) if types[u] == "w" else (v, u)
        emap[eid] = Edge(eid, white, black, to_rational(w))
    rotation: dict[str, list[str]] = {v: [] for v in types}
    for e in emap.values():
        rotation[e.white].append(e.id)
        rotation[e.black].append(e.id)
    for v, inc in rotation.items():
        x0, y0 = positions[v]

        def angle(eid, v=v, x0=x0, y0=y0):
            x1, y1 = positions[emap[eid].other(v)]
            return math.atan2(y1 - y0, x1 - x0)

        inc.sort(key=angle)
    return CircularPlanarGraph(dict(types), list(nodes), emap, rotation)


# -- validation ---------------------------------------------------------------

def validate(g: CircularPlanarGraph) -> list[str]:
    """Return a list of human-readable violations (empty when the graph is valid)."""
    problems = []
    for e in g.edges.values():
        if g.types.get(e.white) != "w" or g.types.get(e.black) != "b":
            problems.append(f"edge {e.id} is not white-black")
        if e.weight <= 0:
            problems.append(f"edge {e.id} has non-positive weight {format_rational(e.weight)}")
    for v in g.types:
        inc = [e for e in g.edges.values() if v in (e.white, e.black)]
        rot = g.rotation.get(v, [])
        if sorted(rot) != sorted(e.id for e in inc) or len(set(rot)) != len(rot):
            problems.append(f"rotation at {v} does not list its incident edges exactly once")
    if len(set(g.nodes)) != len(g.nodes) or not set(g.nodes) <= set(g.types):
        problems.append("node list has repeats or unknown vertices")
    if problems:
        return problems
    try:
        orbits = g.face_orbits()
        comps = g.components()
        for comp in comps:
            V = len(comp)
            E = sum(1 for e in g.edges.values() if e.white in comp)
            F = sum(1 for orb in orbits if orb and orb[0][1] in comp)
            if V > 1 and V - E + F != 2:
                problems.append(f"rotation system is not planar on a component (V-E+F={V - E + F})")
        g.outer_orbits()
    except GraphFormatError as exc:
        problems.append(str(exc))
    nw, nb = len(g.white_nodes()), len(g.black_nodes())
    if nw < nb:
        problems.append(f"fewer white nodes ({nw}) than black nodes ({nb}); swap types")
    bi, wi = len(g.internal("b")), len(g.internal("w"))
    if 3 * (bi - wi) != nw - nb:
        problems.append(f"balance violated: 3(|B_int|-|W_int|) = {3 * (bi - wi)} but |W_nodes|-|B_nodes| = {nw - nb}")
    return problems


# -- matchings ----------------------------------------------------------------

def _perfect_matching(g: CircularPlanarGraph, whites: Sequence[str], blacks: Sequence[str],
                      extra: Iterable[tuple[str, str]] = ()) -> dict[str, str] | None:
    if len(whites) != len(blacks):
        return None
    ws, bs = set(whites), set(blacks)
    G = nx.Graph()
    G.add_nodes_from(("w", v) for v in whites)
    G.add_nodes_from(("b", v) for v in blacks)
    for e in g.edges.values():
        if e.white in ws and e.black in bs:
            G.add_edge(("w", e.white), ("b", e.black))
    for w, b in extra:
        G.add_edge(("w", w), ("b", b))
    top = [("w", v) for v in whites]
    m = nx.bipartite.hopcroft_karp_matching(G, top_nodes=top)
    if len([k for k in m if k[0] == "w"]) != len(whites):
        return None
    return {w[1]: m[w][1] for w in top}


def find_matching_M(g: CircularPlanarGraph) -> tuple[dict[str, str], list[str], list[str]]:
    """Partial matching covering every internal vertex and no black node.

    Returns ``(matching white->black, W_star, B_int_star)``; ``W_star`` is in
    node-indexing order, ``B_int_star`` in vertex-id order.
    """
    w_int, b_int = g.internal("w"), g.internal("b")
    w_nodes = g.white_nodes()
    surplus = len(b_int) - len(w_int)
    if surplus < 0 or surplus > len(w_nodes):
        raise DegenerateGraphError("no partial matching M: internal vertex counts are incompatible")
    dummies = [f"__dummy{k}" for k in range(len(w_nodes) - surplus)]
    extra = [(w, d) for d in dummies for w in w_nodes]
    m = _perfect_matching(g, w_int + w_nodes, b_int + dummies, extra)
    if m is None:
        raise DegenerateGraphError("no partial matching covering all internal vertices and no black node")
    matching = {w: b for w, b in m.items() if not b.startswith("__dummy")}
    whites_order, _ = g.node_indexing()
    w_star = [w for w in whites_order if w in matching]
    b_star = sorted((matching[w] for w in w_star), key=g.vertex_index)
    return matching, w_star, b_star


def external_candidates(g: CircularPlanarGraph, w: str) -> list[str]:
    """White vertices on the external faces adjacent to node ``w``, nearest first."""
    walk = [u for _, u in g.outer_walk()]
    ns = g.node_set
    out = []
    for i, u in enumerate(walk):
        if u != w:
            continue
        for step in (-1, 1):
            j = i
            while True:
                j = (j + step) % len(walk)
                x = walk[j]
                if x == w:
                    break
                if g.types[x] == "w" and x not in out:
                    out.append(x)
                if x in ns:
                    break
    return out


def find_matching_Mprime(g: CircularPlanarGraph, w_star: Sequence[str]) -> tuple[dict[str, str], list[str]]:
    """Partial dimer cover missing exactly ``W_star`` plus one nearby white vertex per element."""
    cands = [[x for x in external_candidates(g, w) if x not in w_star] for w in w_star]
    blacks = list(g.internal("b")) + g.black_nodes()

    def search(k, chosen):
        if k == len(w_star):
            omit = set(w_star) | set(chosen)
            whites = [v for v, t in g.types.items() if t == "w" and v not in omit]
            m = _perfect_matching(g, whites, blacks)
            return (m, list(chosen)) if m is not None else None
        for x in cands[k]:
            if x in chosen:
                continue
            r = search(k + 1, chosen + [x])
            if r is not None:
                return r
        return None

    r = search(0, [])
    if r is None:
        raise DegenerateGraphError("no partial matching M' omitting W* and adjacent white vertices")
    return r


# -- text format --------------------------------------------------------------

def dumps(g: CircularPlanarGraph) -> str:
    ns = g.node_set
    lines = [FORMAT_HEADER]
    for v, t in g.types.items():
        lines.append(f"vertex {v} {t}" + (" node" if v in ns else ""))
    for e in g.edges.values():
        lines.append(f"edge {e.id} {e.white} {e.black} {format_rational(e.weight)}")
    for v in g.types:
        lines.append(f"rotation {v}: " + " ".join(g.rotation[v]))
    lines.append("nodes: " + " ".join(g.nodes))
    return "\n".join(lines) + "\n"


def loads(text: str) -> CircularPlanarGraph:
    types: dict[str, str] = {}
    flagged: list[str] = []
    edges: dict[str, Edge] = {}
    rotation: dict[str, list[str]] = {}
    nodes: list[str] | None = None
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("tripledimer-graph"):
        raise GraphFormatError("missing 'tripledimer-graph <version>' header")
    for ln in lines[1:]:
        head, *rest = ln.split()
        try:
            if head == "vertex":
                v, t = rest[0], rest[1]
                if t not in ("b", "w"):
                    raise GraphFormatError(f"vertex {v}: type must be b or w")
                types[v] = t
                if len(rest) > 2 and rest[2] == "node":
                    flagged.append(v)
            elif head == "edge":
                eid, w, b, wt = rest
                edges[eid] = Edge(eid, w, b, parse_rational(wt))
            elif head == "rotation":
                v = rest[0].rstrip(":")
                rotation[v] = rest[1:]
            elif head == "nodes:":
                nodes = rest
            else:
                raise GraphFormatError(f"unknown line: {ln!r}")
        except (IndexError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"malformed line: {ln!r}") from exc
    if nodes is None:
        nodes = flagged
    if set(nodes) != set(flagged):
        raise GraphFormatError("'nodes:' line disagrees with vertices flagged as node")
    for v in types:
        rotation.setdefault(v, [])
    for e in edges.values():
        if e.white not in types or e.black not in types:
            raise GraphFormatError(f"edge {e.id} references an unknown vertex")
    return CircularPlanarGraph(types, list(nodes), edges, rotation)


def load(path) -> CircularPlanarGraph:
    with open(path) as fh:
        return loads(fh.read())


def dump(g: CircularPlanarGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(g))
