"""Boundary data: 3-partitions of the nodes, their traces, the monomials X_tau, Kostka numbers.

Nodes are referred to by their position ``0..n-1`` in counterclockwise order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Sequence

from .linalg import ExactMatrix, permutation_sign


class InfeasibleTypeError(ValueError):
    pass


def node_indexing(types: Sequence[str]) -> tuple[list[int], list[int]]:
    """White positions counterclockwise from the first white; black positions clockwise from it."""
    n = len(types)
    whites = [i for i, t in enumerate(types) if t == "w"]
    if not whites:
        return [], [i for i in range(n - 1, -1, -1) if types[i] == "b"]
    s = whites[0]
    blacks = [(s - k) % n for k in range(1, n + 1)]
    return whites, [i for i in blacks if types[i] == "b"]


def n_triples(types: Sequence[str]) -> int:
    kw = sum(1 for t in types if t == "w")
    kb = sum(1 for t in types if t == "b")
    if kw < kb or (kw - kb) % 3:
        raise InfeasibleTypeError(f"type vector {''.join(types)} has {kw} white and {kb} black nodes")
    return (kw - kb) // 3


@dataclass(frozen=True)
class ThreePartition:
    types: str
    pairs: tuple[tuple[int, int], ...]      # (white position, black position), sorted by white
    triples: tuple[tuple[int, int, int], ...]  # sorted positions, sorted list

    def parts(self):
        return list(self.pairs) + list(self.triples)

    def label(self) -> str:
        """Compact label using node indices (whites and blacks numbered separately from 1)."""
        whites, blacks = node_indexing(self.types)
        wi = {p: i + 1 for i, p in enumerate(whites)}
        bi = {p: i + 1 for i, p in enumerate(blacks)}
        if not self.triples:
            by_white = dict(self.pairs)
            return "".join(str(bi[by_white[w]]) for w in whites)
        bits = [f"b{bi[b]}w{wi[w]}" for w, b in sorted(self.pairs, key=lambda x: bi[x[1]])]
        bits += ["".join(str(wi[w]) for w in t) for t in self.triples]
        return "|".join(bits)

    def sign(self) -> int:
        """Sign of the pairing permutation (whites to blacks in node-index order); 1 with triples."""
        if self.triples:
            return 1
        whites, blacks = node_indexing(self.types)
        bi = {p: i for i, p in enumerate(blacks)}
        by_white = dict(self.pairs)
        return permutation_sign([bi[by_white[w]] for w in whites])


def enumerate_partitions(types: Sequence[str]) -> list[ThreePartition]:
    """All partitions of the nodes into white-black pairs and white triples."""
    types = "".join(types)
    N = n_triples(types)
    whites, blacks = node_indexing(types)
    wi = {p: i for i, p in enumerate(whites)}
    bi = {p: i for i, p in enumerate(blacks)}
    out = []
    for paired in combinations(whites, len(blacks)):
        rest = [w for w in whites if w not in set(paired)]
        triple_sets = list(_triple_partitions(rest))
        for perm in permutations(blacks):
            pairs = tuple(sorted(zip(paired, perm)))
            for ts in triple_sets:
                out.append(ThreePartition(types, pairs, ts))
    assert all(len(t.triples) == N for t in out)

    def key(t: ThreePartition):
        by_white = dict(t.pairs)
        if not t.triples:
            return tuple(bi[by_white[w]] for w in whites)
        by_black = {b: w for w, b in t.pairs}
        return (tuple(wi[by_black[b]] for b in blacks),
                tuple(tuple(wi[x] for x in tr) for tr in t.triples))

    out.sort(key=key)
    return out


def _triple_partitions(items: list[int]):
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for a, b in combinations(rest, 2):
        remaining = [x for x in rest if x not in (a, b)]
        for more in _triple_partitions(remaining):
            yield tuple(sorted(((first, a, b),) + more))


def count_partitions(types: Sequence[str]) -> int:
    N = n_triples(types)
    k = sum(1 for t in types if t == "w")
    return factorial(k) // (factorial(N) * 6 ** N)


def trace_tau(t: ThreePartition, colors: Sequence[int]) -> int:
    for w, b in t.pairs:
        if colors[w] != colors[b]:
            return 0
    clockwise = 0
    for a, b, c in t.triples:
        ca, cb, cc = colors[a], colors[b], colors[c]
        if len({ca, cb, cc}) < 3:
            return 0
        if (cb - ca) % 3 != 1:
            clockwise += 1
    return -1 if clockwise % 2 else 1


def x_tau(t: ThreePartition, X: ExactMatrix, n_star: int | None = None) -> Fraction:
    """The monomial (or sum of monomials) X_tau.

    ``X`` has rows for the white nodes and columns for the black nodes (node-index
    order) followed by one column per element of ``B_int_star``.  Each of the
    latter is tripled; triples are matched to them through every bijection.
    """
    whites, blacks = node_indexing(t.types)
    N = len(t.triples)
    if n_star is None:
        n_star = X.cols - len(blacks)
    if n_star != N or X.cols != len(blacks) + N or X.rows != len(whites):
        raise ValueError(f"X has shape {X.shape}; expected {len(whites)}x{len(blacks) + N}")
    wi = {p: i for i, p in enumerate(whites)}
    bi = {p: i for i, p in enumerate(blacks)}
    kb = len(blacks)
    base_cols = [0] * len(whites)
    coef = Fraction(1)
    for w, b in t.pairs:
        base_cols[wi[w]] = bi[b]
        coef *= X[wi[w], bi[b]]
    if coef == 0:
        return Fraction(0)
    total = Fraction(0)
    for alpha in permutations(range(N)):
        cols = list(base_cols)
        term = coef
        for tr, j in zip(t.triples, alpha):
            for k, w in enumerate(tr):
                cols[wi[w]] = kb + 3 * j + k
                term *= X[wi[w], kb + j]
            if term == 0:
                break
        if term:
            total += permutation_sign(cols) * term
    return total


def kostka(k: int, n: int) -> int:
    """Number of semistandard tableaux of shape 3^m with content 2^k 1^(n-k), m = (n+k)/3."""
    if (n + k) % 3 or k > n or k < 0:
        raise ValueError(f"(k, n) = ({k}, {n}) does not give an integer row count")
    m = (n + k) // 3
    content = [2] * k + [1] * (n - k)
    grid = [[0] * 3 for _ in range(m)]
    cells = [(r, c) for r in range(m) for c in range(3)]
    remaining = list(content)

    def rec(i):
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for v in range(len(content)):
            if not remaining[v]:
                continue
            if c and grid[r][c - 1] > v:
                continue
            if r and grid[r - 1][c] >= v:
                continue
            grid[r][c] = v
            remaining[v] -= 1
            total += rec(i + 1)
            remaining[v] += 1
        return total

    return rec(0)
