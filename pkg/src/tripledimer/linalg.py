"""Exact rational matrices.

Scalars are :class:`fractions.Fraction`.  Determinants and linear solves use
fraction-free (Bareiss) elimination, which keeps intermediate entries small.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class SingularMatrixError(ArithmeticError):
    pass


class DimensionError(ValueError):
    pass


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class ExactMatrix:
    """Immutable dense matrix over the rationals, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: Iterable[Iterable] = (), *, shape: tuple[int, int] | None = None):
        data = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if shape is not None:
            r, c = shape
            if data and (len(data) != r or any(len(row) != c for row in data)):
                raise DimensionError("rows do not match the declared shape")
            if not data:
                data = tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r))
        else:
            r = len(data)
            c = len(data[0]) if data else 0
            if any(len(row) != c for row in data):
                raise DimensionError("ragged rows")
        self.rows, self.cols, self._data = r, c, data

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], shape=(n, n))

    @classmethod
    def zeros(cls, r: int, c: int) -> "ExactMatrix":
        return cls(shape=(r, c))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([[self._data[i][j] for j in cols] for i in rows], shape=(len(rows), len(cols)))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                           shape=(self.cols, self.rows))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
                           shape=self.shape)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self._data], shape=self.shape)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __mul__(self, scalar) -> "ExactMatrix":
        s = to_rational(scalar)
        return ExactMatrix([[a * s for a in r] for r in self._data], shape=self.shape)

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        ot = other.transpose()._data
        return ExactMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ot] for r in self._data],
                           shape=(self.rows, other.cols))


def _bareiss(a: list[list[Fraction]], ncols_elim: int) -> tuple[int, int]:
    """In-place fraction-free forward elimination on the first ``ncols_elim`` columns.

    Returns ``(sign, rank)``; ``sign`` tracks row swaps.  After the call, the
    pivot of the last eliminated row equals the determinant (for square input).
    """
    n = len(a)
    sign = 1
    prev = Fraction(1)
    k = 0
    for k in range(min(n, ncols_elim)):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return sign, k
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, len(ri)):
                ri[j] = (pk * ri[j] - aik * rk[j]) / prev
            ri[k] = Fraction(0)
        prev = pk
    return sign, min(n, ncols_elim)


def det(m: ExactMatrix) -> Fraction:
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.tolist()
    sign, rank = _bareiss(a, n)
    if rank < n:
        return Fraction(0)
    return sign * a[n - 1][n - 1]


def solve(m: ExactMatrix, rhs: ExactMatrix) -> ExactMatrix:
    """Exact solution ``y`` of ``m @ y == rhs``."""
    if m.rows != m.cols:
        raise DimensionError("solve needs a square matrix")
    if rhs.rows != m.rows:
        raise DimensionError("right-hand side has the wrong number of rows")
    n, k = m.rows, rhs.cols
    a = [list(m.row(i)) + list(rhs.row(i)) for i in range(n)]
    _, rank = _bareiss(a, n)
    if rank < n or (n and a[n - 1][n - 1] == 0):
        raise SingularMatrixError("matrix is singular")
    y = [[Fraction(0)] * k for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = a[i]
        piv = row[i]
        for c in range(k):
            s = row[n + c]
            for j in range(i + 1, n):
                if row[j]:
                    s -= row[j] * y[j][c]
            y[i][c] = s / piv
    return ExactMatrix(y, shape=(n, k))


def inverse(m: ExactMatrix) -> ExactMatrix:
    return solve(m, ExactMatrix.identity(m.rows))


def schur_complement(m: ExactMatrix, keep_rows: Sequence[int], keep_cols: Sequence[int]) -> tuple[ExactMatrix, Fraction]:
    """Schur complement of ``m`` onto ``keep_rows x keep_cols``.

    Writing ``m = [[A, B], [C, D]]`` with ``A`` the kept block, returns
    ``(A - B D^{-1} C, det D)``.  ``D`` must be square and invertible.
    """
    elim_rows = [i for i in range(m.rows) if i not in set(keep_rows)]
    elim_cols = [j for j in range(m.cols) if j not in set(keep_cols)]
    if len(elim_rows) != len(elim_cols):
        raise DimensionError("eliminated block is not square")
    A = m.submatrix(keep_rows, keep_cols)
    if not elim_rows:
        return A, Fraction(1)
    B = m.submatrix(keep_rows, elim_cols)
    C = m.submatrix(elim_rows, keep_cols)
    D = m.submatrix(elim_rows, elim_cols)
    delta = det(D)
    if delta == 0:
        raise SingularMatrixError("eliminated block is singular")
    return A - B @ solve(D, C), delta


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation (any distinct sortable labels)."""
    order = sorted(perm)
    pos = {v: i for i, v in enumerate(order)}
    p = [pos[v] for v in perm]
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign
