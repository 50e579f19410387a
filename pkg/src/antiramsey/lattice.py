"""Exact integer linear algebra for lattice polytopes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple[int, ...]


def rank(rows: Sequence[Sequence]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of {x in Z^ncols : rows . x = 0}, saturated in Z^ncols.

    Unimodular column operations bring each row to a single nonzero pivot;
    the untouched columns of the accumulated transform span the kernel.
    """
    A = [list(map(int, row)) for row in rows]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    pool = list(range(ncols))

    def sub_col(dst, src, q):
        for row in A:
            row[dst] -= q * row[src]
        for row in U:
            row[dst] -= q * row[src]

    for row in A:
        while True:
            nz = [j for j in pool if row[j] != 0]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda j: abs(row[j]))
            for j in nz:
                if j != piv:
                    sub_col(j, piv, row[j] // row[piv])
        if nz:
            pool.remove(nz[0])
    return [tuple(U[i][j] for i in range(ncols)) for j in pool]


def solve(columns: Sequence[Vector], target: Sequence[int]) -> list[Fraction] | None:
    """Exact y with sum_j y_j columns[j] = target, or None if inconsistent."""
    k = len(columns)
    n = len(target)
    m = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, n) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(m[i][k] != 0 for i in range(r, n)):
        return None
    y = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        y[c] = m[i][k]
    return y


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class LatticeFrame:
    """x = origin + basis . y identifies aff(points) cap Z^N with Z^dim."""
    origin: Vector
    basis: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: Sequence[int]) -> Vector | None:
        """Integer coordinates of x, or None if x is off the affine lattice."""
        y = solve(self.basis, sub(x, self.origin))
        if y is None or any(v.denominator != 1 for v in y):
            return None
        return tuple(int(v) for v in y)

    def point(self, y: Sequence[int]) -> Vector:
        return tuple(o + sum(c * b[i] for c, b in zip(y, self.basis)) for i, o in enumerate(self.origin))


def lattice_frame(points: Sequence[Vector]) -> LatticeFrame:
    N = len(points[0])
    diffs = [sub(p, points[0]) for p in points[1:]]
    r = rank(diffs)
    if r == N:
        return LatticeFrame(tuple([0] * N), tuple(tuple(int(i == j) for i in range(N)) for j in range(N)))
    normals = integer_kernel(diffs, N) if diffs else [tuple(int(i == j) for i in range(N)) for j in range(N)]
    return LatticeFrame(tuple(points[0]), tuple(integer_kernel(normals, N)))


def hyperplane(points: Sequence[Vector]) -> tuple[Vector, int] | None:
    """Primitive (a, b) with a.x = b through d affinely independent points in Z^d."""
    d = len(points[0])
    diffs = [sub(p, points[0]) for p in points[1:]]
    if rank(diffs) != d - 1:
        return None
    ker = integer_kernel(diffs, d)
    a = ker[0]
    return a, dot(a, points[0])


def simplex_volume(points: Sequence[Vector]) -> int:
    """|det| of edge vectors: normalized volume of a full-dimensional simplex."""
    return abs(determinant([sub(p, points[0]) for p in points[1:]]))
