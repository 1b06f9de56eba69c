"""Exact linear algebra over Q and Q(i).

Matrices are plain row-major lists of lists. Entries may be ``int``,
``Fraction`` or :class:`GaussianRational`; every routine works over the
smallest field containing the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import NoSolution, ShapeMismatch
from .gaussian import GaussianRational

Matrix = list[list]
Vector = list


def _field(x):
    if isinstance(x, GaussianRational):
        return x if x.im != 0 else x.re
    return Fraction(x)


def as_field_matrix(M: Sequence[Sequence]) -> Matrix:
    return [[_field(x) for x in row] for row in M]


def shape(M: Sequence[Sequence], ncols: int | None = None) -> tuple[int, int]:
    rows = len(M)
    if rows:
        cols = len(M[0])
        if any(len(r) != cols for r in M):
            raise ShapeMismatch("ragged matrix")
        if ncols is not None and ncols != cols:
            raise ShapeMismatch(f"expected {ncols} columns, got {cols}")
        return rows, cols
    return 0, (ncols or 0)


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    _, c = shape(M, ncols)
    return [[row[j] for row in M] for j in range(c)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ShapeMismatch(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0])}")
    cols = len(B[0]) if B else 0
    return [[sum((a * B[k][j] for k, a in enumerate(row)), 0) for j in range(cols)]
            for row in A]


def matvec(A: Sequence[Sequence], x: Sequence) -> Vector:
    if A and len(A[0]) != len(x):
        raise ShapeMismatch(f"matrix has {len(A[0])} columns, vector has length {len(x)}")
    return [sum((a * b for a, b in zip(row, x)), 0) for row in A]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def rref(M: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen left to right, so the pivot set is the
    lexicographically earliest one. Zero rows are dropped from the result.
    """
    _, cols = shape(M, ncols)
    R = as_field_matrix(M)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(R)) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(M: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(M, ncols)[1])


def kernel_basis(M: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of the right null space, one vector per free column.

    The vector for free column ``f`` has a 1 in position ``f``, zeros in
    the other free positions and is determined on the pivot positions.
    """
    _, cols = shape(M, ncols)
    R, pivots = rref(M, cols)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v: Vector = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Solution:
    x: Vector
    unique: bool


def solve(M: Sequence[Sequence], b: Sequence, ncols: int | None = None) -> Solution:
    """Solve ``M x = b``.

    Raises :class:`NoSolution` when ``b`` is outside the column space. When
    the solution is not unique the particular solution with every free
    variable set to zero is returned and flagged.
    """
    rows, cols = shape(M, ncols)
    if len(b) != rows:
        raise ShapeMismatch(f"rhs length {len(b)} != {rows} rows")
    aug = [list(row) + [rhs] for row, rhs in zip(M, b)]
    R, pivots = rref(aug, cols + 1)
    if pivots and pivots[-1] == cols:
        raise NoSolution("right-hand side is not in the column space")
    x: Vector = [Fraction(0)] * cols
    for row, p in zip(R, pivots):
        x[p] = row[cols]
    return Solution(x, unique=len(pivots) == cols)


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    """Whether ``v`` lies in the span of ``vectors`` over the ambient field."""
    if not vectors:
        return all(x == 0 for x in v)
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def same_span(U: Sequence[Sequence], V: Sequence[Sequence], dim: int) -> bool:
    ru = rank(U, dim)
    return ru == rank(V, dim) and rank(list(U) + list(V), dim) == ru


def det(M: Sequence[Sequence]):
    n = len(M)
    if any(len(r) != n for r in M):
        raise ShapeMismatch("determinant of a non-square matrix")
    A = as_field_matrix(M)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            d = -d
        d *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c] != 0:
                f = A[i][c] / A[c][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return d


def inverse(M: Sequence[Sequence]) -> Matrix:
    n = len(M)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    R, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def real_part(v: Sequence) -> Vector:
    return [GaussianRational.coerce(x).re for x in v]


def real_projection_basis(h_basis: Sequence[Sequence], m: int | None = None) -> list[Vector]:
    """Basis of the real projection of the complex span of ``h_basis``.

    Spans ``{Re(w), Re(i w)}`` over the basis vectors and returns the
    nonzero rows of the reduced echelon form.
    """
    if not h_basis:
        return []
    dim = len(h_basis[0]) if m is None else m
    spanning = []
    for w in h_basis:
        if len(w) != dim:
            raise ShapeMismatch("h_basis vectors differ in length")
        g = [GaussianRational.coerce(x) for x in w]
        spanning.append([x.re for x in g])
        spanning.append([-x.im for x in g])
    R, _ = rref(spanning, dim)
    return R
