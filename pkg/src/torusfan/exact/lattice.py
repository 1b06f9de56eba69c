"""Integer lattice normal forms: Smith and Hermite."""

from __future__ import annotations

from math import gcd
from typing import Sequence

from ..errors import ShapeMismatch

IntMatrix = list[list[int]]


def _eye(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _check_int(A: Sequence[Sequence]) -> IntMatrix:
    out = []
    for row in A:
        r = []
        for x in row:
            if int(x) != x:
                raise ValueError(f"non-integral entry {x!r}")
            r.append(int(x))
        out.append(r)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeMismatch("ragged matrix")
    return out


def snf(A: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``U A V = S``.

    ``U`` and ``V`` are unimodular and ``S`` is diagonal with nonnegative
    entries ``d1 | d2 | ...``.
    """
    S = _check_int(A)
    rows = len(S)
    cols = len(S[0]) if S else (ncols or 0)
    U = _eye(rows)
    V = _eye(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        # row_dst += f * row_src
        S[dst] = [a + f * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for M in (S, V):
            for row in M:
                row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(S[i][j]), i, j) for i in range(t, rows)
                       for j in range(t, cols) if S[i][j] != 0]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = S[t][t]
            done = True
            for i in range(t + 1, rows):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        done = False
            if not done:
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(S[i][j] % p for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < rows and S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return U, S, V


def invariant_factors(A: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    _, S, _ = snf(A, ncols)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0)) if S[i][i] != 0]


def hnf(A: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form ``H = U A``.

    ``H`` is in row echelon form with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and zero rows at the bottom.
    """
    H = _check_int(A)
    rows = len(H)
    cols = len(H[0]) if H else (ncols or 0)
    U = _eye(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [(abs(H[i][c]), i) for i in range(r, rows) if H[i][c] != 0]
            if not nz:
                break
            _, p = min(nz)
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, rows):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def int_det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix via Bareiss elimination."""
    M = _check_int(A)
    n = len(M)
    if any(len(r) != n for r in M):
        raise ShapeMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def primitive(v: Sequence[int]) -> list[int]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive normalization")
    return [int(x) // g for x in v]


def int_inverse(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    from .linalg import inverse
    inv = inverse(A)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def saturation_split(vectors: Sequence[Sequence[int]], m: int) -> tuple[IntMatrix, IntMatrix]:
    """Split ``Z^m`` as ``L (+) E`` where ``L`` is the saturation of ``span(vectors)``.

    Returns ``(L_basis, E_basis)`` as lists of column vectors. The
    saturation basis is put in Hermite form; the complement uses standard
    basis vectors when some choice of them completes ``L`` to a lattice
    basis, and the Smith-form complement otherwise.
    """
    from itertools import combinations
    if not vectors:
        return [], [[int(i == j) for j in range(m)] for i in range(m)]
    # columns of the ray matrix are the vectors
    A = [[int(v[i]) for v in vectors] for i in range(m)]
    U, S, _ = snf(A)
    r = len([1 for i in range(min(len(S), len(S[0]))) if S[i][i] != 0])
    Uinv = int_inverse(U)
    cols = [[Uinv[i][j] for i in range(m)] for j in range(m)]
    L = cols[:r]
    H, _ = hnf(L, m)
    L = [row for row in H if any(row)]
    for idx in combinations(range(m), m - r):
        E = [[int(i == j) for i in range(m)] for j in idx]
        if abs(int_det(L + E)) == 1:
            return L, E
    return L, cols[r:]
