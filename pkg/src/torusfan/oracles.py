"""Brute-force cross-checks for the fan algorithms.

These never call :func:`separating_functional` or the wall-counting test;
they sample points and enumerate basic solutions instead.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from itertools import combinations
from typing import Iterable, Sequence

from .exact.linalg import NoSolution, inverse, rref, solve, transpose
from .polyhedral import Fan


def random_direction(rng: random.Random, d: int, bound: int = 100) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(d)]
        if any(v):
            return v


def direction_oracle(fan: Fan, samples: int = 1000, seed: int = 0) -> bool:
    """Every sampled direction lies in some cone of ``fan``."""
    d = fan.ambient_rank
    if d == 0:
        return True
    rng = random.Random(seed)
    cones = [_ConeSolver(fan, s) for s in fan.maximal_simplices()]
    for _ in range(samples):
        v = random_direction(rng, d)
        if not any(c.coefficients(v) is not None for c in cones):
            return False
    return True


class _ConeSolver:
    """Exact coordinates in a simplicial cone via a precomputed left inverse."""

    def __init__(self, fan: Fan, index: frozenset):
        self.idx = sorted(index)
        A = fan.ray_matrix(self.idx)
        self.A = A
        k = len(self.idx)
        if k == 0:
            self.rows, self.inv = [], []
            return
        # pick k independent rows; keep the inverse as integers over a common denominator
        _, rows = rref(transpose(A, k), len(A))
        self.rows = rows
        inv = inverse([A[r] for r in rows])
        self.den = lcm(*(Fraction(c).denominator for row in inv for c in row))
        self.inv = [[int(c * self.den) for c in row] for row in inv]
        self.A = [[int(c) for c in row] for row in A] if all(
            Fraction(c).denominator == 1 for row in A for c in row) else A

    def coefficients(self, x: Sequence[int]) -> list[Fraction] | None:
        """Coordinates of the integer vector ``x``, or ``None`` if outside."""
        if not self.idx:
            return [] if all(v == 0 for v in x) else None
        xs = [x[r] for r in self.rows]
        a = [sum(c * v for c, v in zip(row, xs)) for row in self.inv]
        if any(c < 0 for c in a):
            return None
        if any(sum(r * c for r, c in zip(row, a)) != self.den * v for row, v in zip(self.A, x)):
            return None
        return [Fraction(c, self.den) for c in a]


def _sample_overlap(fan: Fan, I: frozenset, J: frozenset, samples: int, rng: random.Random):
    for src, dst in ((J, I), (I, J)):
        src_sorted = sorted(src)
        solver = _ConeSolver(fan, dst)
        excl = [k for k, i in enumerate(solver.idx) if i not in src]
        faces = [f for r in range(1, len(src_sorted) + 1) for f in combinations(src_sorted, r)]
        if not faces:
            continue
        for _ in range(samples):
            face = faces[rng.randrange(len(faces))]
            x = [0] * fan.ambient_rank
            for i in face:
                c = rng.randint(1, 50)
                x = [xi + c * ri for xi, ri in zip(x, fan.rays[i])]
            coef = solver.coefficients(x)
            if coef is None:
                continue
            if any(i not in dst for i in face) or any(coef[k] > 0 for k in excl):
                return x
    return None


def _enumerate_overlap(fan: Fan, I: frozenset, J: frozenset):
    # variables: a_i (i in I), b_j (j in J); sum a lam - sum b mu = 0, sum = 1
    idx_i, idx_j = sorted(I), sorted(J)
    m = fan.ambient_rank
    cols = [list(fan.rays[i]) + [1] for i in idx_i] + [[-x for x in fan.rays[j]] + [1] for j in idx_j]
    rhs = [0] * m + [1]
    flagged = {k for k, i in enumerate(idx_i) if i not in J}
    flagged |= {len(idx_i) + k for k, j in enumerate(idx_j) if j not in I}
    nvar = len(cols)
    for r in range(1, min(nvar, m + 1) + 1):
        for support in combinations(range(nvar), r):
            if not flagged.intersection(support):
                continue
            M = [[cols[v][row] for v in support] for row in range(m + 1)]
            try:
                sol = solve(M, rhs, ncols=r)
            except NoSolution:
                continue
            if not sol.unique or any(x < 0 for x in sol.x):
                continue
            if any(sol.x[k] > 0 for k, v in enumerate(support) if v in flagged):
                x = [Fraction(0)] * m
                for k, v in enumerate(support):
                    if v < len(idx_i):
                        x = [xi + sol.x[k] * ri for xi, ri in zip(x, fan.rays[idx_i[v]])]
                return x
    return None


def overlap_oracle(fan: Fan, I: Iterable[int], J: Iterable[int], samples: int = 1000, seed: int = 0):
    """A point of ``C_I & C_J`` outside ``C_{I & J}``, or ``None``.

    Random sampling over faces first, then exact enumeration of the basic
    solutions of the intersection system, which is conclusive.
    """
    I, J = frozenset(I), frozenset(J)
    if I == J:
        return None
    rng = random.Random(seed)
    hit = _sample_overlap(fan, I, J, samples, rng)
    if hit is not None:
        return hit
    return _enumerate_overlap(fan, I, J)


def fan_overlap_oracle(fan: Fan, samples: int = 1000, seed: int = 0):
    """First pair of maximal simplices with an overlap witness, or ``None``."""
    for a, b in combinations(fan.maximal_simplices(), 2):
        w = overlap_oracle(fan, a, b, samples, seed)
        if w is not None:
            return a, b, w
    return None
