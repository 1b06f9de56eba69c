"""Exact feasibility of ``A x >= b`` over the rationals.

Two independent routes: Fourier-Motzkin elimination with back
substitution (used for small variable counts) and a phase-1 simplex with
Bland's rule.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction]

FM_MAX_VARS = 8


def _normalize(a: Sequence[Fraction], b: Fraction) -> Row:
    scale = max((abs(x) for x in a), default=Fraction(0))
    if scale == 0:
        return tuple(Fraction(0) for _ in a), b
    return tuple(x / scale for x in a), b / scale


def _prune(rows: list[Row]) -> list[Row]:
    # keep the tightest rhs per normalized direction
    best: dict[tuple, Fraction] = {}
    for a, b in rows:
        if a not in best or b > best[a]:
            best[a] = b
    return [(a, b) for a, b in best.items()]


def fourier_motzkin(A: Sequence[Sequence], b: Sequence, nvars: int | None = None) -> list[Fraction] | None:
    """Return some ``x`` with ``A x >= b`` or ``None`` if infeasible."""
    n = len(A[0]) if A else (nvars or 0)
    rows = _prune([_normalize([Fraction(x) for x in a], Fraction(rhs)) for a, rhs in zip(A, b)])
    stages: list[list[Row]] = []
    for k in reversed(range(n)):
        stages.append(rows)
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        nxt = [r for r in rows if r[0][k] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = ap[k], -an[k]
                a = [cn * x + cp * y for x, y in zip(ap, an)]
                nxt.append(_normalize(a, cn * bp + cp * bn))
        rows = _prune(nxt)
    if any(rhs > 0 for _, rhs in rows):
        return None

    x = [Fraction(0)] * n
    # stages[i] involves variables 0..n-1-i; those below n-1-i are already fixed
    for i in reversed(range(n)):
        k = n - 1 - i
        lo = hi = None
        for a, rhs in stages[i]:
            if a[k] == 0:
                continue
            rest = rhs - sum(a[j] * x[j] for j in range(k))
            bound = rest / a[k]
            if a[k] > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if (lo is None or lo <= 0) and (hi is None or hi >= 0):
            x[k] = Fraction(0)
        elif lo is not None and lo > 0:
            x[k] = lo
        else:
            x[k] = hi
    return x


def simplex_feasible(A: Sequence[Sequence], b: Sequence, nvars: int | None = None) -> list[Fraction] | None:
    """Phase-1 simplex for ``A x >= b`` with free ``x``.

    Variables are split as ``x = xp - xn`` and each row gets a surplus and
    an artificial variable. Bland's rule guarantees termination.
    """
    n = len(A[0]) if A else (nvars or 0)
    m = len(A)
    if m == 0:
        return [Fraction(0)] * n
    # columns: xp (n), xn (n), surplus (m), artificial (m)
    ncol = 2 * n + 2 * m
    T: list[list[Fraction]] = []
    for i, (a, rhs) in enumerate(zip(A, b)):
        a = [Fraction(x) for x in a]
        rhs = Fraction(rhs)
        row = a + [-x for x in a] + [Fraction(-int(i == j)) for j in range(m)]
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        row += [Fraction(int(i == j)) for j in range(m)]
        T.append(row + [rhs])
    basis = [2 * n + m + i for i in range(m)]
    # objective: minimize sum of artificials, expressed in reduced costs
    cost = [Fraction(0)] * (ncol + 1)
    for row in T:
        for j in range(ncol + 1):
            cost[j] -= row[j]
    for i in range(m):
        cost[2 * n + m + i] = Fraction(0)

    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [(T[i][-1] / T[i][enter], basis[i], i) for i in range(m) if T[i][enter] > 0]
        if not ratios:
            break  # unbounded direction cannot occur in phase 1
        _, _, leave = min(ratios)
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[leave])]
        basis[leave] = enter

    if -cost[-1] != 0:
        return None
    values = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        values[j] = T[i][-1]
    return [values[j] - values[n + j] for j in range(n)]


def find_point(A: Sequence[Sequence], b: Sequence, nvars: int | None = None, method: str = "auto") -> list[Fraction] | None:
    """Some solution of ``A x >= b``, or ``None``.

    ``method`` is ``"fm"``, ``"simplex"`` or ``"auto"`` (Fourier-Motzkin up
    to ``FM_MAX_VARS`` variables, simplex beyond).
    """
    n = len(A[0]) if A else (nvars or 0)
    if method == "auto":
        method = "fm" if n <= FM_MAX_VARS else "simplex"
    if method == "fm":
        return fourier_motzkin(A, b, n)
    if method == "simplex":
        return simplex_feasible(A, b, n)
    raise ValueError(f"unknown method {method!r}")
