"""Gallery triples, the moment-angle lift and its admissibility test."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .category import Morphism, principal_bundle_check, validate_morphism
from .errors import (DegenerateLattice, NotComplete, ParityViolation, PrereqFailed,
                     RealAlphaTilde, SizeViolation)
from .exact.gaussian import GaussianRational, I
from .exact.linalg import kernel_basis, rank, same_span, solve, transpose
from .polyhedral import Fan, _complete, _structural_report, downward_closure, join_fans, validate_fan
from .triple import Triple, validate_c2


def _proper_subsets(elems: Sequence[int]) -> list[frozenset]:
    return [frozenset(c) for r in range(len(elems)) for c in combinations(elems, r)]


def make_calabi_eckmann(k: int, m: int, alpha_tilde=I) -> Triple:
    """Calabi-Eckmann triple on ``(C^k - 0) x (C^(m-k) - 0)``.

    ``k = m - 1`` gives a Hopf manifold of dimension ``k``.
    """
    if not 1 <= k < m:
        raise ValueError(f"need 1 <= k < m, got k={k}, m={m}")
    a = GaussianRational.coerce(alpha_tilde)
    if a.im == 0:
        raise RealAlphaTilde(f"alpha_tilde = {a} is real")
    first, second = list(range(k)), list(range(k, m))
    simplices = {s | t for s in _proper_subsets(first) for t in _proper_subsets(second)}
    # a block of size one contributes no ray
    used = sorted({i for s in simplices for i in s})
    pos = {c: i for i, c in enumerate(used)}
    rays = [tuple(int(c == j) for j in range(m)) for c in used]
    simplices = {frozenset(pos[c] for c in s) for s in simplices}
    w = tuple([GaussianRational(1)] * k + [a] * (m - k))
    return Triple(m, Fan(m, tuple(rays), frozenset(simplices)), (w,))


def make_hopf(n: int, alpha_tilde=I) -> Triple:
    return make_calabi_eckmann(n, n + 1, alpha_tilde)


def make_torus(n: int, periods: Sequence[Sequence]) -> Triple:
    """Compact complex torus ``C^n / Gamma`` from an ``n x 2n`` period matrix."""
    P = [[GaussianRational.coerce(x) for x in row] for row in periods]
    if len(P) != n or any(len(row) != 2 * n for row in P):
        raise ValueError(f"period matrix must be {n} x {2 * n}")
    real = [[x.re for x in row] for row in P] + [[x.im for x in row] for row in P]
    if rank(real, 2 * n) < 2 * n:
        raise DegenerateLattice("periods are linearly dependent over R")
    h = tuple(tuple(v) for v in kernel_basis(P, 2 * n))
    return Triple(2 * n, Fan.origin(2 * n), h)


def make_complete_toric(fan: Fan) -> Triple:
    rep = validate_fan(fan)
    if not rep.complete:
        raise NotComplete(rep.first_failure or "fan is not complete")
    return Triple(fan.ambient_rank, fan, ())


def p1_fan() -> Fan:
    return Fan.from_maximal(1, [(1,), (-1,)], [[0], [1]])


def p1_triple() -> Triple:
    return make_complete_toric(p1_fan())


def p1xp1_triple() -> Triple:
    return make_complete_toric(join_fans(p1_fan(), p1_fan()))


def p1_times_elliptic() -> Triple:
    """Projective line times an elliptic curve: rays +-e1 in R^3, h = span(0, 1, i)."""
    fan = Fan.from_maximal(3, [(1, 0, 0), (-1, 0, 0)], [[0], [1]])
    return Triple(3, fan, ((0, 1, I),))


def gallery() -> dict[str, Triple]:
    return {
        "torus": make_torus(1, [[1, I]]),
        "hopf": make_hopf(2),
        "calabi_eckmann": make_calabi_eckmann(2, 4),
        "complete_toric_p1": p1_triple(),
        "complete_toric_p1xp1": p1xp1_triple(),
    }


@dataclass(frozen=True)
class LiftResult:
    lifted: Triple
    alpha: Morphism
    ghost_vertices: frozenset


def _lift_matrix(T: Triple, m: int) -> list[list[int]]:
    g = T.torus_rank
    cols = [list(r) for r in T.fan.rays]
    r = rank(cols, g) if cols else 0
    for j in range(g):
        if len(cols) == m or r == g:
            break
        e = [int(i == j) for i in range(g)]
        if rank(cols + [e], g) > r:
            cols.append(e)
            r += 1
    cols += [[0] * g for _ in range(m - len(cols))]
    return transpose(cols, g) if g else []


def min_lift_size(T: Triple) -> int:
    """Smallest ``m`` admitting a surjective ``f`` with the rays as first columns."""
    rays = [list(r) for r in T.fan.rays]
    span = rank(rays, T.torus_rank) if rays else 0
    return len(rays) + T.torus_rank - span


def admissible_lift_sizes(T: Triple, upto: int) -> list[int]:
    lo = max(len(T.fan.rays), T.torus_rank, min_lift_size(T))
    return [m for m in range(lo, upto + 1) if (m - T.torus_rank) % 2 == 0]


def moment_angle_lift(T: Triple, m: int, check: bool = True) -> LiftResult:
    """Lift ``T`` to a triple on ``R^m`` with standard-basis rays.

    The lift maps onto ``T`` by ``f``, whose first columns are the rays of
    ``T``; the remaining indices are ghost vertices.
    """
    g, k = T.torus_rank, len(T.fan.rays)
    if m < k or m < g:
        raise SizeViolation(f"m = {m} must be at least k = {k} and rank {g}")
    if (m - g) % 2:
        raise ParityViolation(f"m - rank = {m - g} is odd")
    need = min_lift_size(T)
    if m < need:
        raise SizeViolation(f"m = {m} leaves too few free columns for a surjective lift (need {need})")
    f = _lift_matrix(T, m)

    lifted_rays = tuple(tuple(int(i == j) for j in range(m)) for i in range(k))
    lifted_fan = Fan(m, lifted_rays, T.fan.simplices)

    h_lift = []
    for w in T.h_basis:
        gw = [GaussianRational.coerce(x) for x in w]
        u = solve(f, [x.re for x in gw], ncols=m).x
        v = solve(f, [x.im for x in gw], ncols=m).x
        # u' + i v' maps onto w itself
        h_lift.append(tuple(GaussianRational(a, b) for a, b in zip(u, v)))
    ker = kernel_basis(f, m)
    for a, b in zip(ker[0::2], ker[1::2]):
        h_lift.append(tuple(GaussianRational(x, y) for x, y in zip(a, b)))

    lifted = Triple(m, lifted_fan, tuple(h_lift))
    alpha = Morphism(lifted, T, f)
    ghosts = frozenset(range(m)) - lifted_fan.vertices()
    result = LiftResult(lifted, alpha, ghosts)
    if check:
        failures = lift_postconditions(result, T)
        if failures:
            raise PrereqFailed("lift postconditions failed: " + ", ".join(failures))
    return result


def lift_postconditions(result: LiftResult, T: Triple) -> list[str]:
    """Names of the lift postconditions that do not hold."""
    failed = []
    if not validate_c2(result.lifted).valid:
        failed.append("lifted_valid")
    if not validate_morphism(result.alpha).valid:
        failed.append("morphism_valid")
    if not principal_bundle_check(result.alpha).is_principal:
        failed.append("principal")
    f = result.alpha.matrix
    images = [[sum((GaussianRational.coerce(a) * x for a, x in zip(row, w)), GaussianRational())
               for row in f] for w in result.lifted.h_basis]
    if not same_span(images, list(T.h_basis), T.torus_rank):
        failed.append("span_equality")
    return failed


@dataclass(frozen=True)
class AdmissibilityReport:
    parity_ok: bool
    realization_complete: bool
    underlying_matches: bool

    @property
    def admissible(self) -> bool:
        return self.parity_ok and self.realization_complete and self.underlying_matches


def moment_angle_admissibility(simplices: Iterable[Iterable[int]], m: int, rays: dict | Sequence,
                               d: int | None = None) -> AdmissibilityReport:
    """Certify the complex moment-angle condition for one realization of ``simplices``.

    ``rays`` maps each non-ghost vertex of the complex on ``{0..m-1}`` to an
    integer vector in ``Z^d``. A sequence is read as rays for vertices
    ``0, 1, ...`` in order.
    """
    sigma = downward_closure(simplices)
    vertices = sorted({i for s in sigma for i in s})
    if any(not 0 <= v < m for v in vertices):
        raise ValueError(f"vertex outside 0..{m - 1}")
    if not isinstance(rays, dict):
        rays = dict(zip(range(len(rays)), rays))
    missing = [v for v in vertices if v not in rays]
    if missing:
        raise ValueError(f"no ray given for vertices {missing}")
    if d is None:
        d = len(next(iter(rays.values()))) if rays else 0
    order = sorted(rays)
    pos = {v: i for i, v in enumerate(order)}
    fan = Fan(d, tuple(tuple(rays[v]) for v in order),
              frozenset(frozenset(pos[v] for v in s) for s in sigma))

    parity = (m + d) % 2 == 0
    # star-shapedness needs a complete simplicial fan, not a unimodular one
    rep = _structural_report(fan, False, "auto")
    complete = rep.structural_ok and _complete(fan, d, rep)
    matches = (set(order) == set(vertices) and rep.is_simplicial_complex
               and rep.rays_primitive and rep.nonsingular)
    return AdmissibilityReport(parity, complete, matches)
