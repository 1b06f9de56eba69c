"""Simplicial rational fans.

A :class:`Fan` is an ambient rank, a list of ray vectors and an abstract
simplicial complex of index sets (0-based). Lattice fans carry primitive
integer rays; image fans produced by quotient maps carry rational rays and
are validated with ``lattice=False``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .errors import NoSolution, NotUnimodular, PrereqFailed
from .exact.lattice import invariant_factors, is_primitive
from .exact.linalg import inverse, kernel_basis, matvec, rank, rref, solve, transpose
from .feasibility import find_point

Simplex = frozenset


def _as_ray(v) -> tuple:
    out = []
    for x in v:
        f = Fraction(x)
        out.append(int(f) if f.denominator == 1 else f)
    return tuple(out)


def downward_closure(faces: Iterable[Iterable[int]]) -> frozenset:
    closed = {frozenset()}
    for face in faces:
        face = tuple(sorted(set(face)))
        for r in range(len(face) + 1):
            closed.update(frozenset(c) for c in combinations(face, r))
    return frozenset(closed)


def simplex_key(s: Iterable[int]) -> tuple:
    s = sorted(s)
    return (len(s), s)


@dataclass(frozen=True)
class Fan:
    ambient_rank: int
    rays: tuple = ()
    simplices: frozenset = field(default_factory=lambda: frozenset({frozenset()}))

    def __post_init__(self):
        rays = tuple(_as_ray(r) for r in self.rays)
        for r in rays:
            if len(r) != self.ambient_rank:
                raise ValueError(f"ray {r} does not have length {self.ambient_rank}")
        simplices = frozenset(frozenset(s) for s in self.simplices) | {frozenset()}
        for s in simplices:
            if any(not 0 <= i < len(rays) for i in s):
                raise ValueError(f"simplex {sorted(s)} references a missing ray")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "simplices", simplices)

    @classmethod
    def from_maximal(cls, ambient_rank: int, rays: Sequence, maximal: Iterable[Iterable[int]]) -> Fan:
        return cls(ambient_rank, tuple(rays), downward_closure(maximal))

    @classmethod
    def origin(cls, ambient_rank: int) -> Fan:
        return cls(ambient_rank)

    def sorted_simplices(self) -> list[frozenset]:
        return sorted(self.simplices, key=simplex_key)

    def maximal_simplices(self) -> list[frozenset]:
        """Maximal simplices in lexicographic order of their sorted index lists."""
        top = [s for s in self.simplices if not any(s < t for t in self.simplices)]
        return sorted(top, key=sorted)

    def vertices(self) -> set[int]:
        return {i for s in self.simplices for i in s}

    def cone(self, index: Iterable[int]) -> Cone:
        return Cone(self, frozenset(index))

    def ray_matrix(self, index: Iterable[int]) -> list[list]:
        """Matrix whose columns are the rays indexed by ``sorted(index)``."""
        idx = sorted(index)
        return [[self.rays[i][r] for i in idx] for r in range(self.ambient_rank)]


@dataclass(frozen=True)
class Cone:
    fan: Fan
    index: frozenset

    @property
    def rays(self) -> list[tuple]:
        return [self.fan.rays[i] for i in sorted(self.index)]

    def matrix(self) -> list[list]:
        return self.fan.ray_matrix(self.index)


class Membership(NamedTuple):
    coefficients: list[Fraction]
    interior: bool


def cone_membership(cone: Cone, x: Sequence) -> Membership | None:
    """Coefficients of ``x`` in the rays of ``cone`` (sorted index order).

    Returns ``None`` when ``x`` is outside. ``interior`` is set when every
    coefficient is strictly positive, i.e. ``x`` is in the relative interior.
    """
    m = cone.fan.ambient_rank
    if len(x) != m:
        raise ValueError(f"vector has length {len(x)}, expected {m}")
    if not cone.index:
        zero = all(Fraction(v) == 0 for v in x)
        return Membership([], True) if zero else None
    try:
        sol = solve(cone.matrix(), list(x), ncols=len(cone.index))
    except NoSolution:
        return None
    if not sol.unique:
        raise ValueError("cone rays are linearly dependent")
    if any(a < 0 for a in sol.x):
        return None
    return Membership(sol.x, all(a > 0 for a in sol.x))


def is_unimodular(cone: Cone) -> bool:
    """Whether the rays of ``cone`` extend to a basis of ``Z^m``."""
    if not cone.index:
        return True
    rays = cone.rays
    if any(Fraction(x).denominator != 1 for r in rays for x in r):
        return False
    A = cone.matrix()
    factors = invariant_factors(A, ncols=len(rays))
    return len(factors) == len(rays) and all(f == 1 for f in factors)


def dual_basis(cone: Cone) -> list[list[Fraction]]:
    """Functionals ``alpha_i`` with ``<alpha_i, lambda_j> = delta_ij``.

    Extended to the ambient space by vanishing on the coordinate vectors
    of the non-pivot columns of the echelon form of the rays.
    """
    if not is_unimodular(cone):
        raise NotUnimodular(f"cone {sorted(cone.index)} is not unimodular")
    m = cone.fan.ambient_rank
    rays = [list(r) for r in cone.rays]
    if not rays:
        return []
    _, pivots = rref(rays, m)
    complement = [[int(i == c) for i in range(m)] for c in range(m) if c not in pivots]
    B = transpose(rays + complement, m)
    Binv = inverse(B)
    return [list(row) for row in Binv[:len(rays)]]


def separating_functional(fan: Fan, I: Iterable[int], J: Iterable[int], method: str = "auto") -> list[Fraction] | None:
    """A functional vanishing on ``I & J``, positive on ``I - J``, negative on ``J - I``.

    Its existence certifies ``C_I & C_J = C_{I & J}``; ``None`` means the
    two cones overlap improperly.
    """
    I, J = frozenset(I), frozenset(J)
    m = fan.ambient_rank
    if I == J:
        return [Fraction(0)] * m
    common = [list(fan.rays[i]) for i in sorted(I & J)]
    K = kernel_basis(common, m) if common else [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    if not K:
        return None
    A, b = [], []
    for i in sorted(I - J):
        A.append(matvec(K, fan.rays[i]))
        b.append(1)
    for j in sorted(J - I):
        A.append([-x for x in matvec(K, fan.rays[j])])
        b.append(1)
    c = find_point(A, b, nvars=len(K), method=method)
    if c is None:
        return None
    return [sum((c[t] * K[t][r] for t in range(len(K))), Fraction(0)) for r in range(m)]


@dataclass
class FanReport:
    is_simplicial_complex: bool = True
    rays_primitive: bool = True
    rays_used: bool = True
    nonsingular: bool = True
    fan_property: bool = True
    fan_property_witness: tuple | None = None
    pure_dim: int | None = None
    wall_condition: bool = False
    complete: bool = False
    first_failure: str | None = None

    @property
    def structural_ok(self) -> bool:
        return (self.is_simplicial_complex and self.rays_primitive and self.rays_used
                and self.nonsingular and self.fan_property)

    @property
    def ok(self) -> bool:
        return self.structural_ok

    def _fail(self, what: str, msg: str):
        setattr(self, what, False)
        if self.first_failure is None:
            self.first_failure = msg

    def as_dict(self) -> dict:
        w = self.fan_property_witness
        return {
            "is_simplicial_complex": self.is_simplicial_complex,
            "rays_primitive": self.rays_primitive,
            "rays_used": self.rays_used,
            "nonsingular": self.nonsingular,
            "fan_property": self.fan_property,
            "fan_property_witness": None if w is None else [sorted(w[0]), sorted(w[1])],
            "pure_dim": self.pure_dim,
            "wall_condition": self.wall_condition,
            "complete": self.complete,
            "first_failure": self.first_failure,
        }


def _walls(fan: Fan, d: int) -> dict[frozenset, int]:
    counts: dict[frozenset, int] = defaultdict(int)
    for s in fan.simplices:
        if len(s) == d:
            for i in s:
                counts[s - {i}] += 1
    return counts


def _pure_dim(fan: Fan) -> int | None:
    sizes = {len(s) for s in fan.maximal_simplices()}
    return sizes.pop() if len(sizes) == 1 else None


def _structural_report(fan: Fan, lattice: bool, method: str) -> FanReport:
    rep = FanReport()
    if downward_closure(fan.simplices) != fan.simplices:
        rep._fail("is_simplicial_complex", "simplices are not closed under taking faces")

    seen: dict[tuple, int] = {}
    for i, r in enumerate(fan.rays):
        if all(x == 0 for x in r):
            rep._fail("rays_primitive", f"ray {i} is zero")
        elif lattice and (any(Fraction(x).denominator != 1 for x in r) or not is_primitive(r)):
            rep._fail("rays_primitive", f"ray {i} is not a primitive integer vector")
        if r in seen:
            rep._fail("rays_primitive", f"rays {seen[r]} and {i} coincide")
        seen.setdefault(r, i)

    unused = set(range(len(fan.rays))) - fan.vertices()
    if unused:
        rep._fail("rays_used", f"rays {sorted(unused)} are not vertices of the complex")

    maximal = fan.maximal_simplices()
    for s in maximal:
        c = fan.cone(s)
        if rank(c.matrix(), len(s)) < len(s):
            rep._fail("nonsingular", f"rays of cone {sorted(s)} are linearly dependent")
        elif lattice and not is_unimodular(c):
            rep._fail("nonsingular", f"cone {sorted(s)} is not unimodular")

    if rep.nonsingular and rep.is_simplicial_complex:
        for a, b in combinations(maximal, 2):
            if separating_functional(fan, a, b, method) is None:
                rep.fan_property = False
                rep.fan_property_witness = (a, b)
                if rep.first_failure is None:
                    rep.first_failure = f"cones {sorted(a)} and {sorted(b)} overlap improperly"
                break
    else:
        rep.fan_property = False

    rep.pure_dim = _pure_dim(fan)
    if rep.pure_dim is not None:
        d = rep.pure_dim
        rep.wall_condition = d >= 1 and all(n == 2 for n in _walls(fan, d).values())
    return rep


def validate_fan(fan: Fan, lattice: bool = True, method: str = "auto") -> FanReport:
    """Check that ``fan`` is a simplicial (nonsingular) fan and whether it is complete.

    With ``lattice=False`` rays may be rational and cones only need linearly
    independent rays.
    """
    rep = _structural_report(fan, lattice, method)
    if rep.structural_ok:
        rep.complete = _complete(fan, fan.ambient_rank, rep)
    return rep


def _opposite(u: Sequence, v: Sequence) -> bool:
    k = next(i for i, x in enumerate(u) if x != 0)
    if v[k] == 0:
        return False
    c = Fraction(v[k]) / Fraction(u[k])
    return c < 0 and all(Fraction(y) == c * Fraction(x) for x, y in zip(u, v))


def _complete(fan: Fan, d: int, rep: FanReport) -> bool:
    if d == 0:
        return fan.simplices == frozenset({frozenset()})
    if d == 1:
        used = [fan.rays[i] for i in sorted(fan.vertices())]
        return any(_opposite(u, v) for u, v in combinations(used, 2))
    if rep.pure_dim != d:
        return False
    top = [s for s in fan.simplices if len(s) == d]
    if not top or not all(n == 2 for n in _walls(fan, d).values()):
        return False
    # dual graph connectivity
    by_wall: dict[frozenset, list[int]] = defaultdict(list)
    for k, s in enumerate(top):
        for i in s:
            by_wall[s - {i}].append(k)
    adj: dict[int, set[int]] = defaultdict(set)
    for members in by_wall.values():
        for a, b in combinations(members, 2):
            adj[a].add(b)
            adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(top)


def is_complete(fan: Fan, target_dim: int | None = None, lattice: bool = True, method: str = "auto") -> bool:
    """Wall-counting completeness test.

    ``target_dim`` defaults to the ambient rank. For ``d >= 2`` the fan is
    complete iff it is pure of dimension ``d``, every ``(d-1)``-simplex lies
    in exactly two ``d``-simplices and the ``d``-simplices form a connected
    dual graph.
    """
    d = fan.ambient_rank if target_dim is None else target_dim
    rep = _structural_report(fan, lattice, method)
    if not rep.structural_ok:
        raise PrereqFailed(rep.first_failure or "fan validation failed")
    return _complete(fan, d, rep)


def join_fans(f1: Fan, f2: Fan) -> Fan:
    """Block-diagonal product fan with simplices ``I (+) J``."""
    m1, m2 = f1.ambient_rank, f2.ambient_rank
    rays = [tuple(r) + (0,) * m2 for r in f1.rays] + [(0,) * m1 + tuple(r) for r in f2.rays]
    k1 = len(f1.rays)
    simplices = {a | frozenset(k1 + j for j in b) for a in f1.simplices for b in f2.simplices}
    return Fan(m1 + m2, tuple(rays), frozenset(simplices))
