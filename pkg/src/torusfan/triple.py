"""Triples (fan, complex subspace, torus) and their invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import Condition1Failed, InvalidStratum, ObstructionFails, PrereqFailed
from .exact.gaussian import GaussianRational
from .exact.lattice import saturation_split
from .exact.linalg import inverse, matvec, rank, real_projection_basis, rref, solve, transpose
from .polyhedral import Fan, FanReport, _complete, cone_membership, join_fans, validate_fan


@dataclass(frozen=True)
class Triple:
    torus_rank: int
    fan: Fan
    h_basis: tuple = ()

    def __post_init__(self):
        if self.fan.ambient_rank != self.torus_rank:
            raise ValueError(f"fan lives in rank {self.fan.ambient_rank}, torus has rank {self.torus_rank}")
        h = tuple(tuple(GaussianRational.coerce(x) for x in w) for w in self.h_basis)
        for w in h:
            if len(w) != self.torus_rank:
                raise ValueError(f"h_basis vector of length {len(w)} in rank {self.torus_rank}")
        object.__setattr__(self, "h_basis", h)

    @property
    def complex_dim(self) -> int:
        return self.torus_rank - len(self.h_basis)

    @property
    def quotient_dim(self) -> int:
        return 2 * self.complex_dim - self.torus_rank

    def minimal_orbits(self) -> list[frozenset]:
        """Maximal simplices of size ``2n - m``."""
        d = self.quotient_dim
        return [s for s in self.fan.maximal_simplices() if len(s) == d]


class Check(NamedTuple):
    ok: bool
    witness: str | None = None


@dataclass
class ValidationReport:
    checks: dict[str, Check] = field(default_factory=dict)
    fan_report: FanReport | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.ok]


@dataclass(frozen=True)
class QuotientFan:
    quotient_dim: int
    projection_matrix: list
    fan: Fan


def condition_one(T: Triple) -> bool:
    return len(real_projection_basis(T.h_basis, T.torus_rank)) == 2 * len(T.h_basis)


def _projection(T: Triple) -> list[list[Fraction]]:
    m = T.torus_rank
    R, pivots = rref(real_projection_basis(T.h_basis, m), m) if T.h_basis else ([], [])
    free = [c for c in range(m) if c not in pivots]
    rows = []
    for c in free:
        row = [Fraction(0)] * m
        row[c] = Fraction(1)
        for r, p in zip(R, pivots):
            row[p] = -r[c]
        rows.append(row)
    return rows


def quotient_fan(T: Triple) -> QuotientFan:
    """Image of the fan under the projection killing ``p(h)``.

    Quotient coordinates are the non-pivot coordinates of the echelon basis
    of ``p(h)``; image rays stay rational.
    """
    if not condition_one(T):
        raise Condition1Failed("real projection of h is not injective")
    P = _projection(T)
    rays = tuple(tuple(matvec(P, r)) for r in T.fan.rays)
    return QuotientFan(len(P), P, Fan(len(P), rays, T.fan.simplices))


def _direction(v: Sequence) -> tuple | None:
    """Primitive integer representative of the ray through ``v``."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        return None
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def validate_c2(T: Triple) -> ValidationReport:
    """Check every condition for ``T`` to be an object of the category."""
    rep = ValidationReport()
    m, h = T.torus_rank, T.h_basis
    fr = validate_fan(T.fan)
    rep.fan_report = fr
    rep.checks["fan"] = Check(fr.structural_ok, fr.first_failure)

    h_indep = rank(h, m) == len(h) if h else True
    rep.checks["h_independent"] = Check(h_indep, None if h_indep else "h_basis is linearly dependent over C")
    dim_ok = T.quotient_dim >= 0
    rep.checks["dimension"] = Check(dim_ok, None if dim_ok else f"2n - m = {T.quotient_dim} < 0")

    c1 = h_indep and condition_one(T)
    rep.checks["condition_1"] = Check(
        c1, None if c1 else f"dim p(h) = {len(real_projection_basis(h, m))} < {2 * len(h)}")

    names = ["quotient_cones_independent", "quotient_cones_distinct",
             "quotient_fan_property", "quotient_complete"]
    if not (c1 and dim_ok and fr.structural_ok):
        for name in names:
            rep.checks[name] = Check(False, "not evaluated: earlier condition failed")
        return rep

    Q = quotient_fan(T)
    qf = Q.fan
    bad = next((s for s in T.fan.maximal_simplices()
                if rank(qf.ray_matrix(s), len(s)) < len(s)), None)
    rep.checks[names[0]] = Check(bad is None, None if bad is None else f"images of cone {sorted(bad)} are dependent")

    seen: dict[tuple, int] = {}
    for i, r in enumerate(qf.rays):
        d = _direction(r)
        if d is not None and d in seen:
            rep.warnings.append(f"rays {seen[d]} and {i} have the same image direction")
        seen.setdefault(d, i)
    images: dict[frozenset, frozenset] = {}
    clash = None
    for s in T.fan.sorted_simplices():
        key = frozenset(_direction(qf.rays[i]) for i in s)
        if key in images and clash is None:
            clash = (images[key], s)
        images.setdefault(key, s)
    rep.checks[names[1]] = Check(
        clash is None, None if clash is None else f"cones {sorted(clash[0])} and {sorted(clash[1])} have equal images")

    if bad is not None or clash is not None:
        rep.checks[names[2]] = Check(False, "not evaluated: image cones degenerate")
        rep.checks[names[3]] = Check(False, "not evaluated: image cones degenerate")
        return rep
    qrep = validate_fan(qf, lattice=False)
    rep.checks[names[2]] = Check(qrep.fan_property, qrep.first_failure)
    complete = qrep.structural_ok and _complete(qf, Q.quotient_dim, qrep)
    rep.checks[names[3]] = Check(complete, None if complete else f"image fan is not complete in dimension {Q.quotient_dim}")
    return rep


def orbit_limit(T: Triple, v: Sequence) -> frozenset | None:
    """The simplex ``I`` with ``v`` in the relative interior of ``C_I``, or ``None``."""
    for s in T.fan.sorted_simplices():
        mem = cone_membership(T.fan.cone(s), v)
        if mem is not None and mem.interior:
            return s
    return None


class HertTuple(NamedTuple):
    h: int
    e: int
    r: int
    t: int


def hert(T: Triple, I: Iterable[int]) -> HertTuple:
    """HERT invariant of the orbit stratum belonging to simplex ``I``."""
    I = frozenset(I)
    if I not in T.fan.simplices:
        raise InvalidStratum(f"{sorted(I)} is not a simplex of the fan")
    k = len(I)
    return HertTuple(0, k, T.quotient_dim - k, T.torus_rank - k)


class KaehlerResult(NamedTuple):
    passes: bool
    dim_f: int
    required: int


def kaehler_obstruction(T: Triple) -> KaehlerResult:
    """Compare the span of the rays with ``dim M - dim G``.

    A failure certifies that the manifold is not Kaehler.
    """
    rays = [list(r) for r in T.fan.rays]
    dim_f = rank(rays, T.torus_rank) if rays else 0
    return KaehlerResult(dim_f == T.quotient_dim, dim_f, T.quotient_dim)


@dataclass(frozen=True)
class DecompositionResult:
    fiber_fan: Fan
    base_rank: int
    base_h_basis: tuple
    fiber_lattice_basis: tuple
    base_lattice_basis: tuple

    def recombine(self) -> Fan:
        """Join the fiber fan with the origin fan of the base, back in ``Z^m`` coordinates."""
        joined = join_fans(self.fiber_fan, Fan.origin(self.base_rank))
        basis = list(self.fiber_lattice_basis) + list(self.base_lattice_basis)
        B = transpose(basis, joined.ambient_rank)
        rays = tuple(tuple(matvec(B, r)) for r in joined.rays)
        return Fan(joined.ambient_rank, rays, joined.simplices)


def product_decomposition(T: Triple) -> DecompositionResult:
    """Split ``T`` as a complete fiber fan over a compact torus base."""
    k = kaehler_obstruction(T)
    if not k.passes:
        raise ObstructionFails(f"dim f = {k.dim_f} but 2n - m = {k.required}")
    m = T.torus_rank
    L, E = saturation_split([list(r) for r in T.fan.rays], m)
    B = transpose(L + E, m)
    r = len(L)
    fiber_rays = []
    for ray in T.fan.rays:
        coords = solve(transpose(L, m), list(ray), ncols=r).x
        fiber_rays.append(tuple(int(c) for c in coords))
    fiber = Fan(r, tuple(fiber_rays), T.fan.simplices)
    Binv = inverse(B) if m else []
    base_h = tuple(tuple(GaussianRational.coerce(x) for x in matvec(Binv, list(w))[r:]) for w in T.h_basis)
    if base_h and rank(base_h, m - r) != len(base_h):
        raise PrereqFailed("projection of h to the base is not injective")
    fr = validate_fan(fiber)
    if not fr.complete:
        raise PrereqFailed("fiber fan is not complete")
    return DecompositionResult(fiber, m - r, base_h, tuple(map(tuple, L)), tuple(map(tuple, E)))
