"""Morphisms between triples, stored as integer lattice matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeMismatch
from .exact.gaussian import GaussianRational
from .exact.lattice import int_det, int_inverse, invariant_factors, is_primitive
from .exact.linalg import in_span, matmul, matvec, rank, same_span
from .polyhedral import cone_membership, simplex_key
from .triple import Check, Triple


@dataclass(frozen=True)
class Morphism:
    source: Triple
    target: Triple
    matrix: list

    def __post_init__(self):
        if any(int(x) != x for row in self.matrix for x in row):
            raise ValueError("morphism matrix must be integral")
        A = [[int(x) for x in row] for row in self.matrix]
        rows, cols = self.target.torus_rank, self.source.torus_rank
        if len(A) != rows or any(len(r) != cols for r in A):
            raise ShapeMismatch(f"matrix must be {rows} x {cols}")
        object.__setattr__(self, "matrix", A)

    def apply(self, v) -> list:
        if not self.matrix:
            return []
        return matvec(self.matrix, list(v))

    def apply_complex(self, w) -> list[GaussianRational]:
        return [sum((a * GaussianRational.coerce(x) for a, x in zip(row, w)), GaussianRational())
                for row in self.matrix]


@dataclass
class MorphismReport:
    checks: dict[str, Check] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return all(c.ok for c in self.checks.values())


def _container(M: Morphism, index) -> frozenset | None:
    tf = M.target.fan
    images = [M.apply(M.source.fan.rays[i]) for i in sorted(index)]
    for s in sorted(tf.simplices, key=simplex_key, reverse=True):
        cone = tf.cone(s)
        if all(cone_membership(cone, v) is not None for v in images):
            return s
    return None


def validate_morphism(M: Morphism) -> MorphismReport:
    """Cone containment for every maximal cone and ``A(h1) <= h2``."""
    rep = MorphismReport()
    bad = next((s for s in M.source.fan.maximal_simplices() if _container(M, s) is None), None)
    rep.checks["cone_containment"] = Check(
        bad is None, None if bad is None else f"image of cone {sorted(bad)} lies in no target cone")
    h2 = [list(w) for w in M.target.h_basis]
    miss = next((k for k, w in enumerate(M.source.h_basis) if not in_span(h2, M.apply_complex(w))), None)
    rep.checks["h_maps_into_h"] = Check(
        miss is None, None if miss is None else f"image of h_basis[{miss}] is not in the target subspace")
    return rep


def compose_morphisms(f: Morphism, g: Morphism) -> Morphism:
    """``g`` after ``f``."""
    if f.target.torus_rank != g.source.torus_rank or f.target != g.source:
        raise ShapeMismatch("g.source must equal f.target")
    A = matmul(g.matrix, f.matrix) if g.matrix and f.matrix else [[0] * f.source.torus_rank for _ in g.matrix]
    return Morphism(f.source, g.target, A)


def identity_morphism(T: Triple) -> Morphism:
    m = T.torus_rank
    return Morphism(T, T, [[int(i == j) for j in range(m)] for i in range(m)])


def _ray_map(M: Morphism) -> dict[int, int] | None:
    """Index map sending each source ray to the target ray equal to its image."""
    lookup = {tuple(r): j for j, r in enumerate(M.target.fan.rays)}
    out = {}
    for i, r in enumerate(M.source.fan.rays):
        j = lookup.get(tuple(M.apply(r)))
        if j is None:
            return None
        out[i] = j
    return out


def is_isomorphism(M: Morphism) -> bool:
    """Unimodular square matrix carrying fan to fan and ``h1`` onto ``h2``."""
    A = M.matrix
    m = M.source.torus_rank
    if m != M.target.torus_rank or abs(int_det(A)) != 1:
        return False
    rmap = _ray_map(M)
    if rmap is None or len(set(rmap.values())) != len(rmap) or len(rmap) != len(M.target.fan.rays):
        return False
    mapped = frozenset(frozenset(rmap[i] for i in s) for s in M.source.fan.simplices)
    if mapped != M.target.fan.simplices:
        return False
    images = [M.apply_complex(w) for w in M.source.h_basis]
    return same_span(images, [list(w) for w in M.target.h_basis], m)


def inverse_morphism(M: Morphism) -> Morphism:
    return Morphism(M.target, M.source, int_inverse(M.matrix))


@dataclass(frozen=True)
class PrincipalResult:
    is_principal: bool
    kernel_dim: int
    kernel_component_divisors: tuple
    reason: str | None = None


def principal_bundle_check(M: Morphism) -> PrincipalResult:
    """Whether the induced map is a principal bundle with fiber ``ker(alpha)``.

    Requires the rays to map bijectively onto the target's primitive rays
    and the torus homomorphism to be surjective.
    """
    A = M.matrix
    m1, m2 = M.source.torus_rank, M.target.torus_rank
    r = rank(A, m1) if A else 0
    divisors = tuple(d for d in invariant_factors(A, ncols=m1) if d > 1) if A else ()
    kernel_dim = m1 - r

    reason = None
    images = [tuple(M.apply(v)) for v in M.source.fan.rays]
    targets = [tuple(v) for v in M.target.fan.rays]
    if r != m2:
        reason = f"rank {r} < target rank {m2}: alpha is not surjective"
    elif any(not any(v) or not is_primitive(v) for v in images):
        reason = "some ray image is not primitive"
    elif len(set(images)) != len(images):
        reason = "two rays have the same image"
    elif set(images) != set(targets) or len(images) != len(targets):
        reason = "ray images differ from the target rays"
    return PrincipalResult(reason is None, kernel_dim, divisors, reason)
