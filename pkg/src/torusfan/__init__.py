"""Exact combinatorics of compact complex manifolds with maximal torus actions.

Objects are triples ``(fan, h, torus)``: a nonsingular fan in ``R^m``, a
complex subspace ``h`` of ``C^m`` and the standard torus of rank ``m``.
"""

from .category import (Morphism, PrincipalResult, compose_morphisms, identity_morphism,
                       inverse_morphism, is_isomorphism, principal_bundle_check, validate_morphism)
from .constructions import (AdmissibilityReport, LiftResult, gallery, make_calabi_eckmann,
                            make_complete_toric, make_hopf, make_torus, moment_angle_admissibility,
                            moment_angle_lift)
from .exact import GaussianRational, I
from .polyhedral import (Cone, Fan, FanReport, cone_membership, dual_basis, is_complete,
                         is_unimodular, join_fans, separating_functional, validate_fan)
from .triple import (DecompositionResult, HertTuple, QuotientFan, Triple, ValidationReport, hert,
                     kaehler_obstruction, orbit_limit, product_decomposition, quotient_fan,
                     validate_c2)

__all__ = [
    "AdmissibilityReport", "Cone", "DecompositionResult", "Fan", "FanReport", "GaussianRational",
    "HertTuple", "I", "LiftResult", "Morphism", "PrincipalResult", "QuotientFan", "Triple",
    "ValidationReport", "compose_morphisms", "cone_membership", "dual_basis", "gallery", "hert",
    "identity_morphism", "inverse_morphism", "is_complete", "is_isomorphism", "is_unimodular",
    "join_fans", "kaehler_obstruction", "make_calabi_eckmann", "make_complete_toric", "make_hopf",
    "make_torus", "moment_angle_admissibility", "moment_angle_lift", "orbit_limit",
    "principal_bundle_check", "product_decomposition", "quotient_fan", "separating_functional",
    "validate_c2", "validate_fan", "validate_morphism",
]
