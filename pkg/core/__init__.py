from .hermitian import Inertia, inertia, congruence_add, congruence_scale, direct_sum, kronecker
from .seifert import SeifertMatrix, validate, symplectic_normalize, torus_knot_seifert, KnotCatalog
from .satellite import SatelliteSpec, satellite_seifert, cable_spec
from .invariants import (
    UnitCirclePoint,
    IntPolynomial,
    tl_form,
    tl_signature,
    alexander_poly,
    signature_profile,
)
from .lab import verify_theorem, replay_theorem, shinohara_check

__all__ = [
    "Inertia",
    "inertia",
    "congruence_add",
    "congruence_scale",
    "direct_sum",
    "kronecker",
    "SeifertMatrix",
    "validate",
    "symplectic_normalize",
    "torus_knot_seifert",
    "KnotCatalog",
    "SatelliteSpec",
    "satellite_seifert",
    "cable_spec",
    "UnitCirclePoint",
    "IntPolynomial",
    "tl_form",
    "tl_signature",
    "alexander_poly",
    "signature_profile",
    "verify_theorem",
    "replay_theorem",
    "shinohara_check",
]
