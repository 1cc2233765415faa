from .circle import (
    TWO_PI,
    UnitCirclePoint,
    wrap_angle,
    circular_distance,
    uniform_points,
    as_points,
)
from .polynomial import (
    IntPolynomial,
    as_polynomial,
    normalize_unit,
    units_equal,
    compose_power,
    torus_alexander,
    unit_circle_roots,
    cluster_angles,
    nth_root_angles,
)
from .signature import (
    SignatureProfile,
    tl_form,
    tl_signature,
    alexander_determinant,
    alexander_poly,
    signature_profile,
    profile_to_csv,
)

__all__ = [
    "TWO_PI",
    "UnitCirclePoint",
    "wrap_angle",
    "circular_distance",
    "uniform_points",
    "as_points",
    "IntPolynomial",
    "as_polynomial",
    "normalize_unit",
    "units_equal",
    "compose_power",
    "torus_alexander",
    "unit_circle_roots",
    "cluster_angles",
    "nth_root_angles",
    "SignatureProfile",
    "tl_form",
    "tl_signature",
    "alexander_determinant",
    "alexander_poly",
    "signature_profile",
    "profile_to_csv",
]
