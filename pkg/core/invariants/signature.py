"""
Tristram-Levine signatures, Alexander polynomials and signature profiles
"""

from bisect import bisect_right
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from sympy import Poly
from sympy.polys.polyfuncs import interpolate

from core.exceptions import ProfileInconsistent
from core.hermitian import DEFAULT_TOLERANCES, Tolerances, signature
from core.seifert.matrix import SeifertMatrix, integer_det
from utils import get_logger, write_text
from .circle import TWO_PI, UnitCirclePoint, circular_distance, uniform_points, wrap_angle
from .polynomial import (
    DEFAULT_TAU_ROOT,
    IntPolynomial,
    cluster_angles,
    normalize_unit,
    t,
    unit_circle_roots,
)

log = get_logger(__name__)

DEFAULT_TAU_JUMP = 1e-6

AngleLike = Union[UnitCirclePoint, float]
MatrixLike = Union[SeifertMatrix, np.ndarray]


def _point(omega: AngleLike) -> UnitCirclePoint:
    return omega if isinstance(omega, UnitCirclePoint) else UnitCirclePoint(float(omega))


def _array(A: MatrixLike) -> np.ndarray:
    if isinstance(A, SeifertMatrix):
        return A.array.astype(np.float64)
    return np.asarray(A, dtype=np.complex128)


def tl_form(A: MatrixLike, omega: AngleLike) -> np.ndarray:
    """
    The Hermitian form (1 - w) A + (1 - conj(w)) A^T.

    Exactly Hermitian entrywise, and exactly zero at w = 1.
    """
    w = _point(omega).omega
    M = _array(A)
    return (1 - w) * M + (1 - w.conjugate()) * M.T


def tl_signature(
    A: MatrixLike,
    omega: AngleLike,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> int:
    """sigma_w(A); 0 at w = 1"""
    point = _point(omega)
    if point.is_one:
        return 0
    return signature(tl_form(A, point), tau_zero, tol)


def alexander_determinant(A: SeifertMatrix) -> IntPolynomial:
    """
    det(tA - A^T) as an exact integer polynomial.

    Evaluated at the integers 0..dim with fraction-free determinants and
    interpolated; the degree is at most dim, so the result is exact.
    """
    dim = A.dim
    if dim == 0:
        return IntPolynomial((1,))
    M = A.array
    points = [(k, integer_det((k * M - M.T).tolist())) for k in range(dim + 1)]
    expr = interpolate(points, t)
    return IntPolynomial.from_sympy(Poly(expr, t))


@lru_cache(maxsize=256)
def alexander_poly(A: SeifertMatrix) -> IntPolynomial:
    """Alexander polynomial, canonical up to units"""
    return normalize_unit(alexander_determinant(A))


@dataclass
class SignatureProfile:
    """
    sigma_w sampled around the circle.

    Arc k runs from jump_angles[k-1] to jump_angles[k] (arc 0 wraps through
    angle 0); with no jumps the whole circle is arc 0.
    """
    samples: List[Tuple[float, int]]
    jump_angles: List[float] = field(default_factory=list)
    jump_multiplicities: List[int] = field(default_factory=list)
    arc_values: List[int] = field(default_factory=list)

    def arc_index(self, angle: float) -> int:
        if not self.jump_angles:
            return 0
        return bisect_right(self.jump_angles, wrap_angle(angle)) % len(self.jump_angles)

    def value_at(self, angle: float) -> int:
        return self.arc_values[self.arc_index(angle)]

    @property
    def values(self) -> List[int]:
        return [value for _, value in self.samples]


def _arc_midpoints(jumps: List[float]) -> List[float]:
    if not jumps:
        return [np.pi]
    mids = []
    for k, end in enumerate(jumps):
        start = jumps[k - 1] - TWO_PI if k == 0 else jumps[k - 1]
        mids.append(wrap_angle((start + end) / 2))
    return mids


def signature_profile(
    A: SeifertMatrix,
    resolution: int = 360,
    tau_jump: float = DEFAULT_TAU_JUMP,
    tau_root: float = DEFAULT_TAU_ROOT,
    tau_zero: Optional[float] = None,
) -> SignatureProfile:
    """
    Sample sigma_w at every arc midpoint plus a uniform grid.

    Jump candidates are the unit-circle roots of the Alexander polynomial;
    grid points within tau_jump of a jump are left out.

    Raises:
        ProfileInconsistent: two samples on one arc disagree
    """
    clusters = cluster_angles(unit_circle_roots(alexander_poly(A), tau_root), gap=tau_jump)
    jumps = [angle for angle, _ in clusters]
    multiplicities = [mult for _, mult in clusters]

    angles = set(_arc_midpoints(jumps))
    for point in uniform_points(resolution):
        if all(circular_distance(point.angle, j) > tau_jump for j in jumps):
            angles.add(point.angle)

    profile = SignatureProfile(
        samples=[], jump_angles=jumps, jump_multiplicities=multiplicities,
    )
    by_arc: Dict[int, List[int]] = {}
    for angle in sorted(angles):
        value = tl_signature(A, angle, tau_zero)
        profile.samples.append((angle, value))
        by_arc.setdefault(profile.arc_index(angle), []).append(value)

    for arc in range(max(len(jumps), 1)):
        values = by_arc[arc]
        if len(set(values)) != 1:
            raise ProfileInconsistent(arc, tuple(sorted(set(values))))
        profile.arc_values.append(values[0])

    log.debug(f"profile dim {A.dim}: {len(profile.samples)} samples, jumps {jumps}")
    return profile


def profile_to_csv(profile: SignatureProfile, path: Optional[str] = None) -> str:
    """
    CSV export: header angle,omega_re,omega_im,signature then one
    '# jump <angle> multiplicity <m>' comment line per jump.
    """
    omegas = [UnitCirclePoint(angle).omega for angle, _ in profile.samples]
    df = pd.DataFrame({
        "angle": [angle for angle, _ in profile.samples],
        "omega_re": [w.real for w in omegas],
        "omega_im": [w.imag for w in omegas],
        "signature": profile.values,
    })
    text = df.to_csv(index=False, float_format="%.12g", lineterminator="\n")
    for angle, mult in zip(profile.jump_angles, profile.jump_multiplicities):
        text += f"# jump {angle:.12g} multiplicity {mult}\n"
    if path is not None:
        write_text(text, path)
    return text
