"""
Points on the unit circle, carried by their angle
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List

TWO_PI = 2.0 * math.pi

# angles this close to a multiple of 2pi are taken to be exactly 0
ANGLE_SNAP = 1e-12


def wrap_angle(x: float) -> float:
    """Reduce to [0, 2pi), snapping to 0 near multiples of 2pi"""
    r = math.fmod(float(x), TWO_PI)
    if r < 0:
        r += TWO_PI
    if r < ANGLE_SNAP or TWO_PI - r < ANGLE_SNAP:
        return 0.0
    return r


def circular_distance(a: float, b: float) -> float:
    d = abs(wrap_angle(a) - wrap_angle(b))
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class UnitCirclePoint:
    """
    omega = e^{ix} for an angle x in [0, 2pi).

    Powers are formed by multiplying the angle, never by complex powering.
    """
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "angle", wrap_angle(self.angle))

    @classmethod
    def from_turns(cls, turns: Fraction) -> "UnitCirclePoint":
        """Point at angle 2pi * turns"""
        turns = Fraction(turns) % 1
        return cls(TWO_PI * turns.numerator / turns.denominator)

    @property
    def omega(self) -> complex:
        c, s = math.cos(self.angle), math.sin(self.angle)
        # exact values at quarter turns
        if abs(c) < 1e-15:
            c = 0.0
        if abs(s) < 1e-15:
            s = 0.0
        return complex(c, s)

    @property
    def is_one(self) -> bool:
        return self.angle == 0.0

    def power(self, n: int) -> "UnitCirclePoint":
        return UnitCirclePoint(self.angle * n)

    def conjugate(self) -> "UnitCirclePoint":
        return UnitCirclePoint(-self.angle)

    def distance_to(self, angle: float) -> float:
        return circular_distance(self.angle, angle)

    def is_root_of_unity(self, n: int, tol: float = 1e-12) -> bool:
        """omega^n == 1 within tol (in angle)"""
        if n < 1:
            return False
        return self.power(n).is_one or circular_distance(self.angle * n, 0.0) <= tol * max(n, 1)


def uniform_points(count: int) -> List[UnitCirclePoint]:
    """count equally spaced points starting at angle 0"""
    return [UnitCirclePoint(TWO_PI * k / count) for k in range(count)]


def as_points(angles: Iterable[float]) -> List[UnitCirclePoint]:
    return [a if isinstance(a, UnitCirclePoint) else UnitCirclePoint(a) for a in angles]
