"""
Integer polynomials in t and their unit-circle roots
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol, ZZ, div

from core.exceptions import ZeroPolynomial, OutOfRange
from .circle import TWO_PI, wrap_angle

t = Symbol("t")

DEFAULT_TAU_ROOT = 1e-8


@dataclass(frozen=True)
class IntPolynomial:
    """Integer coefficients, index = degree. Trailing zeros are stripped."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        coeffs = []
        for c in reversed(poly.all_coeffs()):
            if not c.is_integer:
                raise ValueError(f"non-integer coefficient {c}")
            coeffs.append(int(c))
        return cls(tuple(coeffs))

    def to_sympy(self) -> Poly:
        if self.is_zero:
            return Poly(0, t, domain=ZZ)
        return Poly(list(reversed(self.coeffs)), t, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lowest_degree(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ZeroPolynomial("zero polynomial has no lowest degree")

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, z: complex) -> complex:
        value = 0j
        for c in reversed(self.coeffs):
            value = value * z + c
        return value

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return str(self.to_sympy().as_expr())


def as_polynomial(coeffs: Iterable[int]) -> IntPolynomial:
    return IntPolynomial(tuple(coeffs))


def normalize_unit(p: IntPolynomial) -> IntPolynomial:
    """
    Canonical representative modulo units +-t^k.

    Divides by t^(lowest degree), then flips sign if the constant term is
    negative. Two polynomials agree up to units iff their canonical forms
    are equal.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    coeffs = p.coeffs[p.lowest_degree:]
    if coeffs[0] < 0:
        coeffs = tuple(-c for c in coeffs)
    return IntPolynomial(coeffs)


def units_equal(p: IntPolynomial, q: IntPolynomial) -> bool:
    return normalize_unit(p) == normalize_unit(q)


def compose_power(p: IntPolynomial, n: int) -> IntPolynomial:
    """p(t^n); for n = 0 the constant p(1)"""
    if n < 0:
        raise OutOfRange(f"power must be nonnegative, got {n}")
    if n == 0:
        return IntPolynomial((sum(p.coeffs),))
    out = [0] * (n * max(p.degree, 0) + 1)
    for k, c in enumerate(p.coeffs):
        out[k * n] = c
    return IntPolynomial(tuple(out))


def torus_alexander(p: int, q: int) -> IntPolynomial:
    """(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), exact"""
    num = Poly(t ** (p * q) - 1, t, domain=ZZ) * Poly(t - 1, t, domain=ZZ)
    den = Poly(t ** p - 1, t, domain=ZZ) * Poly(t ** q - 1, t, domain=ZZ)
    quotient, remainder = div(num, den)
    if not remainder.is_zero:
        raise ValueError(f"torus quotient for ({p}, {q}) is not exact")
    return IntPolynomial.from_sympy(quotient)


def _polish(coeffs: np.ndarray, root: complex) -> complex:
    """One Newton step on a root of the polynomial with given coefficients (high to low)"""
    slope = np.polyval(np.polyder(coeffs), root)
    if slope == 0:
        return root
    return root - np.polyval(coeffs, root) / slope


@lru_cache(maxsize=2048)
def _unit_circle_roots(coeffs: Tuple[int, ...], tau_root: float) -> Tuple[float, ...]:
    poly = IntPolynomial(coeffs).to_sympy()
    _, factors = poly.sqf_list()
    angles: List[float] = []
    for factor, multiplicity in factors:
        if factor.degree() < 1:
            continue
        fc = np.array([float(c) for c in factor.all_coeffs()])
        for root in np.roots(fc):
            root = _polish(fc, complex(root))
            if abs(abs(root) - 1.0) <= tau_root:
                angles.extend([wrap_angle(math.atan2(root.imag, root.real))] * multiplicity)
    return tuple(sorted(angles))


def unit_circle_roots(p: IntPolynomial, tau_root: float = DEFAULT_TAU_ROOT) -> List[float]:
    """
    Angles in [0, 2pi) of the roots of p lying within tau_root of |z| = 1.

    Roots are found per square-free factor, so repeated roots keep full
    accuracy; each angle is repeated according to its multiplicity.

    Raises:
        ZeroPolynomial: p is zero
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    return list(_unit_circle_roots(p.coeffs, float(tau_root)))


def cluster_angles(angles: Sequence[float], gap: float = 1e-9) -> List[Tuple[float, int]]:
    """Merge sorted angles closer than gap (also across 0 / 2pi) into (angle, multiplicity)"""
    clusters: List[Tuple[float, int]] = []
    for a in sorted(angles):
        if clusters and a - clusters[-1][0] <= gap:
            angle, mult = clusters[-1]
            clusters[-1] = (angle, mult + 1)
        else:
            clusters.append((a, 1))
    if len(clusters) > 1 and clusters[0][0] + TWO_PI - clusters[-1][0] <= gap:
        angle, mult = clusters.pop()
        first_angle, first_mult = clusters[0]
        clusters[0] = (first_angle, first_mult + mult)
    return clusters


def nth_root_angles(angles: Iterable[float], n: int) -> List[float]:
    """Angles of all t with t^n on the given unit-circle angles"""
    if n < 1:
        return []
    out = [wrap_angle((a + TWO_PI * k) / n) for a in angles for k in range(n)]
    return sorted(out)
