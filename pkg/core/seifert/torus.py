"""
Torus knot Seifert matrices
"""

from math import gcd

import numpy as np

from core.exceptions import NotCoprime, OutOfRange
from .matrix import SeifertMatrix, validate


def _fibre_block(k: int) -> np.ndarray:
    """k x k matrix with -1 on the diagonal and +1 on the superdiagonal"""
    return -np.eye(k, dtype=np.int64) + np.eye(k, k=1, dtype=np.int64)


def torus_knot_seifert(p: int, q: int) -> SeifertMatrix:
    """
    Seifert matrix of the (p, q) torus knot.

    Built as -(V_{p-1} (x) V_{q-1}) from the fibre surface of x^p + y^q,
    giving dimension (p-1)(q-1). T(2, 3) yields [[-1, 1], [0, -1]].

    Raises:
        OutOfRange: p or q below 2
        NotCoprime: gcd(p, q) != 1
    """
    if p < 2 or q < 2:
        raise OutOfRange(f"torus knot parameters must be >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"({p}, {q}) are not coprime")

    A = SeifertMatrix.from_array(-np.kron(_fibre_block(p - 1), _fibre_block(q - 1)))
    validate(A)
    return A
