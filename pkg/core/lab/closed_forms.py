"""
Closed-form predictions the replay is compared against
"""

import math
from typing import Tuple, Union

import numpy as np

from core.exceptions import OutOfRange, RootOfUnityExcluded
from core.invariants import TWO_PI, UnitCirclePoint

AngleLike = Union[UnitCirclePoint, float]

# n x / 2pi within this of an integer counts as an integer
INTEGER_SNAP = 1e-9


def as_point(omega: AngleLike) -> UnitCirclePoint:
    return omega if isinstance(omega, UnitCirclePoint) else UnitCirclePoint(float(omega))


def power(omega: UnitCirclePoint, e: int) -> complex:
    """omega^e by angle multiplication"""
    return omega.power(e).omega


def sgnS_closed(n: int, x: float) -> int:
    """
    Signature of the skew factor S from the closed formula
    n + 1 - 2 ceil(n x / 2pi), less one when n x / 2pi is an integer.
    0 at x = 0.
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if x == 0:
        return 0
    r = n * x / TWO_PI
    k = round(r)
    if abs(r - k) <= INTEGER_SNAP:
        return n + 1 - 2 * k - 1
    return n + 1 - 2 * math.ceil(r)


def chako_diagonal(n: int, omega: AngleLike) -> np.ndarray:
    """
    Entries (w^{k+1} - 1) / ((w - 1)(w^k - 1)) for k = 1..n-1.

    Each entry is purely imaginary.

    Raises:
        RootOfUnityExcluded: w^k = 1 for some 1 <= k <= n
    """
    omega = as_point(omega)
    for k in range(1, n + 1):
        if omega.power(k).is_one:
            raise RootOfUnityExcluded(f"omega^{k} = 1 at angle {omega.angle:.12g}")
    w1 = power(omega, 1) - 1
    return np.array(
        [(power(omega, k + 1) - 1) / (w1 * (power(omega, k) - 1)) for k in range(1, n)],
        dtype=np.complex128,
    )


def sgnS_from_chako(n: int, x: float) -> int:
    """Sum of sign(i * d_k) over the diagonal entries d_k"""
    d = chako_diagonal(n, x)
    return int(sum(np.sign((1j * d).real)))


def displayed_skew_factor(n: int, omega: AngleLike) -> np.ndarray:
    """
    The averaged skew factor in its commonly displayed closed form.

    Diagonal (conj(w) - w) / 2; the entry d above the diagonal is
    -((n-2-d) w + (n-d) conj(w)) / (2(n-2)) + (n-1-d)/(n-2), and below the
    diagonal the negated conjugate. Only compared against, never asserted.
    """
    if n < 3:
        raise OutOfRange(f"n must be >= 3, got {n}")
    w = as_point(omega).omega
    wb = w.conjugate()
    size = n - 1
    S = np.zeros((size, size), dtype=np.complex128)
    for i in range(size):
        S[i, i] = (wb - w) / 2
        for j in range(i + 1, size):
            d = j - i
            S[i, j] = -((n - 2 - d) * w + (n - d) * wb) / (2 * (n - 2)) + (n - 1 - d) / (n - 2)
            S[j, i] = -np.conj(S[i, j])
    return S


def step2_blocks(N: np.ndarray, n: int, omega: AngleLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Diagonal, upper and lower blocks D, U, L of the remainder C after the
    first two congruence steps:

        F = (1 - w^n) N + (1 - conj(w)^n) N^T,  s = |1 + w + ... + w^{n-1}|^2
        D = (1 - w) N + (1 - conj(w)) N^T - F / s
        U = (2 - w - conj(w)) N - F / s
        L = (2 - w - conj(w)) N^T - F / s
    """
    omega = as_point(omega)
    w = omega.omega
    wn = power(omega, n)
    if not omega.is_one and omega.power(n).is_one:
        raise RootOfUnityExcluded(f"omega is an {n}th root of unity other than 1")
    s = abs(sum(power(omega, k) for k in range(n))) ** 2
    N = np.asarray(N, dtype=np.complex128)
    F = (1 - wn) * N + (1 - wn.conjugate()) * N.T
    g = 2 - 2 * w.real
    D = (1 - w) * N + (1 - w.conjugate()) * N.T - F / s
    U = g * N - F / s
    L = g * N.T - F / s
    return D, U, L


def displayed_step2_blocks(N: np.ndarray, n: int, omega: AngleLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """D, U, L in their commonly displayed form (no 1/s factor)"""
    omega = as_point(omega)
    w = omega.omega
    wb = w.conjugate()
    wn = power(omega, n)
    wnb = wn.conjugate()
    N = np.asarray(N, dtype=np.complex128)
    D = (wn - w) * N + (wnb - wb) * N.T
    U = (wn - w - wb + 1) * N + (wnb - 1) * N.T
    L = (wn - 1) * N + (wnb - wb - w + 1) * N.T
    return D, U, L
