"""
Hermitian forms: inertia, signature and the two elementary congruences

All matrices are dense complex128 numpy arrays. 0x0 matrices are legal
everywhere and carry inertia (0, 0, 0).
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.linalg import block_diag

from core.exceptions import (
    NotHermitian,
    IndexOutOfRange,
    EqualIndices,
    ZeroScale,
)
from utils import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical thresholds shared by the Hermitian routines.

    sym_factor: Hermitian check tolerance is sym_factor * (1 + max|H_ij|)
    zero: eigenvalues within zero * ||H||_2 of 0 count as zero
    det: |det H| above this counts as nonsingular
    """
    sym_factor: float = 1e-9
    zero: float = 1e-9
    det: float = 1e-12


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative and zero eigenvalues of a Hermitian matrix"""
    n_pos: int
    n_neg: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_pos + self.n_neg + self.n_zero

    def signature(self) -> int:
        return self.n_pos - self.n_neg

    @property
    def nonsingular(self) -> bool:
        return self.n_zero == 0

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(
            self.n_pos + other.n_pos,
            self.n_neg + other.n_neg,
            self.n_zero + other.n_zero,
        )

    def __str__(self) -> str:
        return f"({self.n_pos},{self.n_neg},{self.n_zero})"


def as_complex_matrix(H: ArrayLike) -> np.ndarray:
    """
    Coerce to a square, finite complex128 matrix (copy).

    Raises:
        ValueError: if the input is not square or holds NaN/inf
    """
    M = np.array(H, dtype=np.complex128)
    if M.size == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def sym_tolerance(H: np.ndarray, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    scale = float(np.max(np.abs(H))) if H.size else 0.0
    return tol.sym_factor * (1.0 + scale)


def _worst_entry(D: np.ndarray) -> Tuple[float, Tuple[int, int]]:
    if D.size == 0:
        return 0.0, (0, 0)
    flat = int(np.argmax(np.abs(D)))
    i, j = divmod(flat, D.shape[1])
    return float(np.abs(D[i, j])), (i, j)


def hermitian_deviation(H: ArrayLike) -> Tuple[float, Tuple[int, int]]:
    """Largest |H_ij - conj(H_ji)| and the entry where it occurs"""
    H = as_complex_matrix(H)
    return _worst_entry(H - H.conj().T)


def is_hermitian(H: ArrayLike, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    H = as_complex_matrix(H)
    return hermitian_deviation(H)[0] <= sym_tolerance(H, tol)


def is_skew_hermitian(H: ArrayLike, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    H = as_complex_matrix(H)
    deviation, _ = _worst_entry(H + H.conj().T)
    return deviation <= sym_tolerance(H, tol)


def check_hermitian(H: ArrayLike, tol: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """
    Validate and symmetrize.

    Returns:
        (H + H*) / 2 once the Hermitian check passes

    Raises:
        NotHermitian: with the offending entry pair
    """
    H = as_complex_matrix(H)
    deviation, entry = hermitian_deviation(H)
    bound = sym_tolerance(H, tol)
    if deviation > bound:
        raise NotHermitian(entry, deviation, bound)
    return (H + H.conj().T) / 2


def inertia(
    H: ArrayLike,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> Inertia:
    """
    Inertia of a Hermitian matrix via its eigenvalues.

    Eigenvalues within tau_zero * ||H||_2 of zero are counted as zero.

    Args:
        H: Hermitian matrix
        tau_zero: relative zero band, defaults to tol.zero

    Returns:
        Inertia triple
    """
    H = check_hermitian(H, tol)
    n = H.shape[0]
    if n == 0:
        return Inertia(0, 0, 0)

    tau_zero = tol.zero if tau_zero is None else tau_zero
    eigenvalues = np.linalg.eigvalsh(H)
    norm = float(np.max(np.abs(eigenvalues)))
    if norm == 0.0:
        return Inertia(0, 0, n)

    band = tau_zero * norm
    n_pos = int(np.count_nonzero(eigenvalues > band))
    n_neg = int(np.count_nonzero(eigenvalues < -band))
    return Inertia(n_pos, n_neg, n - n_pos - n_neg)


def signature(H: ArrayLike, tau_zero: Optional[float] = None, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    return inertia(H, tau_zero, tol).signature()


def skew_signature(T: ArrayLike, tau_zero: Optional[float] = None, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Signature of a skew-Hermitian matrix, taken as the signature of i*T"""
    return signature(1j * as_complex_matrix(T), tau_zero, tol)


def is_nonsingular(H: ArrayLike, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """|det H| > tol.det; the empty matrix counts as nonsingular"""
    H = as_complex_matrix(H)
    if H.shape[0] == 0:
        return True
    return bool(abs(np.linalg.det(H)) > tol.det)


def _check_index(H: np.ndarray, i: int) -> None:
    if not 0 <= i < H.shape[0]:
        raise IndexOutOfRange(f"index {i} outside 0..{H.shape[0] - 1}")


def congruence_add(H: ArrayLike, i: int, j: int, z: complex) -> np.ndarray:
    """
    Add z times row i to row j, then conj(z) times column i to column j.

    This is P H P* for P = I + z e_j e_i^T, so Hermitian-ness and (for
    nonsingular H) the signature are preserved.
    """
    H = check_hermitian(H)
    _check_index(H, i)
    _check_index(H, j)
    if i == j:
        raise EqualIndices(f"row {i} cannot be added to itself")

    R = H.copy()
    R[j, :] += z * R[i, :]
    R[:, j] += np.conj(z) * R[:, i]
    return R


def congruence_scale(H: ArrayLike, i: int, z: complex, tau_zero: float = DEFAULT_TOLERANCES.zero) -> np.ndarray:
    """Replace row i with z * row i, then column i with conj(z) * column i"""
    H = check_hermitian(H)
    _check_index(H, i)
    if abs(z) < tau_zero:
        raise ZeroScale(f"scale factor {z} is zero within {tau_zero:g}")

    R = H.copy()
    R[i, :] *= z
    R[:, i] *= np.conj(z)
    return R


def apply_congruence(H: ArrayLike, P: ArrayLike) -> np.ndarray:
    """P H P* for an explicit matrix P"""
    H = as_complex_matrix(H)
    P = as_complex_matrix(P)
    return P @ H @ P.conj().T


def direct_sum(*blocks: ArrayLike) -> np.ndarray:
    """Block-diagonal matrix of the given square blocks"""
    mats = [as_complex_matrix(b) for b in blocks]
    if not mats or all(m.shape[0] == 0 for m in mats):
        return np.zeros((0, 0), dtype=np.complex128)
    return block_diag(*[m for m in mats if m.shape[0]]).astype(np.complex128)


def kronecker(A: ArrayLike, B: ArrayLike) -> np.ndarray:
    """Standard Kronecker product A (x) B"""
    A = as_complex_matrix(A)
    B = as_complex_matrix(B)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    return np.kron(A, B)


def form_signature(X: ArrayLike) -> Tuple[int, bool]:
    """
    Signature of a Hermitian or skew-Hermitian matrix.

    Returns:
        (signature, is_skew) with skew matrices measured through i*X
    """
    X = as_complex_matrix(X)
    if is_hermitian(X):
        return signature(X), False
    if is_skew_hermitian(X):
        return skew_signature(X), True
    deviation, entry = hermitian_deviation(X)
    raise NotHermitian(entry, deviation, sym_tolerance(X))


def kronecker_signature_rule(A: ArrayLike, B: ArrayLike) -> int:
    """
    Predicted signature of A (x) B from the factors.

    sgn(A (x) B) = +sgn(A) sgn(B) when at least one factor is Hermitian and
    -sgn(A) sgn(B) when both are skew-Hermitian.
    """
    sgn_a, skew_a = form_signature(A)
    sgn_b, skew_b = form_signature(B)
    sign = -1 if (skew_a and skew_b) else 1
    return sign * sgn_a * sgn_b
