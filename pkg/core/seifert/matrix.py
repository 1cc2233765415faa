"""
Seifert matrices: representation, exact validation, symplectic normal form
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from core.exceptions import OddDimension, NonUnimodularSkewPart, NotValid
from utils import get_logger

log = get_logger(__name__)

Rows = Tuple[Tuple[int, ...], ...]


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free, over ZZ)"""
    n = len(rows)
    if n == 0:
        return 1
    dm = DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (n, n), ZZ)
    return int(dm.det())


@dataclass(frozen=True)
class SeifertMatrix:
    """
    Integer square matrix A representing a knot.

    A is only a Seifert matrix of a knot when A - A^T is unimodular; that is
    checked by validate(), not on construction, so invalid candidates can
    still be represented and reported on.
    """
    entries: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SeifertMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "SeifertMatrix":
        array = np.asarray(array)
        if array.size == 0:
            return cls(())
        if not np.all(array == np.round(array)):
            raise ValueError("Seifert matrix entries must be integers")
        return cls.from_rows(array.astype(np.int64).tolist())

    @classmethod
    def empty(cls) -> "SeifertMatrix":
        return cls(())

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.dim // 2

    @property
    def array(self) -> np.ndarray:
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(self.entries, dtype=np.int64)

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.entries)))

    def skew_part(self) -> List[List[int]]:
        """A - A^T as nested integer lists"""
        n = self.dim
        a = self.entries
        return [[a[i][j] - a[j][i] for j in range(n)] for i in range(n)]

    def symmetrized(self) -> np.ndarray:
        """A + A^T"""
        return self.array + self.array.T

    def __str__(self) -> str:
        if self.dim == 0:
            return "[]"
        return "\n".join(" ".join(str(v) for v in row) for row in self.entries)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a successful validate() call"""
    dim: int
    genus: int
    skew_determinant: int
    valid: bool = True


def validate(A: SeifertMatrix) -> ValidationReport:
    """
    Check that A is the Seifert matrix of a knot.

    Accepts iff dim is even and det(A - A^T) = 1, computed exactly.

    Raises:
        OddDimension: dim is odd
        NonUnimodularSkewPart: det(A - A^T) != 1, carries the determinant
    """
    if A.dim % 2:
        raise OddDimension(A.dim)
    det = integer_det(A.skew_part())
    if det != 1:
        raise NonUnimodularSkewPart(det)
    return ValidationReport(dim=A.dim, genus=A.genus, skew_determinant=det)


def standard_symplectic(dim: int) -> np.ndarray:
    """Block diagonal form with g copies of [[0, 1], [-1, 0]]"""
    J = np.zeros((dim, dim), dtype=object)
    for s in range(0, dim, 2):
        J[s, s + 1] = 1
        J[s + 1, s] = -1
    return J


@dataclass(frozen=True)
class NormalFormCertificate:
    """
    Integer change of basis P with P (A - A^T) P^T = standard form.

    verified is set after exact integer multiplication.
    """
    transform: Rows
    normal_form: Rows
    genus: int
    determinant: int
    verified: bool


def symplectic_normalize(A: SeifertMatrix) -> Tuple[np.ndarray, NormalFormCertificate]:
    """
    Reduce the intersection form A - A^T to standard block form over ZZ.

    Symplectic Gaussian elimination: for each hyperbolic pair, Euclid-reduce
    the pairings of the pivot vector against the remaining basis until one
    unit pairing remains, then split the pair off.

    Returns:
        (P, certificate) with P an integer matrix (object dtype) of det +-1

    Raises:
        NotValid: A fails validate()
    """
    try:
        validate(A)
    except (OddDimension, NonUnimodularSkewPart) as exc:
        raise NotValid(str(exc)) from exc

    d = A.dim
    W = np.array(A.skew_part(), dtype=object).reshape(d, d)
    basis = [np.array([1 if k == i else 0 for k in range(d)], dtype=object) for i in range(d)]

    def pairing(u: np.ndarray, v: np.ndarray) -> int:
        return int(u.dot(W.dot(v)))

    for s in range(0, d, 2):
        while True:
            values = {j: pairing(basis[s], basis[j]) for j in range(s + 1, d)}
            nonzero = [j for j, v in values.items() if v != 0]
            if not nonzero:
                raise NotValid(f"basis vector {s} pairs trivially with the rest")
            pivot = min(nonzero, key=lambda j: (abs(values[j]), j))
            if len(nonzero) == 1:
                break
            for j in nonzero:
                if j != pivot:
                    basis[j] = basis[j] - (values[j] // values[pivot]) * basis[pivot]

        unit = values[pivot]
        if abs(unit) != 1:
            raise NotValid(f"pairing gcd {abs(unit)} at step {s // 2}")
        basis[s + 1], basis[pivot] = basis[pivot], basis[s + 1]
        if unit == -1:
            basis[s + 1] = -basis[s + 1]

        e, f = basis[s], basis[s + 1]
        for j in range(s + 2, d):
            a = pairing(e, basis[j])
            b = pairing(f, basis[j])
            basis[j] = basis[j] + b * e - a * f

    P = np.array([list(row) for row in basis], dtype=object).reshape(d, d)
    normal = P.dot(W).dot(P.T) if d else np.zeros((0, 0), dtype=object)
    J = standard_symplectic(d)
    verified = bool(np.all(normal == J))
    det = integer_det(P.tolist()) if d else 1
    if not verified or abs(det) != 1:
        raise NotValid("symplectic reduction failed its exact certificate check")

    log.debug(f"symplectic normal form found for genus {A.genus}")
    cert = NormalFormCertificate(
        transform=tuple(tuple(int(v) for v in row) for row in P.tolist()),
        normal_form=tuple(tuple(int(v) for v in row) for row in normal.tolist()),
        genus=A.genus,
        determinant=det,
        verified=verified,
    )
    return P, cert
