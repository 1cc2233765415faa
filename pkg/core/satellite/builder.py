"""
Satellite Seifert matrices
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from core.exceptions import InvalidSpec, KnotSigError, OutOfRange
from core.seifert import SeifertMatrix, torus_knot_seifert, validate
from utils import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class SatelliteSpec:
    """
    Pattern M, companion N and winding number n of a satellite knot.

    Raises:
        InvalidSpec: either matrix fails validation or the winding is negative
    """
    pattern: SeifertMatrix
    companion: SeifertMatrix
    winding: int

    def __post_init__(self):
        if int(self.winding) != self.winding or self.winding < 0:
            raise InvalidSpec(f"winding number must be a nonnegative integer, got {self.winding}")
        object.__setattr__(self, "winding", int(self.winding))
        for role, matrix in (("pattern", self.pattern), ("companion", self.companion)):
            try:
                validate(matrix)
            except KnotSigError as exc:
                raise InvalidSpec(f"{role}: {exc}") from exc

    @property
    def genus(self) -> int:
        return self.pattern.genus + self.winding * self.companion.genus

    @property
    def dim(self) -> int:
        return self.pattern.dim + self.winding * self.companion.dim


def companion_grid(N: np.ndarray, n: int) -> np.ndarray:
    """n x n blocks, N on and above the diagonal, N^T below"""
    upper = np.triu(np.ones((n, n), dtype=np.int64))
    lower = np.tril(np.ones((n, n), dtype=np.int64), k=-1)
    return np.kron(upper, N) + np.kron(lower, N.T)


def satellite_seifert(spec: SatelliteSpec) -> SeifertMatrix:
    """
    Seifert matrix of the satellite: M in the top-left corner, then the
    companion grid, no coupling between the two.
    """
    M = spec.pattern.array
    blocks = [M] if M.size else []
    if spec.winding and spec.companion.dim:
        blocks.append(companion_grid(spec.companion.array, spec.winding))
    if not blocks:
        return SeifertMatrix.empty()

    A = SeifertMatrix.from_array(block_diag(*blocks))
    validate(A)
    log.debug(f"satellite dim {A.dim} genus {A.genus} (winding {spec.winding})")
    return A


def cable_spec(p: int, q: int, companion: SeifertMatrix) -> SatelliteSpec:
    """(p, q) cable of the companion: torus-knot pattern with winding p"""
    if p < 2:
        raise OutOfRange(f"cable needs p >= 2, got {p}")
    return SatelliteSpec(torus_knot_seifert(p, q), companion, p)


def cable_seifert(p: int, q: int, companion: SeifertMatrix) -> SeifertMatrix:
    return satellite_seifert(cable_spec(p, q, companion))
