"""
Parity formula for sigma_{-1} of a satellite
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from core.hermitian import DEFAULT_TOLERANCES, Tolerances
from core.invariants import UnitCirclePoint, tl_signature
from core.satellite import SatelliteSpec, satellite_seifert
from core.seifert import SeifertMatrix
from utils import get_logger

log = get_logger(__name__)

MINUS_ONE = UnitCirclePoint.from_turns(0.5)


@dataclass
class ParityRow:
    winding: int
    lhs: int
    parity_rhs: int
    theorem_rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.parity_rhs == self.theorem_rhs


@dataclass
class ShinoharaReport:
    rows: List[ParityRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.ok for row in self.rows)


def shinohara_check(
    M: SeifertMatrix,
    N: SeifertMatrix,
    windings: Iterable[int] = range(7),
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ShinoharaReport:
    """
    At w = -1: sigma(K') = sigma(K) for even n and sigma(K) + sigma(J) for
    odd n, which is the satellite formula with (-1)^n = +-1.
    """
    sigma_K = tl_signature(M, MINUS_ONE, tau_zero, tol)
    sigma_J = tl_signature(N, MINUS_ONE, tau_zero, tol)
    report = ShinoharaReport()
    for n in windings:
        satellite = satellite_seifert(SatelliteSpec(M, N, n))
        row = ParityRow(
            winding=n,
            lhs=tl_signature(satellite, MINUS_ONE, tau_zero, tol),
            parity_rhs=sigma_K if n % 2 == 0 else sigma_K + sigma_J,
            theorem_rhs=sigma_K + tl_signature(N, MINUS_ONE.power(n), tau_zero, tol),
        )
        if not row.ok:
            log.warning(f"parity formula fails at n {n}: {row}")
        report.rows.append(row)
    return report
