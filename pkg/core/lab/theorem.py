"""
End-to-end check of sigma_w(K') = sigma_w(K) + sigma_{w^n}(J)
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import pandas as pd

from core.exceptions import VerificationFailed
from core.hermitian import DEFAULT_TOLERANCES, Tolerances
from core.invariants import (
    UnitCirclePoint,
    alexander_poly,
    as_points,
    circular_distance,
    nth_root_angles,
    tl_signature,
    unit_circle_roots,
    uniform_points,
)
from core.invariants.polynomial import DEFAULT_TAU_ROOT
from core.invariants.signature import DEFAULT_TAU_JUMP
from core.satellite import SatelliteSpec, satellite_seifert
from utils import RunMetrics, Timer, get_logger, write_text

log = get_logger(__name__)


@dataclass
class AngleRecord:
    angle: float
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    skip_reason: str = ""

    @property
    def skipped(self) -> bool:
        return bool(self.skip_reason)

    @property
    def equal(self) -> Optional[bool]:
        if self.skipped:
            return None
        return self.lhs == self.rhs


@dataclass
class VerificationReport:
    """Per-angle results of verify_theorem"""
    spec: SatelliteSpec
    records: List[AngleRecord] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def checked(self) -> List[AngleRecord]:
        return [r for r in self.records if not r.skipped]

    @property
    def skipped(self) -> List[AngleRecord]:
        return [r for r in self.records if r.skipped]

    @property
    def failures(self) -> List[AngleRecord]:
        return [r for r in self.checked if not r.equal]

    @property
    def passed(self) -> bool:
        return not self.failures

    def metrics(self, name: str = "verify") -> RunMetrics:
        return RunMetrics(
            name=name,
            checked=len(self.checked),
            skipped=len(self.skipped),
            failures=len(self.failures),
            elapsed_seconds=self.elapsed_seconds,
        )

    def raise_for_failures(self):
        if self.failures:
            first = self.failures[0]
            raise VerificationFailed(
                f"{len(self.failures)} angle(s) fail; first at {first.angle:.12g}: "
                f"lhs {first.lhs} != rhs {first.rhs}"
            )


def jump_candidates(spec: SatelliteSpec, tau_root: float = DEFAULT_TAU_ROOT) -> List[Tuple[float, str]]:
    """Unit-circle Alexander roots of the pattern, of Delta_N(t^n) and of the satellite"""
    candidates = [(a, "pattern alexander root") for a in unit_circle_roots(alexander_poly(spec.pattern), tau_root)]
    if spec.winding:
        companion_roots = unit_circle_roots(alexander_poly(spec.companion), tau_root)
        candidates += [
            (a, "companion alexander root at w^n")
            for a in nth_root_angles(companion_roots, spec.winding)
        ]
    satellite = satellite_seifert(spec)
    candidates += [(a, "satellite alexander root") for a in unit_circle_roots(alexander_poly(satellite), tau_root)]
    return candidates


def verify_theorem(
    spec: SatelliteSpec,
    angles: Optional[Iterable] = None,
    samples: int = 360,
    tau_jump: float = DEFAULT_TAU_JUMP,
    tau_root: float = DEFAULT_TAU_ROOT,
    tau_zero: Optional[float] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> VerificationReport:
    """
    Compare both sides of the satellite formula at each angle.

    Angles within tau_jump of a jump candidate are skipped, since the
    signature is indeterminate there. Roots of unity are checked directly;
    w^n is formed by angle multiplication so it is exactly 1 there.

    Args:
        spec: pattern, companion and winding number
        angles: angles or UnitCirclePoints, default `samples` uniform points
    """
    points = uniform_points(samples) if angles is None else as_points(angles)
    report = VerificationReport(spec)

    with Timer() as timer:
        satellite = satellite_seifert(spec)
        candidates = jump_candidates(spec, tau_root)
        for point in points:
            reason = next(
                (why for root, why in candidates if circular_distance(point.angle, root) <= tau_jump),
                "",
            )
            if reason:
                report.records.append(AngleRecord(point.angle, skip_reason=reason))
                continue
            lhs = tl_signature(satellite, point, tau_zero, tol)
            rhs = (
                tl_signature(spec.pattern, point, tau_zero, tol)
                + tl_signature(spec.companion, point.power(spec.winding), tau_zero, tol)
            )
            report.records.append(AngleRecord(point.angle, lhs, rhs))
    report.elapsed_seconds = timer.duration

    if report.failures:
        log.warning(f"winding {spec.winding}: {len(report.failures)} failing angle(s)")
    log.debug(
        f"winding {spec.winding}: {len(report.checked)} checked, "
        f"{len(report.skipped)} skipped in {report.elapsed_seconds:.3f}s"
    )
    return report


def report_to_csv(report: VerificationReport, path: Optional[str] = None) -> str:
    """CSV with header angle,lhs,rhs,equal,skip_reason"""
    df = pd.DataFrame({
        "angle": [r.angle for r in report.records],
        "lhs": pd.array([r.lhs for r in report.records], dtype="Int64"),
        "rhs": pd.array([r.rhs for r in report.records], dtype="Int64"),
        "equal": ["" if r.equal is None else str(r.equal).lower() for r in report.records],
        "skip_reason": [r.skip_reason for r in report.records],
    })
    text = df.to_csv(index=False, float_format="%.12g", lineterminator="\n")
    if path is not None:
        write_text(text, path)
    return text
