"""
Tests for the satellite signature formula checks
"""

import itertools
import math

import pytest

from core.exceptions import VerificationFailed
from core.lab import AngleRecord, VerificationReport, jump_candidates, report_to_csv, shinohara_check, verify_theorem
from core.satellite import SatelliteSpec
from tests.conftest import CATALOG_NAMES


def test_verify_trefoil_trefoil(trefoil):
    report = verify_theorem(SatelliteSpec(trefoil, trefoil, 2), samples=120)
    assert report.passed
    assert len(report.records) == 120
    assert len(report.checked) > 100


def test_verify_at_minus_one(trefoil):
    """sigma_{-1}(K') = -2 + sigma_1(J) = -2 for even winding"""
    report = verify_theorem(SatelliteSpec(trefoil, trefoil, 2), angles=[math.pi])
    (record,) = report.records
    assert record.lhs == record.rhs == -2


def test_verify_skips_jumps(trefoil, unknot):
    report = verify_theorem(SatelliteSpec(unknot, trefoil, 1), angles=[math.pi / 3, 1.0])
    skipped, checked = report.records
    assert skipped.skipped
    assert skipped.equal is None
    assert "alexander root" in skipped.skip_reason
    assert checked.equal


def test_jump_candidates_include_nth_roots(trefoil, unknot):
    reasons = jump_candidates(SatelliteSpec(unknot, trefoil, 2))
    companion = sorted(a for a, why in reasons if why == "companion alexander root at w^n")
    assert companion == pytest.approx([math.pi / 6, 5 * math.pi / 6, 7 * math.pi / 6, 11 * math.pi / 6])


def test_report_metrics_and_raise(trefoil):
    spec = SatelliteSpec(trefoil, trefoil, 1)
    report = VerificationReport(spec, [AngleRecord(1.0, -2, 0), AngleRecord(2.0, -2, -2), AngleRecord(3.0, skip_reason="x")])
    metrics = report.metrics("demo")
    assert metrics.summary() == "demo: checked=2 skipped=1 failures=1"
    with pytest.raises(VerificationFailed):
        report.raise_for_failures()


def test_report_csv(trefoil, unknot):
    report = verify_theorem(SatelliteSpec(unknot, trefoil, 1), angles=[math.pi / 3, math.pi])
    lines = report_to_csv(report).splitlines()
    assert lines[0] == "angle,lhs,rhs,equal,skip_reason"
    assert lines[1].endswith(",,,,companion alexander root at w^n")
    assert lines[2].endswith(",-2,-2,true,")


def test_shinohara_parity(trefoil, figure_eight):
    report = shinohara_check(trefoil, trefoil, range(5))
    assert report.passed
    assert [row.lhs for row in report.rows] == [-2, -4, -2, -4, -2]
    assert shinohara_check(figure_eight, trefoil, range(4)).passed


@pytest.mark.slow
def test_full_catalog_grid(catalog):
    """Every pattern/companion pair, windings 0..5, 360 angles"""
    for p, c, n in itertools.product(CATALOG_NAMES, CATALOG_NAMES, range(6)):
        report = verify_theorem(SatelliteSpec(catalog.seifert(p), catalog.seifert(c), n), samples=360)
        assert report.passed, (p, c, n, report.failures[:3])
