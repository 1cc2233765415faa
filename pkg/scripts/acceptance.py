"""
Acceptance Script - Runs every acceptance grid and prints a summary table
"""

import argparse
import itertools
import math
import os
import sys

import numpy as np
import pandas as pd
from loguru import logger
from tqdm import tqdm

# Adjust path to include root directory
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.exceptions import KnotSigError
from core.hermitian import congruence_add, congruence_scale, direct_sum, kronecker, signature
from core.invariants import (
    TWO_PI,
    UnitCirclePoint,
    alexander_poly,
    compose_power,
    normalize_unit,
    tl_signature,
    unit_circle_roots,
)
from core.lab import (
    chako_form,
    generic_angles,
    replay_general,
    replay_theorem,
    sgnS_closed,
    shinohara_check,
    skew_factor,
    verify_theorem,
)
from core.satellite import SatelliteSpec, satellite_seifert
from core.seifert import KnotCatalog
from utils import RunMetrics, Timer, configure_logging

GRID_WINDINGS = range(6)


def theorem_grid(catalog: KnotCatalog, samples: int) -> RunMetrics:
    """Satellite formula and Alexander identity over every catalog pair"""
    metrics = RunMetrics("theorem + alexander identity")
    pairs = list(itertools.product(catalog, catalog, GRID_WINDINGS))
    with Timer() as t:
        for pattern, companion, n in tqdm(pairs, desc="Theorem grid"):
            spec = SatelliteSpec(pattern.seifert, companion.seifert, n)
            report = verify_theorem(spec, samples=samples)
            metrics.merge(len(report.checked), len(report.skipped), len(report.failures))

            lhs = alexander_poly(satellite_seifert(spec))
            rhs = normalize_unit(
                alexander_poly(pattern.seifert) * compose_power(alexander_poly(companion.seifert), n)
            )
            if lhs != rhs:
                logger.error(f"Alexander identity fails for {pattern.name}/{companion.name}/{n}")
                metrics.failures += 1
    metrics.elapsed_seconds = t.duration
    return metrics


def trefoil_oracle(catalog: KnotCatalog) -> RunMetrics:
    metrics = RunMetrics("trefoil oracle")
    trefoil = catalog.seifert("trefoil")
    roots = unit_circle_roots(alexander_poly(trefoil))
    checks = [
        tl_signature(trefoil, math.pi) == -2,
        alexander_poly(trefoil).coeffs == (1, -1, 1),
        len(roots) == 2,
        all(abs(r - e) < 1e-8 for r, e in zip(roots, (math.pi / 3, 5 * math.pi / 3))),
    ]
    metrics.merge(len(checks), 0, checks.count(False))
    return metrics


def replay_grid(catalog: KnotCatalog, per_case: int) -> RunMetrics:
    """Stepwise replay for n = 2..6"""
    metrics = RunMetrics("proof replay")
    companions = [entry for entry in catalog if entry.seifert.dim]
    with Timer() as t:
        for entry, n in tqdm(list(itertools.product(companions, range(2, 7))), desc="Replay"):
            for omega in generic_angles(per_case, [n], entry.seifert, seed=n):
                try:
                    trace = replay_theorem(entry.seifert, n, omega, strict=False)
                except KnotSigError as exc:
                    logger.error(f"{entry.name} n={n} angle {omega.angle:.6f}: {exc}")
                    metrics.failures += 1
                    continue
                metrics.merge(len(trace.checks), 0, len(trace.failures))
    metrics.elapsed_seconds = t.duration
    return metrics


def chako_grid(catalog: KnotCatalog, per_case: int) -> RunMetrics:
    metrics = RunMetrics("direct-sum cross-check")
    companions = [entry for entry in catalog if entry.seifert.dim]
    for entry, n in itertools.product(companions, range(1, 7)):
        for omega in generic_angles(per_case, [n], entry.seifert, seed=100 + n):
            comparison = chako_form(entry.seifert, n, omega)
            metrics.merge(1, 0, 0 if comparison.ok else 1)
    return metrics


def sgnS_sweep() -> RunMetrics:
    metrics = RunMetrics("closed sgn(S)")
    for n in range(3, 11):
        for k in range(100):
            x = TWO_PI * (k + 0.37) / 100
            numeric = signature(1j * skew_factor(n, UnitCirclePoint(x)))
            metrics.merge(1, 0, 0 if numeric == sgnS_closed(n, x) else 1)
    metrics.merge(1, 0, 0 if sgnS_closed(5, 0.0) == 0 else 1)
    return metrics


def shinohara_grid(catalog: KnotCatalog) -> RunMetrics:
    metrics = RunMetrics("parity at -1")
    for pattern, companion in itertools.product(catalog, catalog):
        report = shinohara_check(pattern.seifert, companion.seifert, range(7))
        metrics.merge(len(report.rows), 0, sum(not row.ok for row in report.rows))
    return metrics


def congruence_suite(seed: int = 0) -> RunMetrics:
    """Random Hermitian matrices under random elementary congruences"""
    metrics = RunMetrics("congruence properties")
    rng = np.random.default_rng(seed)
    for _ in range(200):
        dim = int(rng.integers(1, 9))
        X = rng.integers(-10, 11, (dim, dim)) + 1j * rng.integers(-10, 11, (dim, dim))
        H = (X + X.conj().T) / 2
        if abs(np.linalg.det(H)) <= 1e-12:
            continue
        before = signature(H)
        for _ in range(10):
            if dim > 1 and rng.random() < 0.5:
                i, j = rng.choice(dim, 2, replace=False)
                H = congruence_add(H, int(i), int(j), complex(*rng.normal(size=2)))
            else:
                H = congruence_scale(H, int(rng.integers(dim)), complex(*rng.normal(size=2)) + 1.0)
        metrics.merge(1, 0, 0 if signature(H) == before else 1)

    for _ in range(100):
        a, b = (int(v) for v in rng.integers(1, 4, 2))
        A = rng.normal(size=(a, a)) + 1j * rng.normal(size=(a, a))
        B = rng.normal(size=(b, b)) + 1j * rng.normal(size=(b, b))
        A, B = A + A.conj().T, B + B.conj().T
        additive = signature(direct_sum(A, B)) == signature(A) + signature(B)
        products = np.sort(np.outer(np.linalg.eigvalsh(A), np.linalg.eigvalsh(B)).ravel())
        kron_ok = np.allclose(np.linalg.eigvalsh(kronecker(A, B)), products, atol=1e-9)
        metrics.merge(2, 0, int(not additive) + int(not kron_ok))
    return metrics


def generalized_grid(catalog: KnotCatalog, per_case: int) -> RunMetrics:
    metrics = RunMetrics("generalized runs")
    trefoil = catalog.seifert("trefoil")
    for n in (3, 4, 5):
        for u in range(n // 2 + 1 + (n % 2), n + 1):
            for omega in generic_angles(per_case, [n, 2 * u - n], trefoil, seed=200 + 10 * n + u):
                trace = replay_general(trefoil, n, omega, epsilon=1, u=u, strict=False)
                metrics.merge(len(trace.checks), 0, len(trace.failures))
    for n in (3, 4, 5):
        for omega in generic_angles(per_case, [n], trefoil, seed=300 + n):
            trace = replay_general(trefoil, n, omega, epsilon=-1, u=n, strict=False)
            metrics.merge(len(trace.checks), 0, len(trace.failures))
    return metrics


def run_acceptance(samples: int = 360, per_case: int = 20, catalog_path=None, out=None) -> bool:
    catalog = KnotCatalog.load(catalog_path)
    logger.info(f"Catalog: {', '.join(catalog.names())}")

    results = [
        theorem_grid(catalog, samples),
        trefoil_oracle(catalog),
        replay_grid(catalog, per_case),
        chako_grid(catalog, per_case),
        sgnS_sweep(),
        shinohara_grid(catalog),
        congruence_suite(),
        generalized_grid(catalog, per_case),
    ]

    print("\n" + "=" * 60)
    print("ACCEPTANCE RESULTS")
    print("=" * 60)
    for metrics in results:
        status = "PASS" if metrics.passed else "FAIL"
        print(f"{status}  {metrics.summary()}  ({metrics.elapsed_seconds:.1f}s)")
    print("=" * 60 + "\n")

    if out:
        pd.DataFrame([
            {"name": m.name, "checked": m.checked, "skipped": m.skipped,
             "failures": m.failures, "seconds": m.elapsed_seconds}
            for m in results
        ]).to_csv(out, index=False, lineterminator="\n")
    return all(m.passed for m in results)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=360)
    parser.add_argument("--per-case", type=int, default=20)
    parser.add_argument("--catalog", type=str, default=None)
    parser.add_argument("--out", type=str, default=None, help="write the summary as CSV")
    parser.add_argument("--log-level", type=str, default="INFO")
    args = parser.parse_args()

    configure_logging(args.log_level)
    ok = run_acceptance(args.samples, args.per_case, args.catalog, args.out)
    sys.exit(0 if ok else 1)
