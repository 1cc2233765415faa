"""
knotsig - Seifert-matrix knot invariants and satellite signature checks

Usage:
    knotsig sig trefoil --angle pi
    knotsig profile trefoil --resolution 360
    knotsig satellite trefoil trefoil 2
    knotsig alexander T3_4
    knotsig verify trefoil trefoil 2 --samples 360
    knotsig replay trefoil 3 --angle 1.0 [--epsilon -1] [--u 3]
    knotsig catalog
"""

import argparse
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from core.exceptions import ConfigError, KnotSigError
from core.invariants import (
    UnitCirclePoint,
    alexander_poly,
    compose_power,
    normalize_unit,
    profile_to_csv,
    signature_profile,
    tl_signature,
)
from core.lab import replay_general, report_to_csv, trace_to_log, verify_theorem
from core.satellite import SatelliteSpec, satellite_seifert
from core.seifert import KnotCatalog, KnotCatalogEntry, format_entry, resolve_knot
from utils import configure_logging, get_logger, write_text
from .angles import parse_angle
from .config import CliConfig, get_settings

log = get_logger(__name__)


class Context:
    """Per-invocation state: validated config and a lazily loaded catalog"""

    def __init__(self, config: CliConfig):
        self.config = config
        self._catalog: Optional[KnotCatalog] = None

    @property
    def catalog(self) -> KnotCatalog:
        if self._catalog is None:
            self._catalog = KnotCatalog.load(self.config.catalog_path)
        return self._catalog

    def knot(self, token: str) -> KnotCatalogEntry:
        return resolve_knot(token, self.catalog)

    def emit(self, text: str):
        write_text(text, self.config.output_path)


def cmd_sig(args: argparse.Namespace, ctx: Context) -> int:
    entry = ctx.knot(args.knot)
    point = UnitCirclePoint(parse_angle(args.angle))
    value = tl_signature(entry.seifert, point, ctx.config.tol_zero, ctx.config.tolerances)
    ctx.emit(f"{value}\n")
    return 0


def cmd_profile(args: argparse.Namespace, ctx: Context) -> int:
    entry = ctx.knot(args.knot)
    profile = signature_profile(
        entry.seifert,
        resolution=ctx.config.resolution,
        tau_jump=ctx.config.tol_jump,
        tau_root=ctx.config.tol_root,
        tau_zero=ctx.config.tol_zero,
    )
    ctx.emit(profile_to_csv(profile))
    return 0


def cmd_satellite(args: argparse.Namespace, ctx: Context) -> int:
    pattern = ctx.knot(args.pattern)
    companion = ctx.knot(args.companion)
    spec = SatelliteSpec(pattern.seifert, companion.seifert, args.n)
    satellite = satellite_seifert(spec)
    alexander = normalize_unit(
        alexander_poly(pattern.seifert) * compose_power(alexander_poly(companion.seifert), args.n)
    )
    name = args.name or f"{pattern.name}_{companion.name}_{args.n}"
    ctx.emit(format_entry(name, satellite, alexander))
    return 0


def cmd_alexander(args: argparse.Namespace, ctx: Context) -> int:
    entry = ctx.knot(args.knot)
    poly = alexander_poly(entry.seifert)
    ctx.emit(" ".join(str(c) for c in poly.coeffs) + "\n" + f"{poly}\n")
    return 0


def cmd_verify(args: argparse.Namespace, ctx: Context) -> int:
    pattern = ctx.knot(args.pattern)
    companion = ctx.knot(args.companion)
    spec = SatelliteSpec(pattern.seifert, companion.seifert, args.n)
    report = verify_theorem(
        spec,
        samples=args.samples,
        tau_jump=ctx.config.tol_jump,
        tau_root=ctx.config.tol_root,
        tau_zero=ctx.config.tol_zero,
        tol=ctx.config.tolerances,
    )
    if ctx.config.output_path:
        report_to_csv(report, ctx.config.output_path)
    metrics = report.metrics(f"verify {pattern.name} {companion.name} {args.n}")
    sys.stdout.write(metrics.summary() + "\n")
    return 0 if report.passed else 5


def cmd_replay(args: argparse.Namespace, ctx: Context) -> int:
    companion = ctx.knot(args.companion)
    trace = replay_general(
        companion.seifert,
        args.n,
        UnitCirclePoint(parse_angle(args.angle)),
        epsilon=args.epsilon,
        u=args.u,
        tau_zero=ctx.config.tol_zero,
        tol=ctx.config.tolerances,
        strict=False,
    )
    ctx.emit(trace_to_log(trace))
    return 0 if trace.passed else 5


def cmd_catalog(args: argparse.Namespace, ctx: Context) -> int:
    lines = [f"{entry.name} dim {entry.seifert.dim} genus {entry.seifert.genus}" for entry in ctx.catalog]
    ctx.emit("\n".join(lines) + "\n")
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, Context], int]] = {
    "sig": cmd_sig,
    "profile": cmd_profile,
    "satellite": cmd_satellite,
    "alexander": cmd_alexander,
    "verify": cmd_verify,
    "replay": cmd_replay,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsig",
        description="Seifert-matrix knot invariants and satellite signature checks",
    )
    parser.add_argument("--catalog", dest="catalog_path", help="knot catalog file")
    parser.add_argument("--tol-zero", dest="tol_zero", type=float, help="relative zero band for eigenvalues")
    parser.add_argument("--tol-jump", dest="tol_jump", type=float, help="angles this close to a jump are skipped")
    parser.add_argument("--tol-root", dest="tol_root", type=float, help="| |root| - 1 | filter")
    parser.add_argument("--tol-det", dest="tol_det", type=float, help="|det| above this counts as nonsingular")
    parser.add_argument("--resolution", type=int, help="uniform profile grid size")
    parser.add_argument("--out", dest="output_path", help="output file ('-' for stdout)")
    parser.add_argument("--log-level", dest="log_level", help="loguru level (stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sig", help="Tristram-Levine signature at one angle")
    p.add_argument("knot")
    p.add_argument("--angle", required=True, help="radians, or pi, pi/3, 2pi/3 ...")

    p = sub.add_parser("profile", help="signature profile as CSV")
    p.add_argument("knot")

    p = sub.add_parser("satellite", help="satellite Seifert matrix in catalog format")
    p.add_argument("pattern")
    p.add_argument("companion")
    p.add_argument("n", type=int)
    p.add_argument("--name", help="entry name in the output")

    p = sub.add_parser("alexander", help="canonical Alexander polynomial")
    p.add_argument("knot")

    p = sub.add_parser("verify", help="check the satellite signature formula around the circle")
    p.add_argument("pattern")
    p.add_argument("companion")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=360)

    p = sub.add_parser("replay", help="replay the congruence steps at one angle")
    p.add_argument("companion")
    p.add_argument("n", type=int)
    p.add_argument("--angle", required=True)
    p.add_argument("--epsilon", type=int, choices=(1, -1), default=1)
    p.add_argument("--u", type=int, default=None)

    sub.add_parser("catalog", help="list catalog knots")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # usage errors share exit 1 with configuration errors; 2 means unknown knot
        return 0 if exc.code in (0, None) else 1
    overrides = {
        key: getattr(args, key)
        for key in (
            "catalog_path", "tol_zero", "tol_jump", "tol_root", "tol_det", "resolution", "output_path", "log_level",
        )
    }
    try:
        config = CliConfig.from_sources(get_settings(), overrides)
    except (ValidationError, ConfigError) as exc:
        sys.stderr.write(f"knotsig: invalid configuration\n{exc}\n")
        return 1

    configure_logging(config.log_level, config.log_file)
    ctx = Context(config)
    try:
        return COMMANDS[args.command](args, ctx)
    except KnotSigError as exc:
        log.debug(f"{type(exc).__name__}: {exc}")
        sys.stderr.write(f"knotsig: {type(exc).__name__}: {exc}\n")
        return exc.exit_code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
