"""Kommandozeile fuer Profiltabellen, Verifikationssuiten, Riesz-Potentiale und Schur-Scans.

Exit-Codes: 0 bestanden, 1 Verifikation fehlgeschlagen, 2 Konfigurationsfehler,
3 numerischer Fehler. Alle Dateien werden atomar geschrieben."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import numpy as np
from pydantic import ValidationError

import config
from double_forms.multi_index import FormError, label, multi_indices
from estimates.errors import EstimateError
from estimates.lp_range import lp_range
from estimates.schur import schur_scan
from geometry.points import GeometryError, Point
from models.run_config import ConfigError, RunConfig, load_run_config
from models.types import OutputFormat, Suite
from operators.bump import bump_form
from operators.laplacian import laplacian_field
from operators.potential import QuadratureError, SupportViolationError, riesz_potential
from orchestrator.report import write_report
from orchestrator.runner import run_verification_sync
from riesz_kernel.assembly import KernelSingularityError
from riesz_kernel.kernel_spec import KernelSpec, KernelSpecError
from riesz_kernel.normalization import CalibrationError, calibrate
from riesz_kernel.profiles import RadialProfiles, radial_profiles
from riesz_kernel.quadrature import ProfileConstructionError
from special_functions.hypergeometric import HypergeometricError
from util.finite_differences import StencilError
from util.output import write_csv, write_json

_LOGGER = logging.getLogger("hypr.cli")

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

CONFIG_ERRORS = (ConfigError, KernelSpecError, ValidationError, FormError, GeometryError, SupportViolationError)
NUMERICAL_ERRORS = (
    QuadratureError,
    ProfileConstructionError,
    HypergeometricError,
    CalibrationError,
    KernelSingularityError,
    StencilError,
    EstimateError,
)

DEFAULT_OUTPUTS = {
    "profiles": "profiles",
    "verify": "verify_report.json",
    "potential": "potential",
    "schur-scan": "schur_scan",
}


def _kernel_spec(run_config: RunConfig) -> KernelSpec:
    return KernelSpec(
        n=run_config.n,
        m=run_config.m,
        harmonic_shift=run_config.harmonic_shift,
        a2_perturbation=run_config.a2_perturbation,
    )


def _output_path(run_config: RunConfig, command: str) -> Path:
    path = Path(run_config.out or DEFAULT_OUTPUTS[command])
    if command != "verify" and not path.suffix:
        path = path.with_suffix("." + run_config.format.value)
    return path


def _write_table(path: Path, fmt: OutputFormat, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    rows = [list(row) for row in rows]
    if fmt is OutputFormat.JSON:
        return write_json(path, [dict(zip(header, row)) for row in rows])
    return write_csv(path, header, rows)


def profile_grid(count: int) -> np.ndarray:
    """Gleichabstaendiges Gitter r_k = k / (count + 1), k = 1..count, im offenen Intervall (0, 1)."""

    return np.arange(1, count + 1, dtype=float) / (count + 1)


def _profiles(run_config: RunConfig, spec: KernelSpec, analytic: bool) -> RadialProfiles:
    profiles = radial_profiles(spec)
    if analytic:
        return profiles
    return calibrate(spec, profiles, run_config.quadrature, run_config.tolerances).profiles


def cmd_profiles(run_config: RunConfig, analytic: bool = False) -> int:
    """Tabelliert A1..A4 auf `grid_points` Radien."""

    spec = _kernel_spec(run_config)
    profiles = _profiles(run_config, spec, analytic)
    r = profile_grid(run_config.grid_points)
    values = profiles.evaluate(r)
    rows = zip(r.tolist(), values.a1.tolist(), values.a2.tolist(), values.a3.tolist(), values.a4.tolist())
    path = _write_table(_output_path(run_config, "profiles"), run_config.format, ("r", "A1", "A2", "A3", "A4"), rows)
    _LOGGER.info("wrote %d profile rows to %s", run_config.grid_points, path)
    return EXIT_OK


def cmd_verify(run_config: RunConfig, suite: Suite) -> int:
    """Fuehrt die Suite aus und schreibt JSON- und Markdown-Bericht."""

    _kernel_spec(run_config)
    report = run_verification_sync(run_config, suite)
    json_path, markdown_path = write_report(report, _output_path(run_config, "verify"))
    _LOGGER.info("verification report written to %s and %s", json_path, markdown_path)
    for failed in report.failed_checks:
        _LOGGER.warning("failed: %s.%s %s", failed.suite, failed.name, failed.detail)
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def read_form_descriptor(path: str | Path, n: int) -> dict[str, Any]:
    """Liest {"center": [...], "radius": r, "coefficients": {"1,3": a, ...}}.

    Raises:
        ConfigError: Datei unlesbar oder Felder fehlen.
    """

    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"form descriptor unreadable: {exc}") from exc
    missing = [key for key in ("center", "radius", "coefficients") if key not in data]
    if missing:
        raise ConfigError(f"form descriptor lacks {', '.join(missing)}")
    if len(data["center"]) != n:
        raise ConfigError(f"form center must have {n} coordinates")
    if not isinstance(data["coefficients"], dict):
        raise ConfigError("coefficients must map multi-index labels such as '1,3' to numbers")
    return data


def read_points(path: str | Path, n: int) -> np.ndarray:
    """Halbraumpunkte aus JSON (Liste von Listen) oder CSV (optionale Kopfzeile).

    Raises:
        ConfigError: Datei unlesbar oder falsche Spaltenzahl.
    """

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"points file unreadable: {exc}") from exc
    try:
        if path.suffix.lower() == ".json":
            rows = json.loads(text)
        else:
            rows = [row for row in csv.reader(io.StringIO(text)) if row]
            if rows and not _numeric(rows[0]):
                rows = rows[1:]
        points = np.asarray(rows, dtype=float)
    except (json.JSONDecodeError, ValueError) as exc:
        raise ConfigError(f"points file malformed: {exc}") from exc
    if points.ndim != 2 or points.shape[1] != n:
        raise ConfigError(f"points must have {n} coordinates per row")
    return points


def _numeric(row: Sequence[str]) -> bool:
    try:
        [float(cell) for cell in row]
    except ValueError:
        return False
    return True


def cmd_potential(
    run_config: RunConfig,
    form_path: str,
    points_path: str,
    laplacian: bool = False,
    analytic: bool = False,
) -> int:
    """L eta an den angegebenen Punkten samt Fehlerschaetzung (Differenz zur halbierten Quadratur)."""

    spec = _kernel_spec(run_config)
    n, m = spec.n, spec.m
    descriptor = read_form_descriptor(form_path, n)
    points = read_points(points_path, n)
    profiles = _profiles(run_config, spec, analytic)
    center = Point(np.asarray(descriptor["center"], dtype=float))
    form = bump_form(n, m, center, float(descriptor["radius"]), descriptor["coefficients"])
    labels = [label(index).replace(",", "_") for index in multi_indices(n, m)]
    header = [f"x{k + 1}" for k in range(n)] + [f"L_{name}" for name in labels] + ["error"]
    source = laplacian_field(form, run_config.fd) if laplacian else None
    if source is not None:
        header += [f"LDelta_{name}" for name in labels] + [f"eta_{name}" for name in labels]
    q = run_config.quadrature
    rows = []
    for coords in points:
        x = Point(coords)
        value = riesz_potential(form, spec, profiles, x, q).coeffs
        coarse = riesz_potential(form, spec, profiles, x, q.coarsened(), refine=False).coeffs
        row = coords.tolist() + value.tolist() + [float(np.linalg.norm(value - coarse))]
        if source is not None:
            row += riesz_potential(source, spec, profiles, x, q).coeffs.tolist()
            row += form.at(x).coeffs.tolist()
        rows.append(row)
    path = _write_table(_output_path(run_config, "potential"), run_config.format, header, rows)
    _LOGGER.info("wrote potential at %d points to %s", len(rows), path)
    return EXIT_OK


def p_grid(p_min: float, p_max: float, p_step: float) -> np.ndarray:
    count = int(np.floor((p_max - p_min) / p_step + 1e-9)) + 1
    return np.round(p_min + p_step * np.arange(count), 12)


def cmd_schur_scan(run_config: RunConfig) -> int:
    """Machbarkeit des Schur-Gewichts ueber dem p-Gitter mit den Randspalten p1, p2."""

    n, m = run_config.n, run_config.m
    if abs(n - 2 * m) <= 1:
        raise ConfigError(f"schur-scan needs |n - 2m| > 1, got (n, m) = ({n}, {m})")
    if run_config.p_max < run_config.p_min:
        raise ConfigError("p-max must not be smaller than p-min")
    bounds = lp_range(n, m)
    rows = schur_scan(n, m, p_grid(run_config.p_min, run_config.p_max, run_config.p_step))
    header = ("p", "feasible", "alpha_low", "alpha_high", "p1", "p2")
    table = ((row.p, row.feasible, row.alpha_low, row.alpha_high, bounds.p1, bounds.p2) for row in rows)
    path = _write_table(_output_path(run_config, "schur-scan"), run_config.format, header, table)
    _LOGGER.info("wrote schur scan for (n, m) = (%d, %d) to %s", n, m, path)
    return EXIT_OK


def build_arg_parser() -> argparse.ArgumentParser:
    """Erzeugt den CLI-Argumentparser."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="Dimension des H^n")
    common.add_argument("--m", type=int, help="Formgrad")
    common.add_argument("--config", help="JSON-Laufkonfiguration")
    common.add_argument("--out", help="Ausgabepfad")
    common.add_argument("--seed", type=int, help="Seed fuer Zufallssamples")
    common.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], help="Tabellenformat")
    common.add_argument("--perturb-a2", type=float, dest="a2_perturbation", help="Relative Stoerung von A2 (Debug)")

    parser = argparse.ArgumentParser(
        prog="hypr-riesz",
        description="Riesz-Kerne auf m-Formen im hyperbolischen Raum",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    profiles = commands.add_parser("profiles", parents=[common], help="Tabelle r, A1..A4")
    profiles.add_argument("--grid-points", type=int, dest="grid_points", help="Anzahl Radien")
    profiles.add_argument("--analytic", action="store_true", help="Analytische statt kalibrierter Normierung")

    verify = commands.add_parser("verify", parents=[common], help="Invariantensuiten ausfuehren")
    verify.add_argument("--suite", choices=[suite.value for suite in Suite], help="Suite (Standard: all)")

    potential = commands.add_parser("potential", parents=[common], help="Riesz-Potential einer Bumpform")
    potential.add_argument("form", help="JSON-Beschreibung der Bumpform")
    potential.add_argument("points", help="Punkte als CSV oder JSON")
    potential.add_argument("--laplacian", action="store_true", help="Zusaetzlich L(Delta eta) und eta ausgeben")
    potential.add_argument("--analytic", action="store_true", help="Analytische statt kalibrierter Normierung")

    scan = commands.add_parser("schur-scan", parents=[common], help="Schur-Test ueber einem p-Gitter")
    scan.add_argument("--p-min", type=float, dest="p_min")
    scan.add_argument("--p-max", type=float, dest="p_max")
    scan.add_argument("--p-step", type=float, dest="p_step")
    return parser


_OVERRIDE_KEYS = (
    "n",
    "m",
    "out",
    "seed",
    "format",
    "a2_perturbation",
    "grid_points",
    "suite",
    "p_min",
    "p_max",
    "p_step",
)


def _dispatch(args: argparse.Namespace) -> int:
    overrides = {key: getattr(args, key, None) for key in _OVERRIDE_KEYS}
    run_config = load_run_config(args.config, overrides)
    if args.command == "profiles":
        return cmd_profiles(run_config, analytic=args.analytic)
    if args.command == "verify":
        return cmd_verify(run_config, run_config.suite)
    if args.command == "potential":
        return cmd_potential(run_config, args.form, args.points, laplacian=args.laplacian, analytic=args.analytic)
    return cmd_schur_scan(run_config)


def main(argv: Optional[Iterable[str]] = None) -> int:
    """CLI-Einstiegspunkt."""

    logging.basicConfig(
        level=getattr(logging, config.HYPR_LOG_LEVEL, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    args = build_arg_parser().parse_args(None if argv is None else list(argv))
    try:
        return _dispatch(args)
    except CONFIG_ERRORS as error:
        print(f"configuration error: {error}", file=sys.stderr)
        return EXIT_CONFIG
    except NUMERICAL_ERRORS as error:
        print(f"numerical failure: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":  # pragma: no cover - manueller Aufruf
    sys.exit(main())
