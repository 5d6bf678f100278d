"""End-to-end-Tests der Kommandozeile `hypr-riesz`."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np
import pytest

import config
from scripts.riesz_cli import (
    EXIT_CONFIG,
    EXIT_OK,
    build_arg_parser,
    main,
    p_grid,
    profile_grid,
    read_points,
)
from models.run_config import ConfigError

COARSE_RUN = {
    "quadrature": {
        "radial_nodes": 6,
        "radial_panels": 3,
        "polar_nodes": 8,
        "transverse_nodes": 3,
        "azimuth_nodes": 6,
    }
}


@pytest.fixture(autouse=True)
def _quiet_logs(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(config, "LOG_DIR", str(tmp_path / "logs"))
    monkeypatch.setattr(config, "HYPR_TRACE_ENABLED", False)


def _read_csv(path: Path) -> list[dict[str, str]]:
    with path.open(encoding="utf-8", newline="") as handle:
        return list(csv.DictReader(handle))


def test_profile_grid_and_p_grid() -> None:
    np.testing.assert_allclose(profile_grid(3), [0.25, 0.5, 0.75])
    grid = p_grid(1.05, 6.0, 0.05)
    assert grid.size == 100
    assert grid[0] == 1.05 and grid[-1] == 6.0


def test_parser_requires_a_command() -> None:
    with pytest.raises(SystemExit):
        build_arg_parser().parse_args([])


def test_profiles_table(tmp_path: Path) -> None:
    out = tmp_path / "profiles.csv"
    code = main(["profiles", "--n", "5", "--m", "1", "--grid-points", "7", "--analytic", "--out", str(out)])
    assert code == EXIT_OK
    rows = _read_csv(out)
    assert len(rows) == 7
    assert list(rows[0]) == ["r", "A1", "A2", "A3", "A4"]
    assert float(rows[3]["r"]) == pytest.approx(0.5)
    assert all(np.isfinite(float(row["A1"])) for row in rows)


def test_profiles_default_suffix_follows_format(tmp_path: Path) -> None:
    out = tmp_path / "table"
    code = main(
        ["profiles", "--n", "4", "--m", "0", "--grid-points", "3", "--analytic"]
        + ["--format", "json", "--out", str(out)]
    )
    assert code == EXIT_OK
    rows = json.loads((tmp_path / "table.json").read_text(encoding="utf-8"))
    assert [row["r"] for row in rows] == pytest.approx([0.25, 0.5, 0.75])
    assert all(row["A2"] == 0.0 for row in rows)


def test_critical_degree_is_a_config_error(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["profiles", "--n", "5", "--m", "2", "--analytic", "--out", str(tmp_path / "p.csv")])
    assert code == EXIT_CONFIG
    assert "configuration error" in capsys.readouterr().err
    assert not (tmp_path / "p.csv").exists()


def test_schur_scan_window(tmp_path: Path) -> None:
    out = tmp_path / "scan.json"
    code = main(["schur-scan", "--n", "5", "--m", "1", "--format", "json", "--out", str(out)])
    assert code == EXIT_OK
    rows = json.loads(out.read_text(encoding="utf-8"))
    assert len(rows) == 100
    feasible = [row["p"] for row in rows if row["feasible"]]
    assert min(feasible) == pytest.approx(1.35)
    assert max(feasible) == pytest.approx(3.95)
    assert rows[0]["p1"] == pytest.approx(4.0 / 3.0)
    assert rows[0]["p2"] == pytest.approx(4.0)


@pytest.mark.parametrize(
    "argv",
    [
        ["schur-scan", "--n", "5", "--m", "2"],
        ["schur-scan", "--n", "4", "--m", "0", "--p-min", "3.0", "--p-max", "2.0"],
        ["schur-scan", "--n", "1", "--m", "0"],
    ],
)
def test_schur_scan_config_errors(tmp_path: Path, argv: list[str]) -> None:
    assert main(argv + ["--out", str(tmp_path / "scan.csv")]) == EXIT_CONFIG


def test_potential_of_zero_form(tmp_path: Path) -> None:
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"center": [0.0, 0.0, 0.0, 1.0], "radius": 0.5, "coefficients": {}}), encoding="utf-8")
    points = tmp_path / "points.json"
    points.write_text(json.dumps([[0.0, 0.0, 0.0, 1.0], [0.2, 0.0, 0.1, 1.3]]), encoding="utf-8")
    run = tmp_path / "run.json"
    run.write_text(json.dumps(COARSE_RUN), encoding="utf-8")
    out = tmp_path / "potential.csv"

    code = main(
        ["potential", str(form), str(points), "--n", "4", "--m", "1", "--analytic"]
        + ["--config", str(run), "--out", str(out)]
    )

    assert code == EXIT_OK
    rows = _read_csv(out)
    assert len(rows) == 2
    assert list(rows[0]) == ["x1", "x2", "x3", "x4", "L_1", "L_2", "L_3", "L_4", "error"]
    for row in rows:
        assert all(float(row[f"L_{k}"]) == 0.0 for k in range(1, 5))
        assert float(row["error"]) == 0.0
    assert float(rows[1]["x4"]) == pytest.approx(1.3)


def test_potential_rejects_incomplete_descriptor(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"center": [0.0, 0.0, 0.0, 1.0], "coefficients": {}}), encoding="utf-8")
    points = tmp_path / "points.csv"
    points.write_text("0.0,0.0,0.0,1.0\n", encoding="utf-8")
    code = main(["potential", str(form), str(points), "--n", "4", "--m", "1", "--analytic"])
    assert code == EXIT_CONFIG
    assert "radius" in capsys.readouterr().err


def test_read_points_csv_with_header(tmp_path: Path) -> None:
    path = tmp_path / "points.csv"
    path.write_text("x1,x2,x3\n0.1,0.2,1.0\n0.0,0.0,2.0\n", encoding="utf-8")
    np.testing.assert_allclose(read_points(path, 3), [[0.1, 0.2, 1.0], [0.0, 0.0, 2.0]])
    with pytest.raises(ConfigError):
        read_points(path, 4)
    with pytest.raises(ConfigError):
        read_points(tmp_path / "missing.csv", 3)


def test_sample_points_match_sample_form() -> None:
    samples = Path(__file__).resolve().parents[2] / "config" / "samples"
    assert read_points(samples / "points.csv", 5).shape == (5, 5)


def test_verify_geometry_suite(tmp_path: Path) -> None:
    out = tmp_path / "verify_report.json"
    code = main(["verify", "--suite", "geometry", "--n", "4", "--m", "1", "--out", str(out)])
    assert code == EXIT_OK
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["suite"] == "geometry"
    assert payload["config"]["n"] == 4
    assert all(entry["passed"] for entry in payload["checks"])
    assert (tmp_path / "verify_report.md").read_text(encoding="utf-8").startswith("# Verifikationsbericht")


def test_unknown_config_key_is_rejected(tmp_path: Path) -> None:
    run = tmp_path / "run.json"
    run.write_text(json.dumps({"dimension": 5}), encoding="utf-8")
    assert main(["schur-scan", "--config", str(run), "--out", str(tmp_path / "scan.csv")]) == EXIT_CONFIG
