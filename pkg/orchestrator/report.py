"""Markdown-Darstellung eines Verifikationsberichts per Jinja2."""

from __future__ import annotations

from pathlib import Path

from jinja2 import Environment, FileSystemLoader, Template, select_autoescape

from models.report_payload import VerificationReport
from util.output import format_value, write_json, write_text

_TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"
_JINJA_ENV = Environment(
    loader=FileSystemLoader(_TEMPLATE_DIR),
    autoescape=select_autoescape(disabled_extensions=("md.j2",)),
    trim_blocks=True,
    lstrip_blocks=True,
)
_JINJA_ENV.filters["number"] = lambda value: "-" if value is None else format_value(float(value))
_REPORT_TEMPLATE_NAME = "verify_report.md.j2"


def render_markdown(report: VerificationReport) -> str:
    template: Template = _JINJA_ENV.get_template(_REPORT_TEMPLATE_NAME)
    rendered = template.render(report=report, failed=report.failed_checks)
    return rendered.strip() + "\n"


def write_report(report: VerificationReport, path: str | Path) -> tuple[Path, Path]:
    """Schreibt den JSON-Bericht nach `path` und die Markdown-Fassung daneben (`.md`)."""

    target = Path(path)
    json_path = write_json(target, report)
    markdown_path = write_text(target.with_suffix(".md"), render_markdown(report))
    return json_path, markdown_path
