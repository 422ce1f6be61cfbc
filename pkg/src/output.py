"""JSON, DOT and Markdown writers for graph reports and verification runs."""

import json
import logging
from pathlib import Path

from pydantic import BaseModel

from .config import RunConfig
from .models import GraphReport, VerificationRun

logger = logging.getLogger(__name__)


def field_slug(spec: str) -> str:
    """File-name-safe form of a field spec string ("2^2" -> "2_2", "3(t)" -> "3t")."""
    safe = spec.lower().replace("^", "_").replace("/", "_").replace(",", "_")
    return "".join(c for c in safe if c.isalnum() or c in "_-")


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), ensure_ascii=False, indent=2) + "\n"


class ReportWriter:
    """Saves reports and DOT files under the configured output directory."""

    def __init__(self, settings: RunConfig) -> None:
        self.settings = settings
        settings.ensure_output_dir()

    @property
    def output_dir(self) -> Path:
        return self.settings.output_dir

    def _write(self, filename: str, text: str) -> Path:
        path = self.output_dir / filename
        path.write_text(text, encoding="utf-8")
        logger.info(f"Saved {path}")
        return path

    def save_graph_report(self, report: GraphReport, which: str) -> Path:
        return self._write(f"graph_{field_slug(report.field)}_{which}.json", dump_json(report))

    def save_dot(self, dot: str, field: str, which: str) -> Path:
        return self._write(f"graph_{field_slug(field)}_{which}.dot", dot)

    def save_verification(self, run: VerificationRun) -> dict[str, Path]:
        paths = {
            "json": self._write(f"verification_{field_slug(run.field)}.json", dump_json(run)),
            "markdown": self._write("verification.md", render_verification_markdown(run)),
        }
        return paths


def render_verification_markdown(run: VerificationRun) -> str:
    lines = [
        f"# Verification over {run.field}",
        "",
        f"- **Result:** {'pass' if run.passed else 'FAIL'}",
        f"- **Suites:** {len(run.suites)}",
        f"- **Skipped:** {len(run.skipped)}",
        "",
    ]
    for suite in run.suites:
        lines.append(f"## {suite.suite} (alpha = {suite.alpha}, beta = {suite.beta})")
        lines.append("")
        lines.append("| check | result | checked | detail |")
        lines.append("|---|---|---|---|")
        for c in suite.checks:
            detail = c.counterexample if not c.passed else c.detail
            detail = (detail or "").replace("|", "\\|")
            lines.append(f"| {c.name} | {'pass' if c.passed else 'FAIL'} | {c.checked:,} | {detail} |")
        lines.append("")
    if run.skipped:
        lines.append("## Skipped")
        lines.append("")
        lines.extend(f"- {s}" for s in run.skipped)
        lines.append("")
    return "\n".join(lines)
