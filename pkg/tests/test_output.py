"""Tests for the ReportWriter class in src/output.py.

All tests write into the ``run_config`` fixture's temporary output
directory, which pytest cleans up automatically.

Testing strategy
----------------
- File names follow the field slug for every field kind.
- JSON files reload into equal models.
- The Markdown summary carries one table row per check and lists skipped suites.
"""

import json

import pytest

from src.models import (
    CheckResult,
    ComponentKind,
    ComponentReport,
    GraphReport,
    SuiteReport,
    VerificationRun,
)
from src.output import ReportWriter, dump_json, field_slug, render_verification_markdown


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def writer(run_config):
    """Return a ReportWriter backed by a temporary output directory."""
    return ReportWriter(run_config)


@pytest.fixture
def sample_run() -> VerificationRun:
    """One passing and one failing suite plus a skipped one."""
    ok = SuiteReport(suite="appendix", field="2^2", alpha="1", beta="1")
    ok.add(CheckResult(name="mult_x_x", passed=True, checked=1, detail="{0, 0, 0, 1, 0, 1, 1, 0}"))
    bad = SuiteReport(suite="identities", field="2^2", alpha="1", beta="1")
    bad.add(CheckResult(name="composition", passed=False, checked=12, counterexample="x=z10 | y=z20"))
    return VerificationRun(field="2^2", suites=[ok, bad], skipped=["char3: needs characteristic 3"])


# ---------------------------------------------------------------------------
# 1. field_slug
# ---------------------------------------------------------------------------
class TestFieldSlug:
    @pytest.mark.parametrize(
        "spec, slug",
        [("3", "3"), ("2^2", "2_2"), ("3(t)", "3t"), ("2^2/1,1,1", "2_2_1_1_1")],
    )
    def test_slugs(self, spec, slug):
        assert field_slug(spec) == slug


# ---------------------------------------------------------------------------
# 2. Graph reports and DOT
# ---------------------------------------------------------------------------
class TestGraphFiles:
    def test_save_graph_report(self, writer, run_config):
        report = GraphReport(
            field="2^2",
            alpha="1",
            beta="1",
            vertex_count=4,
            components=[ComponentReport(kind=ComponentKind.PAIR, size=2, diameter=1)] * 2,
        )
        path = writer.save_graph_report(report, "orth")
        assert path == run_config.output_dir / "graph_2_2_orth.json"
        assert GraphReport.model_validate_json(path.read_text(encoding="utf-8")) == report

    def test_save_dot(self, writer, run_config):
        path = writer.save_dot("graph g {\n}\n", "3(t)", "zdiv")
        assert path == run_config.output_dir / "graph_3t_zdiv.dot"
        assert path.read_text(encoding="utf-8") == "graph g {\n}\n"

    def test_output_dir_created(self, run_config, tmp_path):
        cfg = run_config.model_copy(update={"output_dir": tmp_path / "fresh" / "out"})
        ReportWriter(cfg)
        assert cfg.output_dir.is_dir()


# ---------------------------------------------------------------------------
# 3. Verification output
# ---------------------------------------------------------------------------
class TestVerificationFiles:
    def test_save_verification(self, writer, run_config, sample_run):
        paths = writer.save_verification(sample_run)
        assert paths["json"] == run_config.output_dir / "verification_2_2.json"
        assert paths["markdown"] == run_config.output_dir / "verification.md"
        data = json.loads(paths["json"].read_text(encoding="utf-8"))
        assert [s["suite"] for s in data["suites"]] == ["appendix", "identities"]
        assert data["skipped"] == ["char3: needs characteristic 3"]

    def test_dump_json_ends_with_newline(self, sample_run):
        text = dump_json(sample_run)
        assert text.endswith("}\n")
        assert VerificationRun.model_validate_json(text) == sample_run


class TestMarkdown:
    def test_header(self, sample_run):
        md = render_verification_markdown(sample_run)
        assert md.startswith("# Verification over 2^2")
        assert "- **Result:** FAIL" in md
        assert "- **Suites:** 2" in md

    def test_rows(self, sample_run):
        md = render_verification_markdown(sample_run)
        assert "| mult_x_x | pass | 1 | {0, 0, 0, 1, 0, 1, 1, 0} |" in md
        # Pipes in counterexamples are escaped so the table stays intact.
        assert "| composition | FAIL | 12 | x=z10 \\| y=z20 |" in md

    def test_skipped_section(self, sample_run):
        md = render_verification_markdown(sample_run)
        assert "## Skipped" in md
        assert "- char3: needs characteristic 3" in md

    def test_no_skipped_section_when_nothing_skipped(self, sample_run):
        run = sample_run.model_copy(update={"skipped": []})
        assert "## Skipped" not in render_verification_markdown(run)
