"""Tests for Pydantic models in src.models."""

import pytest
from pydantic import ValidationError

from src.models import (
    CertifiedDiameter,
    CheckResult,
    ComponentKind,
    ComponentReport,
    FieldKind,
    FieldSpec,
    GraphReport,
    SuiteReport,
    VerificationRun,
    ZdivSummary,
)


def _suite(name: str, *passed: bool) -> SuiteReport:
    report = SuiteReport(suite=name, field="3", alpha="1", beta="1")
    for i, ok in enumerate(passed):
        report.add(CheckResult(name=f"c{i}", passed=ok, checked=1, counterexample=None if ok else "x=z10"))
    return report


# ---------------------------------------------------------------------------
# 1. FieldSpec
# ---------------------------------------------------------------------------

class TestFieldSpec:
    def test_defaults(self):
        """k defaults to 1 and modulus to None."""
        spec = FieldSpec(kind=FieldKind.PRIME, p=5)
        assert spec.k == 1
        assert spec.modulus is None

    def test_frozen_and_hashable(self):
        """Specs are cache keys for make_field."""
        spec = FieldSpec(kind=FieldKind.EXTENSION, p=2, k=2, modulus=(1, 1, 1))
        assert hash(spec) == hash(FieldSpec(kind=FieldKind.EXTENSION, p=2, k=2, modulus=(1, 1, 1)))
        with pytest.raises(ValidationError):
            spec.p = 3

    def test_unknown_kind_raises(self):
        with pytest.raises(ValidationError):
            FieldSpec(kind="Quaternion", p=2)


# ---------------------------------------------------------------------------
# 2. SuiteReport
# ---------------------------------------------------------------------------

class TestSuiteReport:
    def test_add_tracks_failures(self):
        """One failing check flips passed and shows up in failures."""
        report = _suite("identities", True, False, True)
        assert not report.passed
        assert [c.name for c in report.failures] == ["c1"]

    def test_all_passing(self):
        report = _suite("appendix", True, True)
        assert report.passed
        assert report.failures == []

    def test_add_returns_check(self):
        report = _suite("zdiv")
        check = CheckResult(name="witness_z10_z01", passed=True)
        assert report.add(check) is check


# ---------------------------------------------------------------------------
# 3. VerificationRun
# ---------------------------------------------------------------------------

class TestVerificationRun:
    def test_passed_requires_every_suite(self):
        run = VerificationRun(field="3", suites=[_suite("a", True), _suite("b", False)])
        assert not run.passed

    def test_empty_run_passes(self):
        """A run where every suite was skipped has nothing failing."""
        run = VerificationRun(field="3(t)", skipped=["zdiv: needs a finite field"])
        assert run.passed


# ---------------------------------------------------------------------------
# 4. Graph reports
# ---------------------------------------------------------------------------

class TestGraphReport:
    def test_component_diameter_accepts_both_forms(self):
        exact = ComponentReport(kind=ComponentKind.STAR, size=7, diameter=2, center="z01")
        bounded = ComponentReport(kind=ComponentKind.BIG, size=5000, diameter=CertifiedDiameter(lower=5, upper=5))
        assert exact.diameter == 2
        assert bounded.diameter.certified

    def test_round_trip(self):
        """JSON dump and reload give an equal report."""
        report = GraphReport(
            field="2^2",
            alpha="1",
            beta="1",
            vertex_count=5525,
            components=[
                ComponentReport(kind=ComponentKind.PAIR, size=2, diameter=1, class_census={"TypeA": 2}),
                ComponentReport(
                    kind=ComponentKind.BIG,
                    size=1365,
                    diameter=CertifiedDiameter(lower=5, upper=5),
                    class_census={"TypeB": 1000, "TypeC": 365},
                ),
            ],
            geodesic_trichotomy="pass",
            zdiv=ZdivSummary(strongly_connected=True, directed_diameter=2, mode="sampled", pairs_checked=10),
        )
        again = GraphReport.model_validate_json(report.model_dump_json())
        assert again == report
        assert isinstance(again.components[1].diameter, CertifiedDiameter)
        assert again.components[0].kind == ComponentKind.PAIR

    def test_missing_required_raises(self):
        with pytest.raises(ValidationError):
            GraphReport(field="2", alpha="1", beta="1", components=[])
