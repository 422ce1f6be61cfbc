"""Shared pytest fixtures for the okubo-graphs test suite.

Provides fields, algebras and orthogonality graphs over the small built-in
fields, plus a RunConfig pointed at a temporary output directory.  The
graphs are session-scoped because building them dominates the run time.
"""

from pathlib import Path

import pytest

from src.config import RunConfig
from src.field import Field, field_from_string
from src.graphs import OrthogonalityGraph
from src.okubo import OkuboAlgebra


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def gf2() -> Field:
    return field_from_string("gf2")


@pytest.fixture(scope="session")
def gf3() -> Field:
    return field_from_string("gf3")


@pytest.fixture(scope="session")
def gf4() -> Field:
    return field_from_string("gf4")


@pytest.fixture(scope="session")
def gf5() -> Field:
    return field_from_string("gf5")


@pytest.fixture(scope="session")
def gf7() -> Field:
    return field_from_string("gf7")


@pytest.fixture(scope="session")
def gf3t() -> Field:
    return field_from_string("gf3t")


# ---------------------------------------------------------------------------
# Algebras
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def o2(gf2: Field) -> OkuboAlgebra:
    """Split Okubo algebra over GF(2): no cube root of unity, char != 3."""
    return OkuboAlgebra.build(gf2)


@pytest.fixture(scope="session")
def o3(gf3: Field) -> OkuboAlgebra:
    """Split Okubo algebra over GF(3)."""
    return OkuboAlgebra.build(gf3)


@pytest.fixture(scope="session")
def o4(gf4: Field) -> OkuboAlgebra:
    """Split Okubo algebra over GF(4), which contains a primitive cube root of unity."""
    return OkuboAlgebra.build(gf4)


@pytest.fixture(scope="session")
def o5(gf5: Field) -> OkuboAlgebra:
    """Split Okubo algebra over GF(5): 5 = 2 mod 3, so no cube root of unity."""
    return OkuboAlgebra.build(gf5)


@pytest.fixture(scope="session")
def o3t(gf3t: Field) -> OkuboAlgebra:
    """Non-split algebra over GF(3)(t) with alpha = 1, beta = t."""
    return OkuboAlgebra(gf3t, gf3t.one, gf3t.parse("t"))


# ---------------------------------------------------------------------------
# Graphs
# ---------------------------------------------------------------------------


@pytest.fixture(scope="session")
def g2(o2: OkuboAlgebra) -> OrthogonalityGraph:
    return OrthogonalityGraph.build(o2)


@pytest.fixture(scope="session")
def g3(o3: OkuboAlgebra) -> OrthogonalityGraph:
    return OrthogonalityGraph.build(o3)


@pytest.fixture(scope="session")
def g4(o4: OkuboAlgebra) -> OrthogonalityGraph:
    """5525 vertices; only requested by tests marked slow."""
    return OrthogonalityGraph.build(o4, threads=4)


@pytest.fixture(scope="session")
def g5(o5: OkuboAlgebra) -> OrthogonalityGraph:
    """19656 vertices; only requested by tests marked slow."""
    return OrthogonalityGraph.build(o5, threads=4)


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


@pytest.fixture()
def tmp_output_dir(tmp_path: Path) -> Path:
    """Return a temporary output directory (created)."""
    out = tmp_path / "output"
    out.mkdir()
    return out


@pytest.fixture()
def run_config(tmp_output_dir: Path) -> RunConfig:
    """Small sample sizes and a temporary output directory over GF(2)."""
    return RunConfig(
        field="gf2",
        seed=7,
        identity_trials=100,
        sample_pairs=500,
        adjacency_sample=50,
        certificate_sample=100,
        petersson_trials=50,
        output_dir=tmp_output_dir,
    )
