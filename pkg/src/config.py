"""Run configuration loaded from OKUBO_* environment variables and .env via pydantic-settings."""

from pathlib import Path

from pydantic import Field as PydanticField
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ConfigurationError, OkuboError
from .field import Field, field_from_string
from .okubo import OkuboAlgebra


class RunConfig(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="OKUBO_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Algebra
    field: str = "gf3"  # spec string or built-in shortcut (gf2 ... gf13, gf3t)
    alpha: str = "1"
    beta: str = "1"

    # Reproducibility and parallelism
    seed: int = 0
    threads: int = PydanticField(default=1, ge=1)

    # Graph limits
    exact_limit: int = PydanticField(default=10_000, ge=1)  # largest component with all-pairs BFS
    exhaustive_vertex_limit: int = 2_000  # vertex scans (adjacency oracle, annihilators)
    exhaustive_pair_limit: int = 20_000  # ordered pairs checked exhaustively
    p8_exhaustive_limit: int = 70_000  # traceless matrices enumerated exhaustively

    # Sample sizes
    identity_trials: int = 1000
    sample_pairs: int = 10_000
    zdiv_sample_pairs: int = 100_000
    adjacency_sample: int = 500
    certificate_sample: int = 1000
    petersson_trials: int = 1000
    zorn_search_limit: int = 100_000

    # Paths
    output_dir: Path = Path("output")

    @field_validator("field")
    @classmethod
    def _check_field_spec(cls, v: str) -> str:
        try:
            field_from_string(v)
        except OkuboError as e:
            raise ValueError(str(e)) from e
        return v

    def build_field(self) -> Field:
        try:
            return field_from_string(self.field)
        except OkuboError as e:
            raise ConfigurationError(f"invalid field {self.field!r}: {e}") from e

    def build_algebra(self, alpha: str | None = None, beta: str | None = None) -> OkuboAlgebra:
        """Parse alpha and beta in the configured field; both must be nonzero."""
        f = self.build_field()
        try:
            a = f.parse(alpha if alpha is not None else self.alpha)
            b = f.parse(beta if beta is not None else self.beta)
        except (OkuboError, ValueError) as e:
            raise ConfigurationError(f"cannot parse alpha/beta in {f}: {e}") from e
        if not a or not b:
            raise ConfigurationError(f"alpha and beta must be nonzero in {f} (got {a}, {b})")
        return OkuboAlgebra(f, a, b)

    def ensure_output_dir(self) -> None:
        self.output_dir.mkdir(parents=True, exist_ok=True)


settings = RunConfig()
