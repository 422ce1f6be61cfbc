"""Pydantic models for field specs, component reports and verification results."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

# --- Field and algebra tags ---


class FieldKind(str, Enum):
    PRIME = "Prime"
    EXTENSION = "Extension"
    RATIONAL_FUNCTION = "RationalFunction"


class FieldSpec(BaseModel):
    """Which field to build.

    ``modulus`` lists the coefficients of a monic polynomial from the leading
    term down to the constant term (Extension only).
    """

    model_config = ConfigDict(frozen=True)

    kind: FieldKind
    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None


class ZeroDivisorClass(str, Enum):
    TYPE_A = "TypeA"  # n(x, x*x) != 0
    TYPE_B = "TypeB"  # x*x != 0, n(x, x*x) = 0
    TYPE_C = "TypeC"  # x*x = 0


class Char3Subclass(str, Enum):
    SINGULAR = "SingularType"
    QUADRATIC = "QuadraticType"


class P8ZeroDivisorKind(str, Enum):
    NILPOTENT = "Nilpotent"
    OMEGA_TYPE = "OmegaType"


class ComponentKind(str, Enum):
    PAIR = "Pair"
    STAR = "Star"
    BIG = "Big"


# --- Graph reports ---


class CertifiedDiameter(BaseModel):
    lower: int
    upper: int
    certified: bool = True


class ComponentReport(BaseModel):
    kind: ComponentKind
    size: int
    diameter: int | CertifiedDiameter
    center: str | None = None
    class_census: dict[str, int] = Field(default_factory=dict)
    flagged: list[str] = Field(default_factory=list)


class ZdivSummary(BaseModel):
    # None when only sampled pairs were checked
    strongly_connected: bool | None = None
    directed_diameter: int | None = None
    mode: str = "exhaustive"  # "exhaustive" or "sampled"
    pairs_checked: int = 0


class GraphReport(BaseModel):
    field: str
    alpha: str
    beta: str
    vertex_count: int
    components: list[ComponentReport]
    geodesic_trichotomy: str = "skipped"  # "pass", "fail" or "skipped"
    zdiv: ZdivSummary | None = None


# --- Verification results ---


class CheckResult(BaseModel):
    name: str
    passed: bool
    checked: int = 0
    detail: str = ""
    counterexample: str | None = None


class SuiteReport(BaseModel):
    suite: str
    field: str
    alpha: str
    beta: str
    passed: bool = True
    checks: list[CheckResult] = Field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        if not check.passed:
            self.passed = False
        return check

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


class VerificationRun(BaseModel):
    """All suites executed by one ``verify`` invocation."""

    field: str
    suites: list[SuiteReport] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)
