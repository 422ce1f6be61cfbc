"""The Okubo algebra O_{alpha,beta} in the basis z10, z20, z01, z02, z11, z22, z12, z21."""

import logging
import random
import re
from collections.abc import Callable, Sequence
from typing import NamedTuple

from .errors import (
    ConfigurationError,
    MixedAlgebras,
    NoZeroSquareSubspace,
    NotChar3,
    NotChar3Split,
    NotIdempotent,
    NotSplit,
    NotTypeC,
    NotZeroDivisor,
    ParseError,
)
from .field import Field, FieldElement, field_spec_string
from .linalg import (
    BASIS_NAMES,
    Matrix,
    Subspace,
    Vector,
    contains,
    intersect,
    kernel,
    span,
    unit_vector,
    zero_vector,
)
from .models import CheckResult, Char3Subclass, SuiteReport, ZeroDivisorClass

logger = logging.getLogger(__name__)

BASIS_INDEX = {name: i for i, name in enumerate(BASIS_NAMES)}

# Rows are the left factor, columns the right factor, both in basis order.
# "a" stands for alpha and "b" for beta.
MULTIPLICATION_TABLE = (
    ("z20", "0", "-z11", "0", "-z21", "0", "0", "-a z01"),
    ("0", "a z10", "0", "-z22", "0", "-a z12", "-a z02", "0"),
    ("0", "-z21", "z02", "0", "0", "-b z20", "0", "-z22"),
    ("-z12", "0", "0", "b z01", "-b z10", "0", "-b z11", "0"),
    ("0", "-a z01", "-z12", "0", "z22", "0", "-b z20", "0"),
    ("-a z02", "0", "0", "-b z21", "0", "ab z11", "0", "-ab z10"),
    ("-z22", "0", "-b z10", "0", "0", "-ab z01", "b z21", "0"),
    ("0", "-a z11", "0", "-b z20", "-a z02", "0", "0", "a z12"),
)

_ENTRY = re.compile(r"^(-?)(a?)(b?)\s*(z\d\d)$")

# Hyperbolic pairs of the norm: (i, j, power of alpha, power of beta).
NORM_PAIRS = ((0, 1, 1, 0), (2, 3, 0, 1), (4, 5, 1, 1), (6, 7, 1, 1))


class AlgebraElement:
    """An element of O_{alpha,beta}; ``x * y`` is the algebra product."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "OkuboAlgebra", coeffs: Sequence[FieldElement]) -> None:
        self.algebra = algebra
        self.coeffs: Vector = tuple(coeffs)

    def _same(self, other: "AlgebraElement") -> None:
        if other.algebra is not self.algebra:
            raise MixedAlgebras("elements belong to different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.mul(self, other)
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "AlgebraElement":
        c = self.algebra.field(c)
        return AlgebraElement(self.algebra, [c * a for a in self.coeffs])

    def __getitem__(self, key: int | str) -> FieldElement:
        if isinstance(key, str):
            key = BASIS_INDEX[key]
        return self.coeffs[key]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra.format(self)!r})"


class OkuboAlgebra:
    """Structure constants and norm data of O_{alpha,beta}; immutable after construction."""

    def __init__(
        self,
        field: Field,
        alpha: FieldElement,
        beta: FieldElement,
        structure: Sequence[Sequence[Vector]] | None = None,
    ) -> None:
        if not alpha or not beta:
            raise ConfigurationError("alpha and beta must be nonzero")
        self.field = field
        self.alpha = alpha
        self.beta = beta
        self.structure: tuple[tuple[Vector, ...], ...] = (
            tuple(tuple(row) for row in structure) if structure is not None else self._table()
        )
        self.gram = self._gram()
        self._pairs = [(i, j, self.gram.rows[i][j]) for i, j, _, _ in NORM_PAIRS]
        self._terms = [
            [(j, k, c) for j in range(8) for k, c in enumerate(self.structure[i][j]) if c]
            for i in range(8)
        ]
        self.basis = [AlgebraElement(self, unit_vector(field, i)) for i in range(8)]

    @classmethod
    def build(cls, field: Field, alpha=1, beta=1) -> "OkuboAlgebra":
        return cls(field, field(alpha), field(beta))

    def _table(self) -> tuple[tuple[Vector, ...], ...]:
        f = self.field
        rows = []
        for row in MULTIPLICATION_TABLE:
            entries = []
            for entry in row:
                if entry == "0":
                    entries.append(zero_vector(f))
                    continue
                m = _ENTRY.match(entry)
                c = f.one
                if m.group(2):
                    c = c * self.alpha
                if m.group(3):
                    c = c * self.beta
                if m.group(1):
                    c = -c
                v = [f.zero] * 8
                v[BASIS_INDEX[m.group(4)]] = c
                entries.append(tuple(v))
            rows.append(tuple(entries))
        return tuple(rows)

    def _gram(self) -> Matrix:
        f = self.field
        rows = [[f.zero] * 8 for _ in range(8)]
        for i, j, ea, eb in NORM_PAIRS:
            c = self.alpha**ea * self.beta**eb
            rows[i][j] = rows[j][i] = c
        return Matrix(f, rows)

    def with_patched_product(self, i: int, j: int, value: Vector) -> "OkuboAlgebra":
        """Copy of the algebra with structure[i][j] replaced."""
        rows = [list(r) for r in self.structure]
        rows[i][j] = tuple(value)
        logger.warning(f"Patched product {BASIS_NAMES[i]}*{BASIS_NAMES[j]} to {tuple(str(c) for c in value)}")
        return OkuboAlgebra(self.field, self.alpha, self.beta, rows)

    # --- Description ---

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    @property
    def is_patched(self) -> bool:
        return self.structure != self._table()

    def has_omega(self) -> bool:
        return self.characteristic != 3 and bool(self.field.primitive_cube_roots())

    def is_split(self) -> bool:
        """Whether alpha and beta are cubes, i.e. the algebra is isomorphic to O_{1,1}."""
        return self.field.is_cube(self.alpha) and self.field.is_cube(self.beta)

    def describe(self) -> str:
        return f"O_{{{self.alpha},{self.beta}}} over {self.field}"

    @property
    def field_spec(self) -> str:
        return field_spec_string(self.field.spec)

    # --- Elements ---

    def element(self, coeffs: Sequence) -> AlgebraElement:
        return AlgebraElement(self, [self.field(c) for c in coeffs])

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, zero_vector(self.field))

    def z(self, name: str) -> AlgebraElement:
        return self.basis[BASIS_INDEX[name]]

    def random_element(self, rng: random.Random, degree: int = 2) -> AlgebraElement:
        return AlgebraElement(self, [self.field.random_element(rng, degree) for _ in range(8)])

    def random_zero_divisor(self, rng: random.Random, degree: int = 2) -> AlgebraElement:
        """Rejection sampling over finite fields; a product with a basis element otherwise."""
        while True:
            x = self.random_element(rng, degree)
            if not self.field.is_finite:
                # n(x*z) = n(x) n(z) and every basis element has norm zero.
                x = x * rng.choice(self.basis)
            if x and not self.qnorm(x):
                return x

    # --- Products and forms ---

    def _check(self, x: AlgebraElement) -> None:
        if x.algebra is not self:
            raise MixedAlgebras("element belongs to a different algebra")

    def mul_vec(self, xs: Vector, ys: Vector) -> Vector:
        out = [self.field.zero] * 8
        for i, a in enumerate(xs):
            if not a:
                continue
            for j, k, c in self._terms[i]:
                b = ys[j]
                if b:
                    out[k] = out[k] + c * a * b
        return tuple(out)

    def mul(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        self._check(x)
        self._check(y)
        return AlgebraElement(self, self.mul_vec(x.coeffs, y.coeffs))

    def bilin_vec(self, xs: Vector, ys: Vector) -> FieldElement:
        total = self.field.zero
        for i, j, c in self._pairs:
            term = xs[i] * ys[j] + xs[j] * ys[i]
            if term:
                total = total + c * term
        return total

    def bilin(self, x: AlgebraElement, y: AlgebraElement) -> FieldElement:
        self._check(x)
        self._check(y)
        return self.bilin_vec(x.coeffs, y.coeffs)

    def qnorm_vec(self, xs: Vector) -> FieldElement:
        total = self.field.zero
        for i, j, c in self._pairs:
            term = xs[i] * xs[j]
            if term:
                total = total + c * term
        return total

    def qnorm(self, x: AlgebraElement) -> FieldElement:
        self._check(x)
        return self.qnorm_vec(x.coeffs)

    def left_rows(self, xs: Vector) -> list[list[FieldElement]]:
        """Rows of the matrix of y -> x*y."""
        rows = [[self.field.zero] * 8 for _ in range(8)]
        for i, a in enumerate(xs):
            if a:
                for j, k, c in self._terms[i]:
                    rows[k][j] = rows[k][j] + c * a
        return rows

    def right_rows(self, xs: Vector) -> list[list[FieldElement]]:
        """Rows of the matrix of y -> y*x."""
        rows = [[self.field.zero] * 8 for _ in range(8)]
        for i in range(8):
            for j, k, c in self._terms[i]:
                b = xs[j]
                if b:
                    rows[k][i] = rows[k][i] + c * b
        return rows

    def left_multiplication(self, x: AlgebraElement) -> Matrix:
        return Matrix(self.field, self.left_rows(x.coeffs))

    def right_multiplication(self, x: AlgebraElement) -> Matrix:
        return Matrix(self.field, self.right_rows(x.coeffs))

    def orthogonalizer_vec(self, xs: Vector) -> Subspace:
        """{y : x*y = y*x = 0} without the zero-divisor check."""
        return kernel(Matrix(self.field, self.left_rows(xs) + self.right_rows(xs), 8))

    # --- Text ---

    def format(self, x: AlgebraElement) -> str:
        f = self.field
        minus_one = -f.one
        parts: list[str] = []
        for name, c in zip(BASIS_NAMES, x.coeffs):
            if not c:
                continue
            if c == f.one:
                parts.append(f"+ {name}")
            elif c == minus_one:
                parts.append(f"- {name}")
            else:
                text = str(c)
                if "+" in text or "/" in text:
                    text = f"({text})"
                parts.append(f"+ {text}*{name}")
        if not parts:
            return "0"
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def format_vector(self, x: AlgebraElement) -> str:
        return "{" + ", ".join(str(c) for c in x.coeffs) + "}"

    def parse(self, text: str) -> AlgebraElement:
        """Parse ``c*zIJ`` terms joined by + and -."""
        s = text.replace(" ", "").replace("−", "-")
        if not s:
            raise ParseError("empty expression")
        if s == "0":
            return self.zero()
        terms: list[tuple[str, str]] = []
        depth, start = 0, 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0 and i > start and s[i - 1] not in "*^":
                terms.append((s[start], s[start + 1:i]) if s[start] in "+-" else ("+", s[start:i]))
                start = i
        terms.append((s[start], s[start + 1:]) if s[start] in "+-" else ("+", s[start:]))

        coeffs = [self.field.zero] * 8
        for sign, body in terms:
            m = re.match(r"^(?:(.+)\*)?(z\d\d)$", body)
            if not m or m.group(2) not in BASIS_INDEX:
                raise ParseError(f"cannot parse term {sign}{body!r} in {text!r}")
            try:
                c = self.field.parse(m.group(1)) if m.group(1) else self.field.one
            except ValueError as e:
                raise ParseError(f"bad coefficient in {body!r}: {e}") from e
            if sign == "-":
                c = -c
            idx = BASIS_INDEX[m.group(2)]
            coeffs[idx] = coeffs[idx] + c
        return AlgebraElement(self, coeffs)


# =============================================================================
# Zero divisors, annihilators and orthogonalizers
# =============================================================================


def is_zero_divisor(a: OkuboAlgebra, x: AlgebraElement) -> bool:
    return bool(x) and not a.qnorm(x)


def _require_zero_divisor(a: OkuboAlgebra, x: AlgebraElement) -> None:
    if not is_zero_divisor(a, x):
        raise NotZeroDivisor(f"{x} is not a zero divisor")


def left_ann(a: OkuboAlgebra, x: AlgebraElement) -> Subspace:
    """{y : y*x = 0}."""
    _require_zero_divisor(a, x)
    return kernel(a.right_multiplication(x))


def right_ann(a: OkuboAlgebra, x: AlgebraElement) -> Subspace:
    """{y : x*y = 0}."""
    _require_zero_divisor(a, x)
    return kernel(a.left_multiplication(x))


def left_image(a: OkuboAlgebra, x: AlgebraElement) -> Subspace:
    """x * O."""
    return span(a.field, a.left_multiplication(x).columns())


def right_image(a: OkuboAlgebra, x: AlgebraElement) -> Subspace:
    """O * x."""
    return span(a.field, a.right_multiplication(x).columns())


def orthogonalizer(a: OkuboAlgebra, x: AlgebraElement) -> Subspace:
    """{y : x*y = y*x = 0}."""
    _require_zero_divisor(a, x)
    return kernel(a.left_multiplication(x).stack(a.right_multiplication(x)))


def ann_intersection(a: OkuboAlgebra, x: AlgebraElement, y: AlgebraElement) -> Subspace:
    """(x * O) ∩ (O * y)."""
    _require_zero_divisor(a, x)
    _require_zero_divisor(a, y)
    return intersect(left_image(a, x), right_image(a, y))


def classify(a: OkuboAlgebra, x: AlgebraElement) -> ZeroDivisorClass:
    _require_zero_divisor(a, x)
    xx = x * x
    if not xx:
        return ZeroDivisorClass.TYPE_C
    if a.bilin(x, xx):
        return ZeroDivisorClass.TYPE_A
    return ZeroDivisorClass.TYPE_B


def classify_vec(a: OkuboAlgebra, xs: Vector) -> ZeroDivisorClass:
    xx = a.mul_vec(xs, xs)
    if not any(xx):
        return ZeroDivisorClass.TYPE_C
    if a.bilin_vec(xs, xx):
        return ZeroDivisorClass.TYPE_A
    return ZeroDivisorClass.TYPE_B


# =============================================================================
# Idempotents and centralizers
# =============================================================================


def is_idempotent(a: OkuboAlgebra, x: AlgebraElement) -> bool:
    return bool(x) and x * x == x


def standard_idempotent(a: OkuboAlgebra) -> AlgebraElement:
    """m^-1 z10 + m^-2 z20 for alpha = m^3 (z10 + z20 when alpha = 1)."""
    m = a.field.cube_root(a.alpha)
    if m is None:
        raise NotSplit(f"alpha = {a.alpha} is not a cube in {a.field}")
    inv = a.field.inv(m)
    e = a.z("z10") * inv + a.z("z20") * (inv * inv)
    if not is_idempotent(a, e):
        raise NotIdempotent(f"{e} is not idempotent")
    return e


def quaternionic_idempotent(a: OkuboAlgebra) -> AlgebraElement:
    """The sum of all basis elements, rescaled by cube roots of alpha and beta."""
    if a.characteristic != 3:
        raise NotChar3(f"{a.field} does not have characteristic 3")
    m = a.field.cube_root(a.alpha)
    k = a.field.cube_root(a.beta)
    if m is None or k is None:
        raise NotSplit(f"{a.describe()} is not split")
    m_inv, k_inv = a.field.inv(m), a.field.inv(k)
    coeffs = [m_inv ** int(name[1]) * k_inv ** int(name[2]) for name in BASIS_NAMES]
    e = a.element(coeffs)
    if not is_idempotent(a, e):
        raise NotIdempotent(f"{e} is not idempotent")
    return e


def split_idempotent(a: OkuboAlgebra) -> AlgebraElement:
    """Quaternionic idempotent in characteristic 3, the standard one otherwise."""
    if a.characteristic == 3 and a.is_split():
        return quaternionic_idempotent(a)
    return standard_idempotent(a)


def centralizer(a: OkuboAlgebra, e: AlgebraElement) -> Subspace:
    """{y : e*y = y*e}."""
    if not is_idempotent(a, e):
        raise NotIdempotent(f"{e} is not idempotent")
    return kernel(a.left_multiplication(e) - a.right_multiplication(e))


def orthogonal_complement(a: OkuboAlgebra, s: Subspace) -> Subspace:
    """{y : n(y, v) = 0 for every v in s}."""
    rows = [a.gram.apply(v) for v in s.basis]
    if not rows:
        return span(a.field, [b.coeffs for b in a.basis])
    return kernel(Matrix(a.field, rows))


def char3_subclass(a: OkuboAlgebra, x: AlgebraElement) -> Char3Subclass:
    if a.characteristic != 3 or not a.is_split():
        raise NotChar3Split(f"{a.describe()} is not a split algebra of characteristic 3")
    if not is_zero_divisor(a, x) or x * x:
        raise NotTypeC(f"{x} does not square to zero")
    e = quaternionic_idempotent(a)
    c = centralizer(a, e)
    if not contains(c, x.coeffs):
        raise NotTypeC(f"{x} squares to zero but lies outside the centralizer of e")
    if all(not a.bilin_vec(x.coeffs, v) for v in c.basis):
        return Char3Subclass.SINGULAR
    return Char3Subclass.QUADRATIC


def singular_span(a: OkuboAlgebra) -> Subspace:
    """C(e) ∩ C(e)^⊥ for the quaternionic idempotent e."""
    e = quaternionic_idempotent(a)
    c = centralizer(a, e)
    return intersect(c, orthogonal_complement(a, c))


# =============================================================================
# Explicit elements
# =============================================================================

# The automorphism exchanging the two spanning vectors of the singular-type plane.
PHI_IMAGES = {
    "z10": "z21",
    "z20": "z12",
    "z01": "z11",
    "z02": "z22",
    "z11": "z02",
    "z22": "z01",
    "z12": "z10",
    "z21": "z20",
}


def phi_map(a: OkuboAlgebra) -> Matrix:
    return Matrix.from_columns(a.field, [a.z(PHI_IMAGES[name]).coeffs for name in BASIS_NAMES])


def automorphism_failure(a: OkuboAlgebra, m: Matrix) -> str | None:
    """First basis pair (x, y) with m(x*y) != m(x)*m(y), or None."""
    images = [m.apply(b.coeffs) for b in a.basis]
    for i, x in enumerate(a.basis):
        for j, y in enumerate(a.basis):
            lhs = m.apply(a.mul_vec(x.coeffs, y.coeffs))
            rhs = a.mul_vec(images[i], images[j])
            if lhs != rhs:
                return f"{BASIS_NAMES[i]}*{BASIS_NAMES[j]}"
    return None


def zero_square_pair(a: OkuboAlgebra) -> tuple[AlgebraElement, AlgebraElement]:
    """Two independent elements whose products (including squares) all vanish."""
    if a.alpha != a.field.one:
        raise NoZeroSquareSubspace("explicit zero-square pairs need alpha = 1")
    x0 = a.parse("z02 + z12 + z22")
    if a.characteristic == 3:
        y0 = a.parse("z01 + z11 + z21")
    else:
        w = a.field.omega()
        if w is None:
            raise NoZeroSquareSubspace(f"{a.field} has characteristic {a.characteristic} and no cube root of unity")
        y0 = a.z("z01") * (w * w) + a.z("z21") * w + a.z("z11")
    return x0, y0


class Char3Witness(NamedTuple):
    u: AlgebraElement
    v: AlgebraElement
    v_prime: AlgebraElement
    w: AlgebraElement


def nonsplit_char3_witness(a: OkuboAlgebra, k) -> Char3Witness:
    """u_k, v_k, v'_k and w_k = v_k*u_k from the char-3 diameter-three argument (alpha = 1)."""
    if a.characteristic != 3:
        raise NotChar3(f"{a.field} does not have characteristic 3")
    k = a.field(k)
    u = a.parse("z02 + z12 + z22") + a.parse("z01 + z21 + z11") * k
    v = a.z("z01") * k - a.z("z02")
    v_prime = a.z("z22") - a.z("z11") * k
    return Char3Witness(u=u, v=v, v_prime=v_prime, w=v * u)


# =============================================================================
# Identity suite
# =============================================================================


class CompositionOps(NamedTuple):
    """What the identity checks need to know about a symmetric composition algebra."""

    mul: Callable
    qnorm: Callable
    bilin: Callable
    add: Callable
    scale: Callable
    sample: Callable[[random.Random], object]
    show: Callable[[object], str] = str


def composition_identity_checks(ops: CompositionOps, trials: int, rng: random.Random) -> list[CheckResult]:
    """Composition, symmetry, flexibility, linearization and the square-of-square law."""
    names = ["composition", "symmetry", "flexibility", "linearization", "square_of_square"]
    failures: dict[str, str | None] = {n: None for n in names}
    mul, qn, bl, add, scale = ops.mul, ops.qnorm, ops.bilin, ops.add, ops.scale

    for _ in range(trials):
        x, y, z = ops.sample(rng), ops.sample(rng), ops.sample(rng)
        xy = mul(x, y)
        nx = qn(x)
        if failures["composition"] is None and qn(xy) != nx * qn(y):
            failures["composition"] = f"x={ops.show(x)}, y={ops.show(y)}"
        if failures["symmetry"] is None and bl(xy, z) != bl(x, mul(y, z)):
            failures["symmetry"] = f"x={ops.show(x)}, y={ops.show(y)}, z={ops.show(z)}"
        if failures["flexibility"] is None:
            target = scale(nx, y)
            if mul(xy, x) != target or mul(x, mul(y, x)) != target:
                failures["flexibility"] = f"x={ops.show(x)}, y={ops.show(y)}"
        if failures["linearization"] is None:
            target = scale(bl(x, z), y)
            left = add(mul(xy, z), mul(mul(z, y), x))
            right = add(mul(x, mul(y, z)), mul(z, mul(y, x)))
            if left != target or right != target:
                failures["linearization"] = f"x={ops.show(x)}, y={ops.show(y)}, z={ops.show(z)}"
        if failures["square_of_square"] is None:
            xx = mul(x, x)
            target = add(scale(bl(x, xx), x), scale(-nx, xx))
            if mul(xx, xx) != target:
                failures["square_of_square"] = f"x={ops.show(x)}"

    return [
        CheckResult(name=n, passed=failures[n] is None, checked=trials, counterexample=failures[n])
        for n in names
    ]


def okubo_ops(a: OkuboAlgebra, degree: int = 2) -> CompositionOps:
    return CompositionOps(
        mul=lambda x, y: x * y,
        qnorm=a.qnorm,
        bilin=a.bilin,
        add=lambda x, y: x + y,
        scale=lambda c, x: x.scale(c),
        sample=lambda rng: a.random_element(rng, degree),
    )


def identity_suite(a: OkuboAlgebra, trials: int = 1000, seed: int = 0) -> SuiteReport:
    rng = random.Random(seed)
    report = SuiteReport(
        suite="identities", field=a.field_spec, alpha=str(a.alpha), beta=str(a.beta)
    )
    for check in composition_identity_checks(okubo_ops(a), trials, rng):
        report.add(check)
        if not check.passed:
            logger.warning(f"Identity {check.name} fails: {check.counterexample}")
    logger.info(f"Identity suite over {a.describe()}: {'pass' if report.passed else 'FAIL'} ({trials} trials)")
    return report
