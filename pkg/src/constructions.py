"""Other models of the same algebras.

Pseudo-octonions on traceless 3x3 matrices, nilpotent matrices and their
orthogonality graph, the Zorn vector-matrix algebra and the Hurwitz algebra
and order-3 automorphism recovered from an idempotent of an Okubo algebra.
"""

import functools
import logging
import random
import re
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from .errors import (
    Char3,
    InfiniteField,
    NoCubeRoot,
    NotIdempotent,
    NotZeroDivisor,
    TooLarge,
)
from .field import Field, FieldElement, TableArithmetic
from .graphs import bfs_counts, two_geodesics_expected
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    canonical,
    intersect,
    kernel,
    proportional,
    span,
    unit_vector,
    vec_add,
    vec_scale,
    vec_sub,
)
from .models import CheckResult, P8ZeroDivisorKind
from .okubo import CompositionOps, OkuboAlgebra, is_idempotent

logger = logging.getLogger(__name__)

# Coordinates of a traceless matrix; x33 = -x11 - x22.
SL3_COORDS = ("x11", "x22", "x12", "x13", "x21", "x23", "x31", "x32")
_COORD_POS = ((0, 0), (1, 1), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))

# Candidate grids above this many rows are not materialized.
GRID_LIMIT = 1 << 20

Rows = tuple[tuple[FieldElement, ...], ...]


# =============================================================================
# 3x3 matrices
# =============================================================================


def mat_mul(x: Rows, y: Rows) -> Rows:
    return tuple(
        tuple(x[i][0] * y[0][j] + x[i][1] * y[1][j] + x[i][2] * y[2][j] for j in range(3))
        for i in range(3)
    )


def mat_add(x: Rows, y: Rows) -> Rows:
    return tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(x, y))


def mat_scale(c: FieldElement, x: Rows) -> Rows:
    return tuple(tuple(c * a for a in r) for r in x)


def trace(x: Rows) -> FieldElement:
    return x[0][0] + x[1][1] + x[2][2]


def minor_sum(x: Rows) -> FieldElement:
    """Sum of the principal 2x2 minors."""
    total = x[0][0] * x[1][1] - x[0][1] * x[1][0]
    total = total + x[0][0] * x[2][2] - x[0][2] * x[2][0]
    return total + x[1][1] * x[2][2] - x[1][2] * x[2][1]


def det(x: Rows) -> FieldElement:
    return (
        x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1])
        - x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0])
        + x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0])
    )


def identity3(f: Field) -> Rows:
    return tuple(tuple(f.one if i == j else f.zero for j in range(3)) for i in range(3))


class TracelessMatrix:
    """A 3x3 matrix of trace zero."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[FieldElement]]) -> None:
        self.field = field
        self.rows: Rows = tuple(tuple(field(a) for a in r) for r in rows)
        if trace(self.rows):
            raise ValueError(f"trace {trace(self.rows)} is not zero")

    @classmethod
    def from_coords(cls, field: Field, coords: Sequence) -> "TracelessMatrix":
        c = [field(v) for v in coords]
        rows = [[field.zero] * 3 for _ in range(3)]
        for (i, j), v in zip(_COORD_POS, c):
            rows[i][j] = v
        rows[2][2] = -(c[0] + c[1])
        return cls(field, rows)

    @classmethod
    def unit(cls, field: Field, i: int, j: int) -> "TracelessMatrix":
        """E_ij for i != j (1-based)."""
        if i == j:
            raise ValueError("diagonal units are not traceless")
        rows = [[field.zero] * 3 for _ in range(3)]
        rows[i - 1][j - 1] = field.one
        return cls(field, rows)

    def coords(self) -> Vector:
        return tuple(self.rows[i][j] for i, j in _COORD_POS)

    def __add__(self, other: "TracelessMatrix") -> "TracelessMatrix":
        return TracelessMatrix(self.field, mat_add(self.rows, other.rows))

    def __sub__(self, other: "TracelessMatrix") -> "TracelessMatrix":
        return TracelessMatrix(self.field, mat_add(self.rows, mat_scale(-self.field.one, other.rows)))

    def scale(self, c) -> "TracelessMatrix":
        return TracelessMatrix(self.field, mat_scale(self.field(c), self.rows))

    def __matmul__(self, other: "TracelessMatrix") -> Rows:
        """Ordinary matrix product (not traceless in general)."""
        return mat_mul(self.rows, other.rows)

    @property
    def det(self) -> FieldElement:
        return det(self.rows)

    @property
    def minor_sum(self) -> FieldElement:
        return minor_sum(self.rows)

    def cube(self) -> Rows:
        return mat_mul(mat_mul(self.rows, self.rows), self.rows)

    def is_nilpotent(self) -> bool:
        return not any(any(r) for r in self.cube())

    def __bool__(self) -> bool:
        return any(any(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TracelessMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(a) for a in r) for r in self.rows) + "]"

    __repr__ = __str__


# =============================================================================
# Pseudo-octonions
# =============================================================================


def _require_not_char3(f: Field) -> None:
    if f.characteristic == 3:
        raise Char3(f"{f} has characteristic 3; the matrix model divides by 3")


def omega_matrix(f: Field) -> TracelessMatrix:
    """diag(1, w, w^2)."""
    w = f.omega()
    if w is None:
        raise NoCubeRoot(f"{f} has no primitive cube root of unity")
    rows = [[f.zero] * 3 for _ in range(3)]
    rows[0][0], rows[1][1], rows[2][2] = f.one, w, w * w
    return TracelessMatrix(f, rows)


def p8_norm(x: TracelessMatrix) -> FieldElement:
    _require_not_char3(x.field)
    return -x.minor_sum / 3


def p8_bilin(x: TracelessMatrix, y: TracelessMatrix) -> FieldElement:
    _require_not_char3(x.field)
    return trace(x @ y) / 3


class PseudoOctonions:
    """x*y = mu xy + (1 - mu) yx - tr(xy)/3 I with mu = (1 - w^2)/3."""

    def __init__(self, field: Field) -> None:
        _require_not_char3(field)
        w = field.omega()
        if w is None:
            raise NoCubeRoot(f"{field} has no primitive cube root of unity")
        self.field = field
        self.omega = w
        self.third = field.inv(field(3))
        self.mu = (field.one - w * w) * self.third
        self._coord_basis = [unit_vector(field, i) for i in range(8)]

    def mul(self, x: TracelessMatrix, y: TracelessMatrix) -> TracelessMatrix:
        f = self.field
        xy, yx = x @ y, y @ x
        t = trace(xy) * self.third
        rows = mat_add(mat_scale(self.mu, xy), mat_scale(f.one - self.mu, yx))
        rows = mat_add(rows, mat_scale(-t, identity3(f)))
        return TracelessMatrix(f, rows)

    def qnorm(self, x: TracelessMatrix) -> FieldElement:
        return p8_norm(x)

    def bilin(self, x: TracelessMatrix, y: TracelessMatrix) -> FieldElement:
        return p8_bilin(x, y)

    def random_element(self, rng: random.Random) -> TracelessMatrix:
        return TracelessMatrix.from_coords(self.field, [self.field.random_element(rng) for _ in range(8)])

    def random_zero_divisor(self, rng: random.Random) -> TracelessMatrix:
        while True:
            x = self.random_element(rng)
            if x and not p8_norm(x):
                return x

    def ops(self) -> CompositionOps:
        return CompositionOps(
            mul=self.mul,
            qnorm=self.qnorm,
            bilin=self.bilin,
            add=lambda x, y: x + y,
            scale=lambda c, x: x.scale(c),
            sample=self.random_element,
        )

    def orthogonalizer(self, a: TracelessMatrix) -> Subspace:
        """{b : a*b = b*a = 0} in sl3 coordinates."""
        f = self.field
        cols = []
        for v in self._coord_basis:
            b = TracelessMatrix.from_coords(f, v)
            cols.append(self.mul(a, b).coords() + self.mul(b, a).coords())
        return kernel(Matrix.from_columns(f, cols))


@functools.cache
def pseudo_octonions(field: Field) -> PseudoOctonions:
    return PseudoOctonions(field)


def p8_mul(f: Field, x: TracelessMatrix, y: TracelessMatrix) -> TracelessMatrix:
    return pseudo_octonions(f).mul(x, y)


def p8_classify_zero_divisor(x: TracelessMatrix) -> P8ZeroDivisorKind:
    if not x or p8_norm(x):
        raise NotZeroDivisor(f"{x} is not a zero divisor")
    return P8ZeroDivisorKind.NILPOTENT if not x.det else P8ZeroDivisorKind.OMEGA_TYPE


def matrix_orthogonalizer(a: TracelessMatrix) -> Subspace:
    """{b traceless : ab = ba = 0} in sl3 coordinates."""
    f = a.field
    cols = []
    for i in range(8):
        b = TracelessMatrix.from_coords(f, unit_vector(f, i))
        ab, ba = a @ b, b @ a
        cols.append(tuple(x for r in ab for x in r) + tuple(x for r in ba for x in r))
    return kernel(Matrix.from_columns(f, cols))


def orth_equiv_check(x: TracelessMatrix, y: TracelessMatrix) -> tuple[bool, bool]:
    """(xy = yx = 0, x*y = y*x = 0)."""
    p = pseudo_octonions(x.field)
    assoc = not any(any(r) for r in x @ y) and not any(any(r) for r in y @ x)
    star = not p.mul(x, y) and not p.mul(y, x)
    return assoc, star


# =============================================================================
# Vectorized enumeration of traceless matrices
# =============================================================================


def _arith(f: Field, rows: int) -> TableArithmetic:
    if not f.is_finite:
        raise InfiniteField(f"{f} cannot be enumerated")
    if f.arith_tables() is None or rows > GRID_LIMIT:
        raise TooLarge(f"{rows} candidates over {f} exceed the enumeration limit")
    return TableArithmetic(f)


def _np_matrices(ops: TableArithmetic, grid: np.ndarray) -> np.ndarray:
    """Shape (N, 3, 3) index arrays from sl3 coordinate rows."""
    x11, x22, x12, x13, x21, x23, x31, x32 = grid.T
    x33 = ops.neg(ops.add(x11, x22))
    m = np.stack([np.stack([x11, x12, x13]), np.stack([x21, x22, x23]), np.stack([x31, x32, x33])])
    return np.moveaxis(m, 2, 0)


def _np_matmul(ops: TableArithmetic, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros_like(a)
    for i in range(3):
        for j in range(3):
            acc = ops.mul(a[:, i, 0], b[:, 0, j])
            for k in (1, 2):
                acc = ops.add(acc, ops.mul(a[:, i, k], b[:, k, j]))
            out[:, i, j] = acc
    return out


def _np_minor_sum(ops: TableArithmetic, m: np.ndarray) -> np.ndarray:
    total = np.zeros(m.shape[0], dtype=np.int64)
    for i, j in ((0, 1), (0, 2), (1, 2)):
        term = ops.sub(ops.mul(m[:, i, i], m[:, j, j]), ops.mul(m[:, i, j], m[:, j, i]))
        total = ops.add(total, term)
    return total


def _np_det(ops: TableArithmetic, m: np.ndarray) -> np.ndarray:
    mul, sub, add = ops.mul, ops.sub, ops.add
    c0 = sub(mul(m[:, 1, 1], m[:, 2, 2]), mul(m[:, 1, 2], m[:, 2, 1]))
    c1 = sub(mul(m[:, 1, 0], m[:, 2, 2]), mul(m[:, 1, 2], m[:, 2, 0]))
    c2 = sub(mul(m[:, 1, 0], m[:, 2, 1]), mul(m[:, 1, 1], m[:, 2, 0]))
    return add(sub(mul(m[:, 0, 0], c0), mul(m[:, 0, 1], c1)), mul(m[:, 0, 2], c2))


def nilpotents(f: Field) -> list[TracelessMatrix]:
    """Every nilpotent 3x3 matrix over f (zero included), in coordinate order."""
    ops = _arith(f, f.order**8 if f.is_finite else 0)
    grid = ops.grid(8)
    m = _np_matrices(ops, grid)
    mask = (_np_minor_sum(ops, m) == 0) & (_np_det(ops, m) == 0)
    rows = grid[mask]
    logger.debug(f"{len(rows)} nilpotent matrices over {f}")
    return [TracelessMatrix.from_coords(f, ops.to_elements(r)) for r in rows]


class CubeLawCensus(NamedTuple):
    zero_divisors: int
    nilpotent: int
    omega_type: int
    counterexample: str | None


def cube_law_census(f: Field) -> CubeLawCensus:
    """Check x^3 = det(x) I for every nonzero traceless x of norm zero (exhaustive)."""
    _require_not_char3(f)
    ops = _arith(f, f.order**8)
    grid = ops.grid(8)[1:]
    m = _np_matrices(ops, grid)
    mask = _np_minor_sum(ops, m) == 0
    m, grid = m[mask], grid[mask]
    d = _np_det(ops, m)
    cube = _np_matmul(ops, _np_matmul(ops, m, m), m)
    expected = np.zeros_like(cube)
    for i in range(3):
        expected[:, i, i] = d
    bad = np.nonzero((cube != expected).reshape(len(cube), -1).any(axis=1))[0]
    counterexample = None
    if len(bad):
        counterexample = str(TracelessMatrix.from_coords(f, ops.to_elements(grid[bad[0]])))
    nilpotent = int((d == 0).sum())
    return CubeLawCensus(
        zero_divisors=len(grid),
        nilpotent=nilpotent,
        omega_type=len(grid) - nilpotent,
        counterexample=counterexample,
    )


def cube_law_sampled(f: Field, trials: int, rng: random.Random) -> CubeLawCensus:
    """Random zero divisors instead of all of them."""
    p = pseudo_octonions(f)
    nilpotent = 0
    for _ in range(trials):
        x = p.random_zero_divisor(rng)
        d = x.det
        if not d:
            nilpotent += 1
        if x.cube() != mat_scale(d, identity3(f)):
            return CubeLawCensus(trials, nilpotent, trials - nilpotent, str(x))
    return CubeLawCensus(trials, nilpotent, trials - nilpotent, None)


# =============================================================================
# Orthogonality of nilpotent lines
# =============================================================================


class NilpotentLineGraph(NamedTuple):
    vertices: list[Vector]
    adjacency: list[list[int]]
    square_zero: list[bool]


def nilpotent_line_graph(f: Field) -> NilpotentLineGraph:
    """Lines of nonzero nilpotent matrices, adjacent when ab = ba = 0."""
    lines = [x.coords() for x in nilpotents(f) if x and canonical(x.coords()) == x.coords()]
    index = {v: i for i, v in enumerate(lines)}
    adjacency: list[list[int]] = []
    square_zero: list[bool] = []
    for v in lines:
        a = TracelessMatrix.from_coords(f, v)
        nbrs = sorted(index[p] for p in matrix_orthogonalizer(a).projective_points() if p in index and p != v)
        adjacency.append(nbrs)
        square_zero.append(not any(any(r) for r in a @ a))
    logger.info(f"Nilpotent line graph over {f}: {len(lines)} vertices")
    return NilpotentLineGraph(lines, adjacency, square_zero)


def nilpotent_graph_summary(g: NilpotentLineGraph) -> tuple[int, str | None]:
    """Diameter of the nilpotent line graph and the first geodesic-count violation."""
    diameter = 0
    violation = None
    for s in range(len(g.vertices)):
        dist, count = bfs_counts(g.adjacency, s)
        for t in range(s + 1, len(g.vertices)):
            d = dist[t]
            if d < 0:
                return -1, f"{g.vertices[s]} and {g.vertices[t]} are disconnected"
            diameter = max(diameter, d)
            want = 2 if two_geodesics_expected(d, g.square_zero[s], g.square_zero[t]) else 1
            if violation is None and count[t] != want:
                violation = f"{g.vertices[s]} -> {g.vertices[t]}: d={d}, {count[t]} geodesics"
    return diameter, violation


def orth_equiv_exhaustive(f: Field) -> tuple[int, str | None]:
    """Compare both orthogonalizers of every nilpotent line; both are linear in b."""
    p = pseudo_octonions(f)
    checked = 0
    for x in nilpotents(f):
        v = x.coords()
        if not x or canonical(v) != v:
            continue
        checked += 1
        if matrix_orthogonalizer(x) != p.orthogonalizer(x):
            return checked, f"orthogonalizers differ at {x}"
    return checked, None


# =============================================================================
# Zorn vector-matrix algebra
# =============================================================================

ZORN_NAMES = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")
ZORN_INDEX = {n: i for i, n in enumerate(ZORN_NAMES)}

ZORN_TABLE = (
    ("e1", "0", "u1", "u2", "u3", "0", "0", "0"),
    ("0", "e2", "0", "0", "0", "v1", "v2", "v3"),
    ("0", "u1", "0", "v3", "-v2", "-e1", "0", "0"),
    ("0", "u2", "-v3", "0", "v1", "0", "-e1", "0"),
    ("0", "u3", "v2", "-v1", "0", "0", "0", "-e1"),
    ("v1", "0", "-e2", "0", "0", "0", "u3", "-u2"),
    ("v2", "0", "0", "-e2", "0", "-u3", "0", "u1"),
    ("v3", "0", "0", "0", "-e2", "u2", "-u1", "0"),
)

_ZORN_ENTRY = re.compile(r"^(-?)([euv]\d)$")


def _cross(u: Vector, v: Vector) -> Vector:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot3(u: Vector, v: Vector) -> FieldElement:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


class ZornElement(NamedTuple):
    """The 2x2 vector-matrix [[a, u], [v, b]]."""

    a: FieldElement
    b: FieldElement
    u: Vector
    v: Vector

    def __add__(self, other):
        return ZornElement(self.a + other.a, self.b + other.b, vec_add(self.u, other.u), vec_add(self.v, other.v))

    def scale(self, c) -> "ZornElement":
        c = self.a.field(c)
        return ZornElement(c * self.a, c * self.b, vec_scale(c, self.u), vec_scale(c, self.v))

    def coords(self) -> Vector:
        """Coordinates in the canonical basis e1, e2, u1, u2, u3, v1, v2, v3."""
        return (self.a, self.b, *(-c for c in self.u), *self.v)

    @classmethod
    def from_coords(cls, c: Sequence[FieldElement]) -> "ZornElement":
        return cls(c[0], c[1], tuple(-x for x in c[2:5]), tuple(c[5:8]))


def zorn_mul(x: ZornElement, y: ZornElement) -> ZornElement:
    a = x.a * y.a + _dot3(x.u, y.v)
    b = x.b * y.b + _dot3(x.v, y.u)
    u = vec_sub(vec_add(vec_scale(x.a, y.u), vec_scale(y.b, x.u)), _cross(x.v, y.v))
    v = vec_add(vec_add(vec_scale(y.a, x.v), vec_scale(x.b, y.v)), _cross(x.u, y.u))
    return ZornElement(a, b, u, v)


def zorn_norm(x: ZornElement) -> FieldElement:
    return x.a * x.b - _dot3(x.u, x.v)


def zorn_conj(x: ZornElement) -> ZornElement:
    return ZornElement(x.b, x.a, tuple(-c for c in x.u), tuple(-c for c in x.v))


def zorn_basis(f: Field) -> dict[str, ZornElement]:
    return {name: ZornElement.from_coords(unit_vector(f, i)) for i, name in enumerate(ZORN_NAMES)}


def zorn_table_entry(f: Field, entry: str, basis: Sequence[Vector]) -> Vector:
    """Vector of a ZORN_TABLE entry in terms of the given basis vectors."""
    if entry == "0":
        return (f.zero,) * len(basis[0])
    m = _ZORN_ENTRY.match(entry)
    v = basis[ZORN_INDEX[m.group(2)]]
    return vec_scale(-f.one, v) if m.group(1) else v


def random_zorn(f: Field, rng: random.Random) -> ZornElement:
    return ZornElement.from_coords([f.random_element(rng) for _ in range(8)])


# =============================================================================
# Hurwitz algebra and automorphism from an idempotent
# =============================================================================


def _require_idempotent(a: OkuboAlgebra, e) -> None:
    if not is_idempotent(a, e):
        raise NotIdempotent(f"{e} is not a nonzero idempotent")


def tau_from_idempotent(a: OkuboAlgebra, e) -> Matrix:
    """Matrix of x -> e*(e*x)."""
    _require_idempotent(a, e)
    es = e.coeffs
    return Matrix.from_columns(a.field, [a.mul_vec(es, a.mul_vec(es, b.coeffs)) for b in a.basis])


def tau_closed_form(a: OkuboAlgebra, e) -> Matrix:
    """Matrix of x -> n(e, x) e - x*e."""
    _require_idempotent(a, e)
    es = e.coeffs
    cols = [
        vec_sub(vec_scale(a.bilin_vec(es, b.coeffs), es), a.mul_vec(b.coeffs, es))
        for b in a.basis
    ]
    return Matrix.from_columns(a.field, cols)


class HurwitzProduct:
    """x . y = (e*x)*(y*e), unital with unit e."""

    def __init__(self, a: OkuboAlgebra, e) -> None:
        _require_idempotent(a, e)
        self.algebra = a
        self.unit: Vector = e.coeffs

    def __call__(self, xs: Vector, ys: Vector) -> Vector:
        a, e = self.algebra, self.unit
        return a.mul_vec(a.mul_vec(e, xs), a.mul_vec(ys, e))

    def conj(self, xs: Vector) -> Vector:
        """n(e, x) e - x."""
        return vec_sub(vec_scale(self.algebra.bilin_vec(self.unit, xs), self.unit), xs)

    def left_matrix(self, xs: Vector) -> Matrix:
        return Matrix.from_columns(self.algebra.field, [self(xs, b.coeffs) for b in self.algebra.basis])

    def right_matrix(self, xs: Vector) -> Matrix:
        return Matrix.from_columns(self.algebra.field, [self(b.coeffs, xs) for b in self.algebra.basis])

    def unit_failure(self) -> str | None:
        for b in self.algebra.basis:
            if self(self.unit, b.coeffs) != b.coeffs or self(b.coeffs, self.unit) != b.coeffs:
                return str(b)
        return None

    def composition_failure(self, trials: int, rng: random.Random) -> str | None:
        """n(x.y) = n(x) n(y) on random pairs."""
        a = self.algebra
        for _ in range(trials):
            x, y = a.random_element(rng), a.random_element(rng)
            if a.qnorm_vec(self(x.coeffs, y.coeffs)) != a.qnorm(x) * a.qnorm(y):
                return f"x={x}, y={y}"
        return None


def hurwitz_from_idempotent(a: OkuboAlgebra, e) -> HurwitzProduct:
    return HurwitzProduct(a, e)


def petersson_reconstruct_check(
    a: OkuboAlgebra, e, trials: int = 1000, seed: int = 0, tau: Matrix | None = None
) -> CheckResult:
    """tau(conj x) . tau^2(conj y) = x*y on every basis pair and on random pairs."""
    h = hurwitz_from_idempotent(a, e)
    t = tau if tau is not None else tau_from_idempotent(a, e)
    t2 = t @ t
    rng = random.Random(seed)

    def agrees(xs: Vector, ys: Vector) -> bool:
        return h(t.apply(h.conj(xs)), t2.apply(h.conj(ys))) == a.mul_vec(xs, ys)

    checked = 0
    for x in a.basis:
        for y in a.basis:
            checked += 1
            if not agrees(x.coeffs, y.coeffs):
                return CheckResult(
                    name="petersson", passed=False, checked=checked, counterexample=f"x={x}, y={y}"
                )
    for _ in range(trials):
        x, y = a.random_element(rng), a.random_element(rng)
        checked += 1
        if not agrees(x.coeffs, y.coeffs):
            return CheckResult(
                name="petersson", passed=False, checked=checked, counterexample=f"x={x}, y={y}"
            )
    return CheckResult(name="petersson", passed=True, checked=checked)


def fixed_space(t: Matrix) -> Subspace:
    return kernel(t - Matrix.identity(t.field, t.ncols))


# =============================================================================
# Canonical Zorn basis for the automorphism
# =============================================================================


class ZornAlignment(NamedTuple):
    basis: dict[str, Vector]
    candidates: int


def zorn_table_failure(product, basis: Sequence[Vector], f: Field) -> str | None:
    """First product of basis vectors that disagrees with ZORN_TABLE, or None."""
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            if product(x, y) != zorn_table_entry(f, ZORN_TABLE[i][j], basis):
                return f"{ZORN_NAMES[i]}.{ZORN_NAMES[j]}"
    return None


def tau_action_failure(t: Matrix, basis: dict[str, Vector]) -> str | None:
    """Check tau fixes e1, e2, u1, u2, v1, v3, maps u3 to u3 + u2 and v2 to v2 - v3."""
    expected = {name: basis[name] for name in ("e1", "e2", "u1", "u2", "v1", "v3")}
    expected["u3"] = vec_add(basis["u3"], basis["u2"])
    expected["v2"] = vec_sub(basis["v2"], basis["v3"])
    for name in ZORN_NAMES:
        if t.apply(basis[name]) != expected[name]:
            return f"tau({name})"
    return None


def align_zorn_basis(a: OkuboAlgebra, e, limit: int = 100_000) -> ZornAlignment | None:
    """Search for a canonical Zorn basis of (O, .) on which tau acts in its normal form.

    e1 runs over the idempotents fixed by tau, U is {x : e1.x = x, x.e1 = 0},
    u2 spans U ∩ Im(tau - id), u3 solves (tau - id) u3 = u2 in U and u1 is a
    fixed vector of U off the line of u2. The v's are products of the u's.
    """
    f = a.field
    if not f.is_finite:
        raise InfiniteField(f"{f} cannot be searched")
    h = hurwitz_from_idempotent(a, e)
    t = tau_from_idempotent(a, e)
    ident = Matrix.identity(f)
    t1 = t - ident
    fix = fixed_space(t)
    image = span(f, t1.columns())
    es = e.coeffs
    tried = 0

    for e1 in fix.vectors():
        if not any(e1) or e1 == es or h(e1, e1) != e1:
            continue
        e2 = vec_sub(es, e1)
        u_space = kernel((h.left_matrix(e1) - ident).stack(h.right_matrix(e1)))
        if u_space.dim != 3:
            continue
        fixed_u = intersect(u_space, fix)
        for u2 in intersect(u_space, image).projective_points():
            u3 = next((v for v in u_space.vectors() if t1.apply(v) == u2), None)
            if u3 is None:
                continue
            for u1 in fixed_u.vectors():
                if not any(u1) or proportional(u1, u2):
                    continue
                tried += 1
                if tried > limit:
                    logger.warning(f"Zorn basis search stopped after {limit} candidates")
                    return None
                v1 = h(u2, u3)
                lam = h(u1, v1)
                # u1 . v1 must be -e1; rescale u1 to fix the sign and size.
                ratio = next((lam[k] / e1[k] for k in range(8) if e1[k]), None)
                if not ratio or vec_scale(ratio, e1) != lam:
                    continue
                u1s = vec_scale(-f.inv(ratio), u1)
                basis = {
                    "e1": e1, "e2": e2, "u1": u1s, "u2": u2, "u3": u3,
                    "v1": v1, "v2": h(u3, u1s), "v3": h(u1s, u2),
                }
                ordered = [basis[n] for n in ZORN_NAMES]
                if span(f, ordered).dim != 8:
                    continue
                if zorn_table_failure(h, ordered, f) is None and tau_action_failure(t, basis) is None:
                    logger.info(f"Zorn basis found after {tried} candidates")
                    return ZornAlignment(basis=basis, candidates=tried)
    logger.warning(f"No Zorn basis found among {tried} candidates")
    return None
