"""Dense exact linear algebra: echelon forms, kernels, spans and intersections."""

import itertools
import logging
from collections.abc import Iterable, Iterator, Sequence

from .errors import DimensionMismatch
from .field import Field, FieldElement

logger = logging.getLogger(__name__)

Vector = tuple[FieldElement, ...]

# Global basis order of the Okubo algebra, shared by every 8-vector.
BASIS_NAMES = ("z10", "z20", "z01", "z02", "z11", "z22", "z12", "z21")


# --- Vector helpers ---


def zero_vector(field: Field, n: int = 8) -> Vector:
    return (field.zero,) * n


def unit_vector(field: Field, i: int, n: int = 8) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: FieldElement, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return not any(a)


def dot(a: Vector, b: Vector) -> FieldElement:
    total = a[0].field.zero
    for x, y in zip(a, b):
        if x and y:
            total = total + x * y
    return total


def combine(field: Field, coeffs: Sequence[FieldElement], vectors: Sequence[Vector], n: int) -> Vector:
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] = out[i] + c * x
    return tuple(out)


def canonical(v: Vector) -> Vector:
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if x:
            inv = x.field.inv(x)
            return tuple(inv * y for y in v)
    raise ValueError("the zero vector has no projective class")


def proportional(a: Vector, b: Vector) -> bool:
    if is_zero_vector(a) or is_zero_vector(b):
        return False
    return canonical(a) == canonical(b)


# --- Matrices ---


class Matrix:
    """Rectangular matrix of field elements stored as row tuples."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Sequence[FieldElement]], ncols: int | None = None) -> None:
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            if not self.rows:
                raise DimensionMismatch("an empty matrix needs an explicit column count")
            ncols = len(self.rows[0])
        self.ncols = ncols
        if any(len(r) != ncols for r in self.rows):
            raise DimensionMismatch("matrix rows have different lengths")

    @classmethod
    def identity(cls, field: Field, n: int = 8) -> "Matrix":
        return cls(field, [unit_vector(field, i, n) for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, [zero_vector(field, ncols) for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Vector]) -> "Matrix":
        return cls(field, zip(*columns), len(columns))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix.from_columns(self.field, self.rows)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.ncols} columns")
        return tuple(dot(r, v) for r in self.rows)

    def stack(self, other: "Matrix") -> "Matrix":
        if other.ncols != self.ncols:
            raise DimensionMismatch("cannot stack matrices with different column counts")
        return Matrix(self.field, self.rows + other.rows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = other.columns()
        return Matrix(self.field, [[dot(r, c) for c in cols] for r in self.rows], other.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def rank(self) -> int:
        return len(rref(self.field, self.rows, self.ncols)[1])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"


def rref(field: Field, rows: Sequence[Sequence[FieldElement]], ncols: int) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon form with first-nonzero pivoting; zero rows dropped."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            factor = m[i][c]
            if i != r and factor:
                m[i] = [a - factor * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


# --- Subspaces ---


class Subspace:
    """Subspace of F^n held as a reduced row-echelon basis."""

    __slots__ = ("field", "n", "basis", "pivots")

    def __init__(self, field: Field, n: int, basis: Sequence[Vector], pivots: Sequence[int]) -> None:
        self.field = field
        self.n = n
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __contains__(self, v: Vector) -> bool:
        return contains(self, v)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after clearing every pivot column."""
        out = list(v)
        for row, c in zip(self.basis, self.pivots):
            factor = out[c]
            if factor:
                out = [a - factor * b if b else a for a, b in zip(out, row)]
        return tuple(out)

    def projective_points(self) -> Iterator[Vector]:
        """Canonical representatives of every line in the subspace (finite fields).

        The basis is in echelon form, so a coefficient vector whose first
        nonzero entry is 1 gives a vector whose first nonzero coordinate is 1.
        """
        elements = self.field.elements()
        d = self.dim
        zero, one = self.field.zero, self.field.one
        for lead in range(d):
            for tail in itertools.product(elements, repeat=d - lead - 1):
                coeffs = (zero,) * lead + (one,) + tail
                yield combine(self.field, coeffs, self.basis, self.n)

    def vectors(self) -> Iterator[Vector]:
        elements = self.field.elements()
        for coeffs in itertools.product(elements, repeat=self.dim):
            yield combine(self.field, coeffs, self.basis, self.n)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, n={self.n})"


def span(field: Field, vectors: Iterable[Vector], n: int = 8) -> Subspace:
    basis, pivots = rref(field, list(vectors), n)
    return Subspace(field, n, basis, pivots)


def kernel(m: Matrix) -> Subspace:
    """Echelon basis of {v : m v = 0}."""
    field, n = m.field, m.ncols
    reduced, pivots = rref(field, m.rows, n)
    free = [c for c in range(n) if c not in pivots]
    vectors = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, c in zip(reduced, pivots):
            if row[f]:
                v[c] = -row[f]
        vectors.append(tuple(v))
    return span(field, vectors, n)


def rank(m: Matrix) -> int:
    return m.rank()


def _constraints(s: Subspace) -> list[Vector]:
    """Rows of a matrix whose kernel is s."""
    return list(kernel(Matrix(s.field, s.basis, s.n)).basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.n != b.n:
        raise DimensionMismatch(f"subspaces of F^{a.n} and F^{b.n}")
    rows = _constraints(a) + _constraints(b)
    return kernel(Matrix(a.field, rows, a.n))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.n != b.n:
        raise DimensionMismatch(f"subspaces of F^{a.n} and F^{b.n}")
    return span(a.field, a.basis + b.basis, a.n)


def contains(s: Subspace, v: Vector) -> bool:
    if len(v) != s.n:
        raise DimensionMismatch(f"vector of length {len(v)} in F^{s.n}")
    return is_zero_vector(s.reduce(v))


def is_subspace_of(a: Subspace, b: Subspace) -> bool:
    return all(contains(b, v) for v in a.basis)


def perp_of_vector(field: Field, gram: Matrix, x: Vector) -> Subspace:
    """Kernel of the functional a -> x^T gram a."""
    row = gram.transpose().apply(x)
    return kernel(Matrix(field, [row], gram.ncols))


def full_space(field: Field, n: int = 8) -> Subspace:
    return span(field, [unit_vector(field, i, n) for i in range(n)], n)
