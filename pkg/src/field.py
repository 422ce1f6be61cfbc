"""Exact arithmetic over GF(p), GF(p^k) and GF(p)(t)."""

import functools
import itertools
import logging
import math
import random
import re

import numpy as np

from .errors import (
    DivisionByZero,
    FieldParseError,
    InfiniteField,
    MixedFields,
    NonPrimeP,
    ReducibleModulus,
    UnsupportedDegree,
)
from .models import FieldKind, FieldSpec

logger = logging.getLogger(__name__)

MAX_DEGREE = 8
# Extension fields up to this order get precomputed addition/multiplication tables.
TABLE_LIMIT = 256
# Finite fields up to this order keep one shared element object per value.
CACHE_LIMIT = 1 << 16

BUILTIN_FIELDS = {
    "gf2": "2",
    "gf3": "3",
    "gf4": "2^2",
    "gf5": "5",
    "gf7": "7",
    "gf9": "3^2",
    "gf13": "13",
    "gf3t": "3(t)",
}

_SPEC_PRIME = re.compile(r"^(\d+)$")
_SPEC_POWER = re.compile(r"^(\d+)\^(\d+)$")
_SPEC_MODULUS = re.compile(r"^(\d+)\^(\d+)/(-?\d+(?:,-?\d+)*)$")
_SPEC_RATIONAL = re.compile(r"^(\d+)\(t\)$")
_TERM = re.compile(r"^(\d*)(t(?:\^(\d+))?)?$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


# =============================================================================
# Polynomials over GF(p): coefficient tuples, lowest degree first, no trailing zeros
# =============================================================================


def _trim(coeffs, p: int) -> tuple[int, ...]:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    return _trim(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def _poly_scale(a, c, p):
    return _trim([x * c for x in a], p)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out, p)


def _poly_divmod(a, b, p):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] * inv_lead % p
        quot[shift] = c
        for i, y in enumerate(b):
            rem[shift + i] = (rem[shift + i] - c * y) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return _trim(quot, p), _trim(rem, p)


def _poly_monic(a, p):
    if not a:
        return a
    return _poly_scale(a, pow(a[-1], p - 2, p), p)


def _poly_gcd(a, b, p):
    while b:
        a, b = b, _poly_divmod(a, b, p)[1]
    return _poly_monic(a, p)


def _poly_pow(a, e, p):
    result = (1,)
    while e:
        if e & 1:
            result = _poly_mul(result, a, p)
        a = _poly_mul(a, a, p)
        e >>= 1
    return result


def _monic_polys(degree: int, p: int):
    """All monic polynomials of the given degree, lowest degree first."""
    for tail in itertools.product(range(p), repeat=degree):
        yield tuple(reversed(tail)) + (1,)


def is_irreducible(coeffs_low: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to half the degree."""
    f = _trim(coeffs_low, p)
    k = len(f) - 1
    if k < 1:
        return False
    for d in range(1, k // 2 + 1):
        for g in _monic_polys(d, p):
            if not _poly_divmod(f, g, p)[1]:
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (high to low)."""
    for tail in itertools.product(range(p), repeat=k):
        high = (1, *tail)
        if is_irreducible(tuple(reversed(high)), p):
            return high
    raise ReducibleModulus(f"no irreducible polynomial of degree {k} over GF({p})")


def _poly_cube_root(f, p):
    """Monic cube root of a monic polynomial, or None."""
    if not f:
        return ()
    if (len(f) - 1) % 3:
        return None
    if p == 3:
        # Frobenius: g(t)^3 = g(t^3) over GF(3)
        if any(c for i, c in enumerate(f) if i % 3):
            return None
        return _trim(f[::3], p)
    d = (len(f) - 1) // 3
    g = [0] * d + [1]
    inv3 = pow(3, p - 2, p)
    for j in range(1, d + 1):
        cube = _poly_pow(_trim(g, p), 3, p)
        idx = 3 * d - j
        have = cube[idx] if idx < len(cube) else 0
        g[d - j] = (f[idx] - have) * inv3 % p
    root = _trim(g, p)
    return root if _poly_pow(root, 3, p) == f else None


def format_poly(coeffs_low, var: str = "t") -> str:
    terms = []
    for deg in range(len(coeffs_low) - 1, -1, -1):
        c = coeffs_low[deg]
        if not c:
            continue
        if deg == 0:
            terms.append(str(c))
        elif deg == 1:
            terms.append(var if c == 1 else f"{c}{var}")
        else:
            terms.append(f"{var}^{deg}" if c == 1 else f"{c}{var}^{deg}")
    return "+".join(terms) if terms else "0"


def parse_poly(text: str, p: int) -> tuple[int, ...]:
    s = text.replace(" ", "").replace("*", "").replace("−", "-")
    s = _strip_parens(s)
    if not s:
        raise FieldParseError("empty polynomial literal")
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
        m = _TERM.match(body)
        if not m or (not m.group(1) and not m.group(2)):
            raise FieldParseError(f"cannot parse term {body!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        deg = 0
        if m.group(2):
            deg = int(m.group(3)) if m.group(3) else 1
        if sign == "-":
            c = -c
        coeffs[deg] = coeffs.get(deg, 0) + c
    if re.sub(r"([+-]?)([^+-]+)", "", s):
        raise FieldParseError(f"cannot parse {text!r}")
    top = max(coeffs)
    return _trim([coeffs.get(i, 0) for i in range(top + 1)], p)


def _strip_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1]
    return s


def _split_fraction(s: str) -> tuple[str, str] | None:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return s[:i], s[i + 1:]
    return None


# =============================================================================
# Field specs
# =============================================================================


def parse_field_spec(text: str) -> FieldSpec:
    """Parse ``p``, ``p^k``, ``p^k/c_k,...,c_0``, ``p(t)`` or a built-in name."""
    s = text.strip().lower().replace(" ", "")
    s = BUILTIN_FIELDS.get(s, s)
    if m := _SPEC_PRIME.match(s):
        return FieldSpec(kind=FieldKind.PRIME, p=int(m.group(1)))
    if m := _SPEC_RATIONAL.match(s):
        return FieldSpec(kind=FieldKind.RATIONAL_FUNCTION, p=int(m.group(1)))
    if m := _SPEC_POWER.match(s):
        p, k = int(m.group(1)), int(m.group(2))
        if k == 1:
            return FieldSpec(kind=FieldKind.PRIME, p=p)
        return FieldSpec(kind=FieldKind.EXTENSION, p=p, k=k)
    if m := _SPEC_MODULUS.match(s):
        p, k = int(m.group(1)), int(m.group(2))
        modulus = tuple(int(c) for c in m.group(3).split(","))
        if len(modulus) != k + 1:
            raise FieldParseError(f"modulus of degree {k} needs {k + 1} coefficients, got {len(modulus)}")
        return FieldSpec(kind=FieldKind.EXTENSION, p=p, k=k, modulus=modulus)
    raise FieldParseError(f"unrecognized field spec {text!r}")


def field_spec_string(spec: FieldSpec) -> str:
    if spec.kind == FieldKind.PRIME:
        return str(spec.p)
    if spec.kind == FieldKind.RATIONAL_FUNCTION:
        return f"{spec.p}(t)"
    if spec.modulus is None:
        return f"{spec.p}^{spec.k}"
    return f"{spec.p}^{spec.k}/" + ",".join(str(c) for c in spec.modulus)


# =============================================================================
# Elements
# =============================================================================


class FieldElement:
    """An element in canonical form.

    ``value`` is the residue (Prime), the enumeration index (Extension) or a
    pair of coefficient tuples ``(num, den)`` (RationalFunction).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value) -> None:
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field.spec != self.field.spec:
                raise MixedFields(f"cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.field.div(other, self)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, exponent: int):
        return self.field.pow(self, exponent)

    def __bool__(self) -> bool:
        return not self.field.is_zero(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and (
                other.field is self.field or other.field.spec == self.field.spec
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return self.field.format(self)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.format(self)!r})"


# =============================================================================
# Fields
# =============================================================================


class Field:
    """Arithmetic context for one field; immutable after construction."""

    def __init__(self, spec: FieldSpec) -> None:
        if not is_prime(spec.p):
            raise NonPrimeP(f"{spec.p} is not prime")
        self.spec = spec
        self.p = spec.p
        self.k = 1
        self._modulus: tuple[int, ...] = ()
        self._elements: list[FieldElement] | None = None
        self._add_t = self._mul_t = None
        self._inv_t: list[int] | None = None
        self._np_tables = None

        if spec.kind == FieldKind.EXTENSION:
            if spec.k > MAX_DEGREE:
                raise UnsupportedDegree(f"extension degree {spec.k} exceeds {MAX_DEGREE}")
            if spec.k < 1:
                raise UnsupportedDegree(f"extension degree must be positive, got {spec.k}")
            self.k = spec.k
            high = spec.modulus if spec.modulus is not None else default_modulus(spec.p, spec.k)
            if len(high) != spec.k + 1 or high[0] % spec.p != 1:
                raise ReducibleModulus(f"modulus {high} is not monic of degree {spec.k}")
            low = tuple(reversed(high))
            if not is_irreducible(low, spec.p):
                raise ReducibleModulus(
                    f"{format_poly(_trim(low, spec.p))} is reducible over GF({spec.p})"
                )
            self._modulus = _trim(low, spec.p)

        if self.is_finite and self.order <= CACHE_LIMIT:
            self._elements = [FieldElement(self, i) for i in range(self.order)]
        if spec.kind == FieldKind.EXTENSION and self.order <= TABLE_LIMIT:
            self._build_tables()

        if spec.kind == FieldKind.RATIONAL_FUNCTION:
            self.zero = FieldElement(self, ((), (1,)))
            self.one = FieldElement(self, ((1,), (1,)))
        else:
            self.zero = self._wrap(0)
            self.one = self._wrap(1)
        logger.debug(f"Built field {self}")

    # --- Metadata ---

    @property
    def kind(self) -> FieldKind:
        return self.spec.kind

    @property
    def is_finite(self) -> bool:
        return self.spec.kind != FieldKind.RATIONAL_FUNCTION

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteField(f"{self} is infinite")
        return self.p**self.k

    @property
    def modulus(self) -> tuple[int, ...] | None:
        """Modulus coefficients from the leading term down (Extension only)."""
        if self.spec.kind != FieldKind.EXTENSION:
            return None
        return tuple(reversed(self._modulus))

    def __str__(self) -> str:
        if self.spec.kind == FieldKind.PRIME:
            return f"GF({self.p})"
        if self.spec.kind == FieldKind.EXTENSION:
            return f"GF({self.p}^{self.k})"
        return f"GF({self.p})(t)"

    __repr__ = __str__

    # --- Construction of elements ---

    def _wrap(self, value) -> FieldElement:
        if self._elements is not None:
            return self._elements[value]
        return FieldElement(self, value)

    def from_int(self, n: int) -> FieldElement:
        if self.spec.kind == FieldKind.RATIONAL_FUNCTION:
            c = n % self.p
            return FieldElement(self, ((c,) if c else (), (1,)))
        return self._wrap(n % self.p)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value if value.field is self else self._foreign(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot build an element of {self} from {value!r}")

    def _foreign(self, x: FieldElement) -> FieldElement:
        if x.field.spec != self.spec:
            raise MixedFields(f"{x!r} does not belong to {self}")
        return FieldElement(self, x.value) if self._elements is None else self._elements[x.value]

    def from_poly(self, coeffs_low) -> FieldElement:
        """Element with the given coefficient list in t (Extension or RationalFunction)."""
        if self.spec.kind == FieldKind.PRIME:
            c = _trim(coeffs_low, self.p)
            if len(c) > 1:
                raise FieldParseError(f"{format_poly(c)} is not an element of {self}")
            return self.from_int(c[0] if c else 0)
        if self.spec.kind == FieldKind.EXTENSION:
            rem = _poly_divmod(_trim(coeffs_low, self.p), self._modulus, self.p)[1]
            return self._wrap(self._poly_to_index(rem))
        return self.fraction(coeffs_low, (1,))

    def fraction(self, num, den) -> FieldElement:
        """Reduced fraction num/den (RationalFunction)."""
        if self.spec.kind != FieldKind.RATIONAL_FUNCTION:
            return self.from_poly(num) / self.from_poly(den)
        return FieldElement(self, self._reduce(_trim(num, self.p), _trim(den, self.p)))

    def element_at(self, index: int) -> FieldElement:
        if not self.is_finite:
            raise InfiniteField(f"{self} has no enumeration")
        return self._wrap(index)

    def index_of(self, x: FieldElement) -> int:
        if not self.is_finite:
            raise InfiniteField(f"{self} has no enumeration")
        return x.value

    def elements(self) -> list[FieldElement]:
        """All elements in enumeration order."""
        if not self.is_finite:
            raise InfiniteField(f"{self} cannot be enumerated")
        if self._elements is not None:
            return list(self._elements)
        return [FieldElement(self, i) for i in range(self.order)]

    def random_element(self, rng: random.Random, degree: int = 2) -> FieldElement:
        if self.is_finite:
            return self._wrap(rng.randrange(self.order))
        num = [rng.randrange(self.p) for _ in range(rng.randint(0, degree) + 1)]
        den_deg = rng.randint(0, degree)
        den = [rng.randrange(self.p) for _ in range(den_deg)] + [1]
        return self.fraction(num, den)

    def random_nonzero(self, rng: random.Random, degree: int = 2) -> FieldElement:
        while True:
            x = self.random_element(rng, degree)
            if x:
                return x

    # --- Index <-> polynomial (Extension) ---

    def _index_to_poly(self, index: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.k):
            index, d = divmod(index, self.p)
            digits.append(d)
        return _trim(digits, self.p)

    def _poly_to_index(self, coeffs_low) -> int:
        index = 0
        for c in reversed(coeffs_low):
            index = index * self.p + c
        return index

    def _ext_mul_v(self, a: int, b: int) -> int:
        prod = _poly_mul(self._index_to_poly(a), self._index_to_poly(b), self.p)
        return self._poly_to_index(_poly_divmod(prod, self._modulus, self.p)[1])

    def _ext_add_v(self, a: int, b: int) -> int:
        return self._poly_to_index(
            _poly_add(self._index_to_poly(a), self._index_to_poly(b), self.p)
        )

    def _ext_neg_v(self, a: int) -> int:
        return self._poly_to_index(_poly_scale(self._index_to_poly(a), -1, self.p))

    def _build_tables(self) -> None:
        q = self.order
        self._add_t = [[self._ext_add_v(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._ext_mul_v(a, b) for b in range(q)] for a in range(q)]
        self._neg_t = [self._add_t[a].index(0) for a in range(q)]
        self._inv_t = [0] * q
        for a in range(1, q):
            self._inv_t[a] = self._mul_t[a].index(1)

    def arith_tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Addition and multiplication tables indexed by element value, or None."""
        if not self.is_finite or self.order > TABLE_LIMIT:
            return None
        if self._np_tables is None:
            q = self.order
            if self.spec.kind == FieldKind.PRIME:
                r = np.arange(q, dtype=np.int64)
                add = np.add.outer(r, r) % q
                mul = np.multiply.outer(r, r) % q
            else:
                add = np.array(self._add_t, dtype=np.int64)
                mul = np.array(self._mul_t, dtype=np.int64)
            self._np_tables = (add, mul)
        return self._np_tables

    # --- Rational functions ---

    def _reduce(self, num, den):
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return ((), (1,))
        g = _poly_gcd(num, den, self.p)
        if len(g) > 1:
            num = _poly_divmod(num, g, self.p)[0]
            den = _poly_divmod(den, g, self.p)[0]
        inv_lead = pow(den[-1], self.p - 2, self.p)
        return _poly_scale(num, inv_lead, self.p), _poly_scale(den, inv_lead, self.p)

    # --- Arithmetic ---

    def is_zero(self, x: FieldElement) -> bool:
        if self.spec.kind == FieldKind.RATIONAL_FUNCTION:
            return not x.value[0]
        return x.value == 0

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        kind = self.spec.kind
        if kind == FieldKind.PRIME:
            return self._wrap((x.value + y.value) % self.p)
        if kind == FieldKind.EXTENSION:
            if self._add_t is not None:
                return self._elements[self._add_t[x.value][y.value]]
            return self._wrap(self._ext_add_v(x.value, y.value))
        (a, b), (c, d) = x.value, y.value
        p = self.p
        if b == d:
            return FieldElement(self, self._reduce(_poly_add(a, c, p), b))
        num = _poly_add(_poly_mul(a, d, p), _poly_mul(c, b, p), p)
        return FieldElement(self, self._reduce(num, _poly_mul(b, d, p)))

    def neg(self, x: FieldElement) -> FieldElement:
        kind = self.spec.kind
        if kind == FieldKind.PRIME:
            return self._wrap(-x.value % self.p)
        if kind == FieldKind.EXTENSION:
            if self._add_t is not None:
                return self._elements[self._neg_t[x.value]]
            return self._wrap(self._ext_neg_v(x.value))
        a, b = x.value
        return FieldElement(self, (_poly_scale(a, -1, self.p), b))

    def sub(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if self.spec.kind == FieldKind.PRIME:
            return self._wrap((x.value - y.value) % self.p)
        return self.add(x, self.neg(y))

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        kind = self.spec.kind
        if kind == FieldKind.PRIME:
            return self._wrap(x.value * y.value % self.p)
        if kind == FieldKind.EXTENSION:
            if self._mul_t is not None:
                return self._elements[self._mul_t[x.value][y.value]]
            return self._wrap(self._ext_mul_v(x.value, y.value))
        (a, b), (c, d) = x.value, y.value
        p = self.p
        return FieldElement(self, self._reduce(_poly_mul(a, c, p), _poly_mul(b, d, p)))

    def inv(self, x: FieldElement) -> FieldElement:
        if self.is_zero(x):
            raise DivisionByZero(f"{x} has no inverse in {self}")
        kind = self.spec.kind
        if kind == FieldKind.PRIME:
            return self._wrap(pow(x.value, self.p - 2, self.p))
        if kind == FieldKind.EXTENSION:
            if self._inv_t is not None:
                return self._elements[self._inv_t[x.value]]
            return self.pow(x, self.order - 2)
        a, b = x.value
        return FieldElement(self, self._reduce(b, a))

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def pow(self, x: FieldElement, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.pow(self.inv(x), -exponent)
        result, base = self.one, x
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    # --- Cube roots ---

    def primitive_cube_roots(self) -> list[FieldElement]:
        """Solutions of x^2 + x + 1 = 0 other than 1, in enumeration order."""
        if self.spec.kind == FieldKind.RATIONAL_FUNCTION:
            base = make_field(FieldSpec(kind=FieldKind.PRIME, p=self.p))
            return [self.from_int(w.value) for w in base.primitive_cube_roots()]
        if self.p == 3 or self.order % 3 != 1:
            return []
        return [x for x in self.elements() if x != self.one and not (x * x + x + self.one)]

    def omega(self) -> FieldElement | None:
        roots = self.primitive_cube_roots()
        return roots[0] if roots else None

    def is_cube(self, a: FieldElement) -> bool:
        if not a:
            return True
        if self.is_finite:
            q = self.order
            return self.pow(a, (q - 1) // math.gcd(3, q - 1)) == self.one
        return self.cube_root(a) is not None

    def cube_root(self, a: FieldElement) -> FieldElement | None:
        """Some c with c^3 = a (first in enumeration order for finite fields)."""
        if not a:
            return self.zero
        if self.is_finite:
            if not self.is_cube(a):
                return None
            return next(c for c in self.elements() if self.pow(c, 3) == a)
        num, den = a.value
        base = make_field(FieldSpec(kind=FieldKind.PRIME, p=self.p))
        scalar = base.cube_root(base.from_int(num[-1]))
        if scalar is None:
            return None
        num_root = _poly_cube_root(_poly_monic(num, self.p), self.p)
        den_root = _poly_cube_root(den, self.p)
        if num_root is None or den_root is None:
            return None
        return self.fraction(_poly_scale(num_root, scalar.value, self.p), den_root)

    # --- Text ---

    def format(self, x: FieldElement) -> str:
        kind = self.spec.kind
        if kind == FieldKind.PRIME:
            return str(x.value)
        if kind == FieldKind.EXTENSION:
            return format_poly(self._index_to_poly(x.value))
        num, den = x.value
        if den == (1,):
            return format_poly(num)
        n, d = format_poly(num), format_poly(den)
        if "+" in n:
            n = f"({n})"
        if "+" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def parse(self, text: str) -> FieldElement:
        s = text.strip().replace(" ", "").replace("−", "-")
        if not s:
            raise FieldParseError("empty element literal")
        if self.spec.kind == FieldKind.PRIME:
            s = _strip_parens(s)
            try:
                return self.from_int(int(s))
            except ValueError:
                raise FieldParseError(f"{text!r} is not an element of {self}") from None
        if self.spec.kind == FieldKind.EXTENSION:
            return self.from_poly(parse_poly(s, self.p))
        parts = _split_fraction(_strip_parens(s))
        if parts is None:
            return self.fraction(parse_poly(s, self.p), (1,))
        num, den = parse_poly(parts[0], self.p), parse_poly(parts[1], self.p)
        if not den:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return self.fraction(num, den)


@functools.cache
def make_field(spec: FieldSpec) -> Field:
    return Field(spec)


def field_from_string(text: str) -> Field:
    return make_field(parse_field_spec(text))


def enumerate_elements(f: Field) -> list[FieldElement]:
    return f.elements()


class TableArithmetic:
    """Vectorized arithmetic on arrays of element indices of a small finite field."""

    def __init__(self, field: Field) -> None:
        tables = field.arith_tables()
        if tables is None:
            raise InfiniteField(f"{field} has no arithmetic tables")
        self.field = field
        self.q = field.order
        self.add_t, self.mul_t = tables
        self.neg_t = np.argmax(self.add_t == 0, axis=1)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_t[a, b]

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add_t[a, self.neg_t[b]]

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.mul_t[a, b]

    def neg(self, a: np.ndarray) -> np.ndarray:
        return self.neg_t[a]

    def scale(self, c: FieldElement, a: np.ndarray) -> np.ndarray:
        return self.mul_t[c.value, a]

    def grid(self, n: int) -> np.ndarray:
        """Every n-tuple of indices, one per row, in lexicographic order."""
        if n == 0:
            return np.zeros((1, 0), dtype=np.int64)
        return np.indices((self.q,) * n, dtype=np.int64).reshape(n, -1).T

    def to_elements(self, row) -> tuple[FieldElement, ...]:
        return tuple(self.field.element_at(int(i)) for i in row)
