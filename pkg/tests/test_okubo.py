"""Tests for src.okubo.

Covers the multiplication table, the norm and its polar form, zero-divisor
classification, annihilators, orthogonalizers, idempotents, the char-3
subclasses, the explicit automorphism and the identity suite.

Testing strategy
----------------
- Literal products and subspaces read off the table.
- Exhaustive annihilator checks over GF(2), samples elsewhere.
- hypothesis for the symmetric-composition identities.
- Fault injection: a patched product must break the identity suite.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import (
    ConfigurationError,
    MixedAlgebras,
    NotChar3,
    NotChar3Split,
    NotIdempotent,
    NotSplit,
    NotTypeC,
    NotZeroDivisor,
    ParseError,
)
from src.field import field_from_string
from src.linalg import BASIS_NAMES, contains, intersect, span
from src.models import Char3Subclass, ZeroDivisorClass
from src.okubo import (
    OkuboAlgebra,
    ann_intersection,
    automorphism_failure,
    centralizer,
    char3_subclass,
    classify,
    classify_vec,
    identity_suite,
    is_idempotent,
    is_zero_divisor,
    left_ann,
    left_image,
    nonsplit_char3_witness,
    orthogonalizer,
    phi_map,
    quaternionic_idempotent,
    right_ann,
    right_image,
    singular_span,
    split_idempotent,
    standard_idempotent,
    zero_square_pair,
)


def _span(a: OkuboAlgebra, *names: str):
    return span(a.field, [a.z(n).coeffs for n in names])


def _element(a: OkuboAlgebra, indices: list[int]):
    return a.element([a.field.element_at(i) for i in indices])


# ---------------------------------------------------------------------------
# 1. Products, norm and parsing
# ---------------------------------------------------------------------------
class TestProducts:
    """Entries of the multiplication table and the appendix products."""

    def test_table_entries(self, o3):
        assert o3.z("z10") * o3.z("z10") == o3.z("z20")
        assert o3.z("z10") * o3.z("z01") == -o3.z("z11")
        assert not o3.z("z10") * o3.z("z20")

    def test_alpha_beta_enter_the_table(self, gf7):
        a = OkuboAlgebra(gf7, gf7(2), gf7(3))
        assert a.z("z20") * a.z("z20") == a.z("z10") * gf7(2)
        assert a.z("z02") * a.z("z02") == a.z("z01") * gf7(3)
        assert a.z("z22") * a.z("z22") == a.z("z11") * gf7(6)

    @pytest.mark.parametrize("alpha, beta", [(0, 1), (1, 0)])
    def test_zero_parameter_raises(self, gf7, alpha, beta):
        with pytest.raises(ConfigurationError):
            OkuboAlgebra(gf7, gf7(alpha), gf7(beta))

    def test_appendix_square(self, o3):
        x = o3.parse("z01 - z11")
        assert x * x == o3.parse("z02 + z12 + z22")
        assert o3.format_vector(x * x) == "{0, 0, 0, 1, 0, 1, 1, 0}"

    def test_mixed_algebras(self, o3, gf3):
        other = OkuboAlgebra.build(gf3)
        with pytest.raises(MixedAlgebras):
            o3.z("z10") * other.z("z10")

    def test_parse_and_format(self, o4):
        x = o4.parse("t*z10 - z21 + (t+1)*z02")
        assert x["z10"] == o4.field.parse("t")
        assert x["z21"] == -o4.field.one
        assert o4.parse(o4.format(x)) == x
        assert o4.format(o4.zero()) == "0"

    @pytest.mark.parametrize("text", ["", "z33", "2*", "z10 + q*z20"])
    def test_parse_errors(self, o3, text):
        with pytest.raises(ParseError):
            o3.parse(text)


class TestNorm:
    """The quadratic form and its polar bilinear form."""

    def test_bilin_examples(self, gf7):
        a = OkuboAlgebra(gf7, gf7(2), gf7(3))
        assert a.bilin(a.z("z10"), a.z("z20")) == gf7(2)
        assert a.bilin(a.z("z10"), a.z("z01")) == gf7.zero
        assert a.bilin(a.z("z12"), a.z("z21")) == gf7(6)

    def test_bilin_sum_of_triples(self, o3, o4):
        for a in (o3, o4):
            x, y = a.parse("z02 + z12 + z22"), a.parse("z01 + z11 + z21")
            assert a.bilin(x, y) == a.field(3)

    def test_qnorm_examples(self, o3):
        assert not o3.qnorm(o3.z("z10"))
        assert o3.qnorm(o3.parse("z10 + z20")) == o3.field.one
        assert not o3.qnorm(o3.parse("z01 - z11"))

    @settings(max_examples=200, deadline=None)
    @given(data=st.data())
    def test_polarization_in_characteristic_two(self, o4, data):
        idx = st.lists(st.integers(min_value=0, max_value=3), min_size=8, max_size=8)
        x, y = _element(o4, data.draw(idx)), _element(o4, data.draw(idx))
        assert o4.qnorm(x + y) - o4.qnorm(x) - o4.qnorm(y) == o4.bilin(x, y)

    def test_zero_divisor_predicate(self, o3):
        assert is_zero_divisor(o3, o3.z("z10"))
        assert not is_zero_divisor(o3, o3.parse("z10 + z20"))
        assert not is_zero_divisor(o3, o3.zero())


# ---------------------------------------------------------------------------
# 2. Annihilators and orthogonalizers
# ---------------------------------------------------------------------------
class TestAnnihilators:
    """Kernels of the multiplication operators and their image cross-check."""

    def test_annihilators_of_z10(self, o3):
        z10 = o3.z("z10")
        assert left_ann(o3, z10) == _span(o3, "z20", "z01", "z11", "z21")
        assert right_ann(o3, z10) == _span(o3, "z20", "z02", "z22", "z12")

    def test_orthogonalizer_of_z10(self, o3):
        assert orthogonalizer(o3, o3.z("z10")) == _span(o3, "z20")

    def test_orthogonalizer_of_square_zero_element(self, o4):
        x = o4.parse("z02 + z12 + z22")
        expected = span(o4.field, [x.coeffs, o4.parse("z01 - z11").coeffs, o4.parse("z01 - z21").coeffs])
        assert orthogonalizer(o4, x) == expected

    def test_not_a_zero_divisor(self, o3):
        with pytest.raises(NotZeroDivisor):
            left_ann(o3, o3.parse("z10 + z20"))
        with pytest.raises(NotZeroDivisor):
            orthogonalizer(o3, o3.zero())

    def test_exhaustive_gf2(self, o2, g2):
        for v in g2.vertices:
            x = o2.element(v)
            la, ra = left_ann(o2, x), right_ann(o2, x)
            assert la.dim == ra.dim == 4, f"annihilators of {x}"
            assert la == left_image(o2, x)
            assert ra == right_image(o2, x)
            o = orthogonalizer(o2, x)
            assert o == intersect(la, ra)
            if x * x:
                assert o == span(o2.field, [(x * x).coeffs])
            else:
                assert o.dim == 3

    @pytest.mark.parametrize("name", ["gf4", "gf5", "gf7"])
    def test_sampled(self, name):
        a = OkuboAlgebra.build(field_from_string(name))
        rng = random.Random(5)
        for _ in range(100):
            x = a.random_zero_divisor(rng)
            assert left_ann(a, x).dim == right_ann(a, x).dim == 4
            assert orthogonalizer(a, x).dim in (1, 3)

    def test_non_split_rational_functions(self, o3t):
        rng = random.Random(2)
        for _ in range(20):
            x = o3t.random_zero_divisor(rng)
            assert left_ann(o3t, x).dim == 4
            assert orthogonalizer(o3t, x) == intersect(left_ann(o3t, x), right_ann(o3t, x))


class TestAnnihilatorIntersections:
    """(x*O) ∩ (O*y) is the line of x*y, or 3-dimensional when x*y = 0."""

    def test_z10_z01(self, o3):
        assert ann_intersection(o3, o3.z("z10"), o3.z("z01")) == _span(o3, "z11")

    def test_z10_z10(self, o3):
        assert ann_intersection(o3, o3.z("z10"), o3.z("z10")) == _span(o3, "z20")

    def test_z10_z20(self, o3):
        assert ann_intersection(o3, o3.z("z10"), o3.z("z20")).dim == 3


# ---------------------------------------------------------------------------
# 3. Classification
# ---------------------------------------------------------------------------
class TestClassify:
    """TypeA / TypeB / TypeC by n(x, x*x) and x*x."""

    def test_examples(self, o3):
        assert classify(o3, o3.z("z10")) == ZeroDivisorClass.TYPE_A
        assert classify(o3, o3.parse("z01 - z11")) == ZeroDivisorClass.TYPE_B
        assert classify(o3, o3.parse("z02 + z12 + z22")) == ZeroDivisorClass.TYPE_C

    def test_vector_form_agrees(self, o2, g2):
        for v in g2.vertices:
            assert classify_vec(o2, v) == classify(o2, o2.element(v))

    def test_scale_invariance(self, o4):
        rng = random.Random(9)
        for _ in range(200):
            x = o4.random_zero_divisor(rng)
            lam = o4.field.random_nonzero(rng)
            assert classify(o4, x.scale(lam)) == classify(o4, x)

    def test_middle_elements_square_to_zero(self, o3, g3):
        square_zero = [o3.element(v) for v, c in zip(g3.vertices, g3.classes) if c == ZeroDivisorClass.TYPE_C]
        rng = random.Random(4)
        for _ in range(300):
            x, y = rng.choice(square_zero), rng.choice(square_zero)
            xy, yx = x * y, y * x
            assert not xy * xy
            assert not yx * yx


# ---------------------------------------------------------------------------
# 4. Idempotents and the char-3 taxonomy
# ---------------------------------------------------------------------------
class TestIdempotents:
    """Standard and quaternionic idempotents and their centralizers."""

    def test_standard_idempotent(self, o4, o3):
        assert o4.parse("z10 + z20") == standard_idempotent(o4)
        assert is_idempotent(o3, o3.parse("z10 + z20"))
        assert not is_idempotent(o3, o3.z("z10"))

    def test_standard_idempotent_with_cube_alpha(self, gf7):
        a = OkuboAlgebra(gf7, gf7(6), gf7.one)  # 6 = 3^3 in GF(7)
        assert is_idempotent(a, standard_idempotent(a))

    def test_standard_idempotent_needs_cube(self, gf7):
        with pytest.raises(NotSplit):
            standard_idempotent(OkuboAlgebra(gf7, gf7(2), gf7.one))

    def test_quaternionic(self, o3):
        e = quaternionic_idempotent(o3)
        assert e == o3.parse(" + ".join(BASIS_NAMES))
        assert is_idempotent(o3, e)
        assert split_idempotent(o3) == e

    def test_quaternionic_requirements(self, o4, o3t):
        with pytest.raises(NotChar3):
            quaternionic_idempotent(o4)
        with pytest.raises(NotSplit):
            quaternionic_idempotent(o3t)

    def test_centralizer(self, o3):
        e = quaternionic_idempotent(o3)
        c = centralizer(o3, e)
        assert c.dim == 6
        assert contains(c, e.coeffs)
        with pytest.raises(NotIdempotent):
            centralizer(o3, o3.z("z10"))


class TestChar3Subclass:
    """Singular and quadratic square-zero elements of the split char-3 algebra."""

    def test_examples(self, o3):
        singular = o3.parse("z02 + z12 + z22 - z01 - z21 - z11")
        assert char3_subclass(o3, singular) == Char3Subclass.SINGULAR
        assert char3_subclass(o3, o3.parse("z02 + z12 + z22")) == Char3Subclass.QUADRATIC
        assert contains(singular_span(o3), singular.coeffs)

    def test_every_square_zero_lies_in_centralizer(self, o3, g3):
        c = centralizer(o3, quaternionic_idempotent(o3))
        for v, cls in zip(g3.vertices, g3.classes):
            if cls == ZeroDivisorClass.TYPE_C:
                assert contains(c, v)

    def test_singular_span(self, o3):
        s = singular_span(o3)
        points = list(s.projective_points())
        assert s.dim == 2
        assert len(points) == 4
        for p in points:
            assert char3_subclass(o3, o3.element(p)) == Char3Subclass.SINGULAR
            for q in points:
                assert not any(o3.mul_vec(p, q))

    def test_errors(self, o3, o4):
        with pytest.raises(NotTypeC):
            char3_subclass(o3, o3.z("z10"))
        with pytest.raises(NotChar3Split):
            char3_subclass(o4, o4.parse("z02 + z12 + z22"))


# ---------------------------------------------------------------------------
# 5. Explicit elements
# ---------------------------------------------------------------------------
class TestExplicitElements:
    """The automorphism, zero-square pairs and the non-split witness."""

    @pytest.mark.parametrize("name", ["gf2", "gf3", "gf4", "gf7"])
    def test_phi_is_an_automorphism(self, name):
        a = OkuboAlgebra.build(field_from_string(name))
        assert automorphism_failure(a, phi_map(a)) is None

    def test_phi_exchanges_singular_plane(self, o3):
        phi = phi_map(o3)
        image = phi.apply(o3.parse("z02 + z12 + z22 - z01 - z21 - z11").coeffs)
        assert o3.element(image) == o3.parse("z10 + z01 + z22 - z20 - z02 - z11")

    def test_patched_table_breaks_phi(self, o3):
        patched = o3.with_patched_product(0, 0, o3.z("z10").coeffs)
        assert automorphism_failure(patched, phi_map(patched)) is not None

    @pytest.mark.parametrize("name", ["gf3", "gf4", "gf7"])
    def test_zero_square_pair(self, name):
        a = OkuboAlgebra.build(field_from_string(name))
        x, y = zero_square_pair(a)
        for u in (x, y):
            for v in (x, y):
                assert not u * v, f"{u} * {v} over {name}"

    def test_nonsplit_witness(self, o3t):
        k = o3t.field.one
        w = nonsplit_char3_witness(o3t, k)
        beta = o3t.beta
        assert not w.u * w.u
        assert w.w * w.w == w.u.scale(beta * (beta + k))
        assert w.w * w.w

    def test_nonsplit_witness_needs_char3(self, o4):
        with pytest.raises(NotChar3):
            nonsplit_char3_witness(o4, 1)


# ---------------------------------------------------------------------------
# 6. Identity suite
# ---------------------------------------------------------------------------
class TestIdentities:
    """Composition, symmetry, flexibility, linearization and the square-of-square law."""

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_identities_gf4(self, o4, data):
        idx = st.lists(st.integers(min_value=0, max_value=3), min_size=8, max_size=8)
        x, y, z = (_element(o4, data.draw(idx)) for _ in range(3))
        n, b = o4.qnorm, o4.bilin
        assert n(x * y) == n(x) * n(y)
        assert b(x * y, z) == b(x, y * z)
        assert (x * y) * x == x * (y * x) == y.scale(n(x))
        assert (x * y) * z + (z * y) * x == y.scale(b(x, z))
        xx = x * x
        assert xx * xx == x.scale(b(x, xx)) - xx.scale(n(x))

    @pytest.mark.parametrize(
        "name, beta", [("gf2", "1"), ("gf3", "2"), ("gf5", "2"), ("gf7", "2"), ("gf4", "t")]
    )
    def test_identity_suite_passes(self, name, beta):
        f = field_from_string(name)
        report = identity_suite(OkuboAlgebra(f, f.one, f.parse(beta)), trials=300, seed=1)
        assert report.passed, [c.counterexample for c in report.failures]
        assert len(report.checks) == 5

    def test_identity_suite_rational_functions(self, o3t):
        report = identity_suite(o3t, trials=100, seed=2)
        assert report.passed, [c.counterexample for c in report.failures]

    def test_corrupted_table_fails_composition(self, o4):
        patched = o4.with_patched_product(0, 0, o4.z("z10").coeffs)
        assert patched.is_patched and not o4.is_patched
        report = identity_suite(patched, trials=300, seed=3)
        composition = next(c for c in report.checks if c.name == "composition")
        assert not composition.passed
        assert composition.counterexample
