"""Tests for src.constructions.

Covers the pseudo-octonion product on traceless matrices, nilpotent
enumeration and the cube law, the nilpotent line graph, the Zorn
vector-matrix algebra and the Hurwitz product and automorphism recovered
from an idempotent.

Testing strategy
----------------
- Literal matrices (Omega, E12) for the product and classification.
- Exhaustive enumeration over GF(2) and GF(4) where it is cheap; the
  nilpotent line graph over GF(4) is marked slow.
- A deliberately wrong automorphism must break the reconstruction.
"""

import random

import pytest

from src.constructions import (
    ZORN_NAMES,
    PseudoOctonions,
    TracelessMatrix,
    ZornElement,
    align_zorn_basis,
    cube_law_census,
    cube_law_sampled,
    fixed_space,
    hurwitz_from_idempotent,
    matrix_orthogonalizer,
    nilpotent_graph_summary,
    nilpotent_line_graph,
    nilpotents,
    omega_matrix,
    orth_equiv_check,
    orth_equiv_exhaustive,
    p8_bilin,
    p8_classify_zero_divisor,
    p8_mul,
    p8_norm,
    petersson_reconstruct_check,
    pseudo_octonions,
    random_zorn,
    tau_closed_form,
    tau_from_idempotent,
    zorn_basis,
    zorn_conj,
    zorn_mul,
    zorn_norm,
    zorn_table_failure,
)
from src.errors import Char3, NoCubeRoot, NotIdempotent, NotZeroDivisor
from src.graphs import expected_vertex_count
from src.linalg import Matrix, unit_vector
from src.models import P8ZeroDivisorKind
from src.okubo import centralizer, composition_identity_checks, quaternionic_idempotent, standard_idempotent


def _diag(f, *entries):
    rows = [[f.zero] * 3 for _ in range(3)]
    for i, c in enumerate(entries):
        rows[i][i] = f(c)
    return TracelessMatrix(f, rows)


def _zorn_product(x, y):
    return zorn_mul(ZornElement.from_coords(x), ZornElement.from_coords(y)).coords()


# ---------------------------------------------------------------------------
# 1. Traceless matrices
# ---------------------------------------------------------------------------
class TestTracelessMatrix:
    """Construction guards and coordinates."""

    def test_trace_must_vanish(self, gf7):
        with pytest.raises(ValueError):
            _diag(gf7, 1, 0, 0)

    def test_unit_rejects_diagonal(self, gf7):
        with pytest.raises(ValueError):
            TracelessMatrix.unit(gf7, 2, 2)

    def test_coordinates_round_trip(self, gf7):
        rng = random.Random(1)
        for _ in range(20):
            coords = [gf7.random_element(rng) for _ in range(8)]
            x = TracelessMatrix.from_coords(gf7, coords)
            assert x.coords() == tuple(coords)
            assert TracelessMatrix.from_coords(gf7, x.coords()) == x


# ---------------------------------------------------------------------------
# 2. Pseudo-octonions
# ---------------------------------------------------------------------------
class TestPseudoOctonions:
    """The twisted matrix product, its norm and the two kinds of zero divisors."""

    def test_omega_squared(self, gf4):
        omega = omega_matrix(gf4)
        w = gf4.omega()
        assert p8_mul(gf4, omega, omega) == _diag(gf4, 1, w * w, w)
        assert not p8_norm(omega)

    def test_nilpotent_square_is_matrix_square(self, gf7):
        y = TracelessMatrix.unit(gf7, 1, 2) + TracelessMatrix.unit(gf7, 2, 3)
        assert y.is_nilpotent()
        assert p8_mul(gf7, y, y) == TracelessMatrix(gf7, y @ y)

    def test_classification(self, gf4):
        assert p8_classify_zero_divisor(TracelessMatrix.unit(gf4, 1, 2)) == P8ZeroDivisorKind.NILPOTENT
        assert p8_classify_zero_divisor(omega_matrix(gf4)) == P8ZeroDivisorKind.OMEGA_TYPE
        with pytest.raises(NotZeroDivisor):
            p8_classify_zero_divisor(TracelessMatrix.from_coords(gf4, [1, 1, 0, 0, 0, 0, 0, 0]))

    def test_field_requirements(self, gf2, gf3):
        with pytest.raises(NoCubeRoot):
            PseudoOctonions(gf2)
        with pytest.raises(Char3):
            PseudoOctonions(gf3)
        with pytest.raises(Char3):
            p8_norm(TracelessMatrix.unit(gf3, 1, 2))

    @pytest.mark.parametrize("name", ["gf4", "gf7"])
    def test_identities(self, name):
        from src.field import field_from_string

        p = pseudo_octonions(field_from_string(name))
        checks = composition_identity_checks(p.ops(), 200, random.Random(4))
        failures = [c for c in checks if not c.passed]
        assert not failures, [c.counterexample for c in failures]

    def test_polarization(self, gf7):
        p = pseudo_octonions(gf7)
        rng = random.Random(6)
        for _ in range(200):
            x, y = p.random_element(rng), p.random_element(rng)
            assert p8_norm(x + y) - p8_norm(x) - p8_norm(y) == p8_bilin(x, y)

    def test_cube_law_exhaustive_gf4(self, gf4):
        census = cube_law_census(gf4)
        assert census.counterexample is None
        assert census.zero_divisors == expected_vertex_count(4) * 3
        assert census.nilpotent == 4**6 - 1

    def test_cube_law_sampled(self, gf7):
        census = cube_law_sampled(gf7, 300, random.Random(2))
        assert census.counterexample is None
        assert census.zero_divisors == 300


# ---------------------------------------------------------------------------
# 3. Nilpotents
# ---------------------------------------------------------------------------
class TestNilpotents:
    """Enumeration of nilpotent traceless matrices and their orthogonality."""

    def test_gf2_count(self, gf2):
        found = nilpotents(gf2)
        assert len(found) == 64
        assert TracelessMatrix.unit(gf2, 1, 2) in found
        assert all(x.is_nilpotent() for x in found)
        assert all(not x.minor_sum for x in found)

    def test_gf4_count(self, gf4):
        assert len(nilpotents(gf4)) == 4**6

    def test_orthogonality_agrees_on_nilpotent_pairs(self, gf4):
        rng = random.Random(8)
        found = [x for x in nilpotents(gf4) if x]
        for _ in range(500):
            x, y = rng.choice(found), rng.choice(found)
            assoc, star = orth_equiv_check(x, y)
            assert assoc == star, f"{x}, {y}"

    def test_orthogonalizers_agree(self, gf4):
        p = pseudo_octonions(gf4)
        rng = random.Random(3)
        found = [x for x in nilpotents(gf4) if x]
        for x in rng.sample(found, 100):
            assert matrix_orthogonalizer(x) == p.orthogonalizer(x)

    def test_line_graph_gf2_vertices(self, gf2):
        g = nilpotent_line_graph(gf2)
        assert len(g.vertices) == 63
        assert len(g.adjacency) == len(g.square_zero) == 63

    @pytest.mark.slow
    def test_line_graph_gf4(self, gf4):
        g = nilpotent_line_graph(gf4)
        assert len(g.vertices) == (4**6 - 1) // 3
        diameter, violation = nilpotent_graph_summary(g)
        assert diameter == 5
        assert violation is None

    @pytest.mark.slow
    def test_orth_equiv_exhaustive_gf4(self, gf4):
        checked, failure = orth_equiv_exhaustive(gf4)
        assert failure is None
        assert checked == (4**6 - 1) // 3


# ---------------------------------------------------------------------------
# 4. Zorn vector-matrix algebra
# ---------------------------------------------------------------------------
class TestZorn:
    """Product table, composition of norms and the conjugation."""

    @pytest.mark.parametrize("name", ["gf2", "gf3", "gf7"])
    def test_table(self, name):
        from src.field import field_from_string

        f = field_from_string(name)
        basis = [unit_vector(f, i) for i in range(8)]
        assert zorn_table_failure(_zorn_product, basis, f) is None

    def test_composition(self, gf7):
        rng = random.Random(5)
        for _ in range(300):
            x, y = random_zorn(gf7, rng), random_zorn(gf7, rng)
            assert zorn_norm(zorn_mul(x, y)) == zorn_norm(x) * zorn_norm(y)

    def test_conjugate(self, gf3):
        rng = random.Random(7)
        zero = (gf3.zero,) * 3
        for _ in range(50):
            x = random_zorn(gf3, rng)
            n = zorn_norm(x)
            assert zorn_mul(x, zorn_conj(x)) == ZornElement(n, n, zero, zero)

    def test_unit(self, gf7):
        b = zorn_basis(gf7)
        one = b["e1"] + b["e2"]
        for name in ZORN_NAMES:
            assert zorn_mul(one, b[name]) == b[name]
            assert zorn_mul(b[name], one) == b[name]


# ---------------------------------------------------------------------------
# 5. Hurwitz product and the automorphism tau
# ---------------------------------------------------------------------------
class TestPetersson:
    """tau(x) = e*(e*x) and the Hurwitz algebra with unit e."""

    def test_char3_quaternionic(self, o3):
        e = quaternionic_idempotent(o3)
        f = o3.field
        ident = Matrix.identity(f)
        t = tau_from_idempotent(o3, e)
        assert t @ t @ t == ident
        assert t == tau_closed_form(o3, e)
        fix = fixed_space(t)
        assert fix == centralizer(o3, e)
        assert fix.dim == 6
        d = t - ident
        assert d @ d == Matrix.zeros(f, 8, 8)

    def test_gf4_standard(self, o4):
        e = standard_idempotent(o4)
        t = tau_from_idempotent(o4, e)
        assert t @ t @ t == Matrix.identity(o4.field)
        assert t != Matrix.identity(o4.field)
        assert fixed_space(t) == centralizer(o4, e)

    @pytest.mark.parametrize("which", ["o3", "o4"])
    def test_hurwitz_and_reconstruction(self, which, request):
        a = request.getfixturevalue(which)
        e = quaternionic_idempotent(a) if which == "o3" else standard_idempotent(a)
        h = hurwitz_from_idempotent(a, e)
        assert h.unit_failure() is None
        assert h.composition_failure(200, random.Random(1)) is None
        check = petersson_reconstruct_check(a, e, trials=200, seed=2)
        assert check.passed, check.counterexample
        assert check.checked == 64 + 200

    def test_wrong_tau_fails(self, o4):
        e = standard_idempotent(o4)
        check = petersson_reconstruct_check(o4, e, trials=10, tau=Matrix.identity(o4.field))
        assert not check.passed
        assert check.counterexample

    def test_requires_idempotent(self, o3):
        with pytest.raises(NotIdempotent):
            tau_from_idempotent(o3, o3.z("z10"))
        with pytest.raises(NotIdempotent):
            hurwitz_from_idempotent(o3, o3.zero())

    def test_zorn_alignment_when_found(self, o3):
        e = quaternionic_idempotent(o3)
        alignment = align_zorn_basis(o3, e, limit=5_000)
        if alignment is None:
            pytest.skip("no aligned basis within the search limit")
        h = hurwitz_from_idempotent(o3, e)
        ordered = [alignment.basis[n] for n in ZORN_NAMES]
        assert zorn_table_failure(h, ordered, o3.field) is None
