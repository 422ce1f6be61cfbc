"""Verification suites behind ``verify``.

Each suite returns a SuiteReport whose checks carry the first counterexample
found. A suite that does not apply to the configured algebra raises
IncompatibleSuite before doing any work; ``run_verification`` records those as skipped.
"""

import logging
import random
import time
from collections.abc import Callable
from functools import cached_property

from .config import RunConfig
from .constructions import (
    ZORN_NAMES,
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
    orth_equiv_exhaustive,
    p8_bilin,
    p8_classify_zero_divisor,
    p8_norm,
    petersson_reconstruct_check,
    pseudo_octonions,
    random_zorn,
    tau_closed_form,
    tau_from_idempotent,
    zorn_mul,
    zorn_norm,
    zorn_table_failure,
)
from .errors import IncompatibleSuite, NotSplit
from .graphs import (
    MAX_VERTICES,
    OrthogonalityGraph,
    arc_witness,
    certified_diameter,
    certify_distance,
    component_flags,
    component_kind,
    expected_vertex_count,
    geodesic_check,
    vertices_orth,
    zdiv_digraph_check,
)
from .linalg import Matrix, Vector, canonical, contains, intersect, is_zero_vector, span, unit_vector
from .models import (
    CertifiedDiameter,
    Char3Subclass,
    CheckResult,
    ComponentKind,
    P8ZeroDivisorKind,
    SuiteReport,
    VerificationRun,
    ZdivSummary,
    ZeroDivisorClass,
)
from .okubo import (
    AlgebraElement,
    OkuboAlgebra,
    ann_intersection,
    automorphism_failure,
    centralizer,
    char3_subclass,
    classify_vec,
    identity_suite,
    is_idempotent,
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
    composition_identity_checks,
)

logger = logging.getLogger(__name__)

SUITE_ORDER = (
    "identities",
    "annihilators",
    "zdiv",
    "orth-components",
    "geodesics",
    "char3",
    "section5",
    "petersson",
    "appendix",
)


def _check(name: str, failure: str | None, checked: int = 1, detail: str = "") -> CheckResult:
    return CheckResult(name=name, passed=failure is None, checked=checked, detail=detail, counterexample=failure)


class SuiteContext:
    """The algebra under test plus lazily built shared data (vertices, graph, components)."""

    def __init__(self, algebra: OkuboAlgebra, cfg: RunConfig) -> None:
        self.algebra = algebra
        self.cfg = cfg
        self.zdiv_summary: ZdivSummary | None = None

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_unit_algebra(self) -> bool:
        one = self.field.one
        return self.algebra.alpha == one and self.algebra.beta == one

    @property
    def expects_big(self) -> bool:
        """Whether the TypeB/TypeC vertices form one connected component."""
        a = self.algebra
        return a.has_omega() or (a.characteristic == 3 and a.is_split())

    def require_enumerable(self, suite: str) -> None:
        f = self.field
        if not f.is_finite:
            raise IncompatibleSuite(f"{suite} needs a finite field, got {f}")
        n = expected_vertex_count(f.order)
        if n > MAX_VERTICES:
            raise IncompatibleSuite(f"{suite}: {n} vertices over {f} exceed {MAX_VERTICES}")

    @cached_property
    def vertices(self) -> list[Vector]:
        if "graph" in self.__dict__:
            return self.graph.vertices
        return vertices_orth(self.algebra)

    @cached_property
    def graph(self) -> OrthogonalityGraph:
        t0 = time.time()
        g = OrthogonalityGraph.build(self.algebra, self.cfg.threads)
        logger.info(f"Built orthogonality graph in {time.time() - t0:.1f}s")
        return g

    @cached_property
    def components(self) -> list[list[int]]:
        return self.graph.components()

    @cached_property
    def big(self) -> list[int] | None:
        for comp in self.components:
            if component_kind(self.graph, comp)[0] == ComponentKind.BIG:
                return comp
        return None

    def rng(self, salt: int = 0) -> random.Random:
        return random.Random(self.cfg.seed * 1_000_003 + salt)

    def new_report(self, suite: str) -> SuiteReport:
        a = self.algebra
        return SuiteReport(suite=suite, field=a.field_spec, alpha=str(a.alpha), beta=str(a.beta))


# =============================================================================
# identities
# =============================================================================


def suite_identities(ctx: SuiteContext) -> SuiteReport:
    """Symmetric-composition identities on random tuples, plus the explicit automorphism."""
    a, cfg = ctx.algebra, ctx.cfg
    report = identity_suite(a, cfg.identity_trials, cfg.seed)
    if ctx.is_unit_algebra:
        report.add(_check("phi_automorphism", automorphism_failure(a, phi_map(a)), checked=64))
    return report


# =============================================================================
# annihilators
# =============================================================================


def _sample_zero_divisors(ctx: SuiteContext) -> list[Vector]:
    a, cfg = ctx.algebra, ctx.cfg
    f = a.field
    if f.is_finite and expected_vertex_count(f.order) <= cfg.exhaustive_vertex_limit:
        return ctx.vertices
    count = cfg.adjacency_sample if f.is_finite else max(1, cfg.adjacency_sample // 10)
    rng = ctx.rng(1)
    return [a.random_zero_divisor(rng).coeffs for _ in range(count)]


def _annihilator_failure(a: OkuboAlgebra, xs: Vector) -> str | None:
    x = AlgebraElement(a, xs)
    la, ra = left_ann(a, x), right_ann(a, x)
    if la.dim != 4 or ra.dim != 4:
        return f"{x}: annihilator dimensions {la.dim}, {ra.dim}"
    if la != left_image(a, x):
        return f"{x}: left annihilator differs from x*O"
    if ra != right_image(a, x):
        return f"{x}: right annihilator differs from O*x"
    o = orthogonalizer(a, x)
    if o != intersect(la, ra):
        return f"{x}: orthogonalizer is not the intersection of the annihilators"
    xx = x * x
    if xx and o != span(a.field, [xx.coeffs]):
        return f"{x}: orthogonalizer is not spanned by x*x"
    if not xx and o.dim != 3:
        return f"{x}: square-zero element with orthogonalizer of dimension {o.dim}"
    return None


def _pair_failure(a: OkuboAlgebra, xs: Vector, ys: Vector) -> str | None:
    x, y = AlgebraElement(a, xs), AlgebraElement(a, ys)
    s = ann_intersection(a, x, y)
    xy = x * y
    if xy and s != span(a.field, [xy.coeffs]):
        return f"x={x}, y={y}: (x*O) ∩ (O*y) of dimension {s.dim} is not spanned by x*y"
    if not xy and s.dim != 3:
        return f"x={x}, y={y}: x*y = 0 but (x*O) ∩ (O*y) has dimension {s.dim}"
    return None


def _pairs(ctx: SuiteContext, items: list[Vector], salt: int) -> list[tuple[Vector, Vector]]:
    cfg = ctx.cfg
    if len(items) ** 2 <= cfg.exhaustive_pair_limit:
        return [(x, y) for x in items for y in items]
    count = cfg.sample_pairs if ctx.field.is_finite else max(1, cfg.sample_pairs // 100)
    rng = ctx.rng(salt)
    return [(rng.choice(items), rng.choice(items)) for _ in range(count)]


def _first(items, fn) -> tuple[int, str | None]:
    checked = 0
    for item in items:
        checked += 1
        failure = fn(item)
        if failure is not None:
            return checked, failure
    return checked, None


def suite_annihilators(ctx: SuiteContext) -> SuiteReport:
    a, f = ctx.algebra, ctx.field
    report = ctx.new_report("annihilators")
    zero_divisors = _sample_zero_divisors(ctx)

    checked, failure = _first(zero_divisors, lambda v: _annihilator_failure(a, v))
    report.add(_check("annihilator_dimensions", failure, checked))

    rng = ctx.rng(2)

    def scale_failure(v: Vector) -> str | None:
        lam = f.random_nonzero(rng)
        if classify_vec(a, tuple(lam * c for c in v)) != classify_vec(a, v):
            return f"class of {a.format(AlgebraElement(a, v))} changes under scaling by {lam}"
        return None

    checked, failure = _first(zero_divisors, scale_failure)
    report.add(_check("classification_scale_invariant", failure, checked))

    pairs = _pairs(ctx, zero_divisors, 3)
    checked, failure = _first(pairs, lambda p: _pair_failure(a, *p))
    report.add(_check("annihilator_intersections", failure, checked))

    square_zero = [v for v in zero_divisors if classify_vec(a, v) == ZeroDivisorClass.TYPE_C]

    def middle_failure(p: tuple[Vector, Vector]) -> str | None:
        xy, yx = a.mul_vec(*p), a.mul_vec(p[1], p[0])
        if any(a.mul_vec(xy, xy)) or any(a.mul_vec(yx, yx)):
            return f"x={a.format(AlgebraElement(a, p[0]))}, y={a.format(AlgebraElement(a, p[1]))}"
        return None

    checked, failure = _first(_pairs(ctx, square_zero, 4), middle_failure)
    report.add(_check("middle_elements_square_to_zero", failure, checked))

    if f.is_finite and a.alpha == f.one:
        report.add(_square_zero_points_check(a))
    return report


def _square_zero_points_check(a: OkuboAlgebra) -> CheckResult:
    """Square-zero lines in O(x) for x = z02 + z12 + z22 are [x] plus q per root of d^2 + d + 1."""
    f = a.field
    x = a.parse("z02 + z12 + z22")
    o = orthogonalizer(a, x)
    expected_span = span(f, [x.coeffs, a.parse("z01 - z11").coeffs, a.parse("z01 - z21").coeffs])
    if o != expected_span:
        return _check("orthogonalizer_square_zero_lines", f"O({x}) is not span{{x, z01 - z11, z01 - z21}}")
    roots = sum(1 for d in f.elements() if not (d * d + d + f.one))
    expected_roots = 1 if a.characteristic == 3 else (2 if a.has_omega() else 0)
    found = sum(1 for p in o.projective_points() if is_zero_vector(a.mul_vec(p, p)))
    want = 1 + roots * f.order
    failure = None
    if roots != expected_roots:
        failure = f"{roots} roots of d^2 + d + 1, expected {expected_roots}"
    elif found != want:
        failure = f"{found} square-zero lines in O({x}), expected {want}"
    return _check("orthogonalizer_square_zero_lines", failure, detail=f"{found} lines, {roots} roots")


# =============================================================================
# zdiv
# =============================================================================


def suite_zdiv(ctx: SuiteContext) -> SuiteReport:
    ctx.require_enumerable("zdiv")
    a, cfg = ctx.algebra, ctx.cfg
    report = ctx.new_report("zdiv")
    x, y = a.z("z10").coeffs, a.z("z01").coeffs
    z = arc_witness(a, x, y)
    report.add(_check("witness_z10_z01", None if z is not None else "no z with z10*z = 0 = z*z01"))
    summary, check = zdiv_digraph_check(
        a, ctx.vertices, cfg.exact_limit, cfg.zdiv_sample_pairs, cfg.seed, cfg.threads
    )
    report.add(check)
    ctx.zdiv_summary = summary
    return report


# =============================================================================
# orth-components
# =============================================================================


def _extremal_pair(ctx: SuiteContext) -> tuple[str, str] | None:
    if not ctx.is_unit_algebra:
        return None
    if ctx.algebra.has_omega():
        return "z01 - z11", "z02 - z22"
    if ctx.algebra.characteristic == 3:
        return "z01 - z11", "z10 - z21"
    return None


def suite_orth_components(ctx: SuiteContext) -> SuiteReport:
    ctx.require_enumerable("orth-components")
    a, cfg, f = ctx.algebra, ctx.cfg, ctx.field
    report = ctx.new_report("orth-components")
    g = ctx.graph
    n, q = len(g), f.order

    want = expected_vertex_count(q)
    report.add(_check("vertex_count", None if n == want else f"{n} vertices, expected {want}", detail=f"{n}"))

    # Kernel neighbors against a scan of every vertex.
    if n <= cfg.exhaustive_vertex_limit:
        sample = list(range(n))
    else:
        sample = sorted(ctx.rng(5).sample(range(n), min(cfg.adjacency_sample, n)))
    checked, failure = _first(
        sample,
        lambda i: None if g.brute_force_neighbors(i) == g.neighbors(i) else f"neighbors of {g.label(i)} disagree",
    )
    report.add(_check("adjacency_two_oracles", failure, checked))

    kinds = [component_kind(g, c) for c in ctx.components]
    pairs = [c for c, (k, _) in zip(ctx.components, kinds) if k == ComponentKind.PAIR]

    def pair_failure(comp: list[int]) -> str | None:
        u, v = (g.vertices[i] for i in comp)
        if canonical(a.mul_vec(u, u)) != v or canonical(a.mul_vec(v, v)) != u:
            return f"{g.label(comp[0])} and {g.label(comp[1])} are not each other's squares"
        return None

    checked, failure = _first(pairs, pair_failure)
    report.add(_check("pair_components", failure, checked))

    flagged = [flag for c, (k, _) in zip(ctx.components, kinds) for flag in component_flags(g, c, k)]
    report.add(_check("no_flagged_vertices", flagged[0] if flagged else None, n))

    if ctx.expects_big:
        _big_component_checks(ctx, report, kinds)
    else:
        _star_checks(ctx, report, kinds)
    logger.info(
        f"Components over {f}: {len(pairs)} pairs, "
        f"{sum(1 for k, _ in kinds if k == ComponentKind.STAR)} stars, "
        f"{sum(1 for k, _ in kinds if k == ComponentKind.BIG)} big"
    )
    return report


def _star_checks(ctx: SuiteContext, report: SuiteReport, kinds) -> None:
    g, q = ctx.graph, ctx.field.order
    comps = ctx.components
    bad = next((c for c, (k, _) in zip(comps, kinds) if k not in (ComponentKind.PAIR, ComponentKind.STAR)), None)
    report.add(
        _check(
            "pairs_and_stars_only",
            None if bad is None else f"component of {len(bad)} vertices containing {g.label(bad[0])}",
            len(comps),
        )
    )
    size = q * q + q + 1

    def star_failure(item) -> str | None:
        comp, center = item
        if len(comp) != size:
            return f"star at {g.label(center)} has {len(comp)} vertices, expected {size}"
        if g.classes[center] != ZeroDivisorClass.TYPE_C:
            return f"star center {g.label(center)} is {g.classes[center].value}"
        if g.diameter(comp) != 2:
            return f"star at {g.label(center)} has diameter {g.diameter(comp)}"
        return None

    stars = [(c, center) for c, (k, center) in zip(comps, kinds) if k == ComponentKind.STAR]
    checked, failure = _first(stars, star_failure)
    report.add(_check("star_components", failure, checked, detail=f"{len(stars)} stars of {size} vertices"))


def _big_component_checks(ctx: SuiteContext, report: SuiteReport, kinds) -> None:
    a, cfg, g = ctx.algebra, ctx.cfg, ctx.graph
    bigs = [c for c, (k, _) in zip(ctx.components, kinds) if k == ComponentKind.BIG]
    failure = None
    if len(bigs) != 1:
        failure = f"{len(bigs)} big components"
    elif any(k not in (ComponentKind.BIG, ComponentKind.PAIR) for k, _ in kinds):
        failure = "a component that is neither the big one nor a pair"
    elif set(bigs[0]) != {i for i, c in enumerate(g.classes) if c != ZeroDivisorClass.TYPE_A}:
        failure = "the big component does not hold exactly the TypeB and TypeC vertices"
    report.add(_check("single_big_component", failure, len(ctx.components)))
    if failure is not None:
        return
    big = bigs[0]

    if len(big) <= cfg.exact_limit:
        d = g.diameter(big, cfg.exact_limit)
        report.add(_check("big_diameter", None if d == 5 else f"diameter {d}", len(big), detail=f"exact {d}"))
    else:
        cd: CertifiedDiameter = certified_diameter(g, big, cfg.certificate_sample, cfg.seed)
        ok = cd.certified and cd.lower == 5 and cd.upper == 5
        report.add(
            _check("big_diameter", None if ok else f"bounds {cd.lower}..{cd.upper}", len(big), detail=f"{cd}")
        )

    pair = _extremal_pair(ctx)
    if pair is not None:
        u, v = (g.vertex_of(a.parse(s)) for s in pair)
        d, _ = g.geodesic_count(u, v)
        report.add(_check("extremal_pair_distance", None if d == 5 else f"{pair[0]} to {pair[1]}: {d}"))

    rng = ctx.rng(6)
    sources = rng.sample(big, min(20, len(big)))
    per_source = max(1, cfg.certificate_sample // len(sources))
    checked = 0
    failure = None
    for s in sources:
        dist = g.bfs(s)[0]
        for t in rng.sample(big, min(per_source, len(big))):
            checked += 1
            cert = certify_distance(a, g.vertices[s], g.vertices[t])
            if not cert.is_valid(a) or cert.length != dist[t]:
                failure = f"{g.label(s)} -> {g.label(t)}: certificate {cert.labels(a)}, BFS distance {dist[t]}"
                break
        if failure:
            break
    report.add(_check("certificates_match_bfs", failure, checked))

    square_zero = [i for i in big if g.classes[i] == ZeroDivisorClass.TYPE_C]
    chosen = square_zero if len(square_zero) <= 200 else rng.sample(square_zero, 200)
    checked = 0
    failure = None
    for s in chosen:
        dist = g.bfs(s)[0]
        for t in square_zero:
            if t == s:
                continue
            checked += 1
            orthogonal = not a.bilin_vec(g.vertices[s], g.vertices[t])
            if (dist[t] <= 2) != orthogonal:
                failure = f"{g.label(s)} -> {g.label(t)}: distance {dist[t]}, n = {'0' if orthogonal else 'nonzero'}"
                break
        if failure:
            break
    report.add(_check("distance_two_iff_orthogonal", failure, checked))


# =============================================================================
# geodesics
# =============================================================================


def suite_geodesics(ctx: SuiteContext) -> SuiteReport:
    ctx.require_enumerable("geodesics")
    if not ctx.expects_big:
        raise IncompatibleSuite(
            f"geodesics needs a cube root of unity or a split algebra of characteristic 3 ({ctx.field})"
        )
    report = ctx.new_report("geodesics")
    big = ctx.big
    if big is None:
        report.add(_check("geodesic_counts", "no big component"))
        return report
    sources = None
    if len(big) > ctx.cfg.exact_limit:
        sources = ctx.rng(7).sample(big, 20)
    report.add(geodesic_check(ctx.graph, big, all_unique=ctx.algebra.characteristic == 3, sources=sources))
    return report


# =============================================================================
# char3
# =============================================================================


def suite_char3(ctx: SuiteContext) -> SuiteReport:
    a, f = ctx.algebra, ctx.field
    if a.characteristic != 3:
        raise IncompatibleSuite(f"char3 needs characteristic 3, got {a.characteristic}")
    report = ctx.new_report("char3")
    if a.is_split():
        _char3_split_checks(ctx, report)
    elif a.alpha == f.one:
        _char3_nonsplit_checks(ctx, report)
    else:
        raise IncompatibleSuite("the non-split spot check needs alpha = 1")
    return report


def _char3_split_checks(ctx: SuiteContext, report: SuiteReport) -> None:
    a, f = ctx.algebra, ctx.field
    e = quaternionic_idempotent(a)
    report.add(_check("quaternionic_idempotent", None if is_idempotent(a, e) else f"{e}*{e} != {e}"))
    c = centralizer(a, e)
    report.add(_check("centralizer_dimension", None if c.dim == 6 else f"dim C(e) = {c.dim}"))

    if f.is_finite and expected_vertex_count(f.order) <= MAX_VERTICES:
        square_zero = [v for v in ctx.vertices if classify_vec(a, v) == ZeroDivisorClass.TYPE_C]
        checked, failure = _first(
            square_zero,
            lambda v: None if contains(c, v) else f"{a.format(AlgebraElement(a, v))} lies outside C(e)",
        )
        report.add(_check("square_zero_in_centralizer", failure, checked))

    s = singular_span(a)
    points = list(s.projective_points()) if f.is_finite else []
    failure = None
    if s.dim != 2:
        failure = f"C(e) ∩ C(e)^⊥ has dimension {s.dim}"
    elif f.is_finite and len(points) != f.order + 1:
        failure = f"{len(points)} singular lines"
    else:
        for p in points:
            x = AlgebraElement(a, p)
            if char3_subclass(a, x) != Char3Subclass.SINGULAR:
                failure = f"{x} is not of singular type"
                break
            if any(any(a.mul_vec(p, q)) for q in points):
                failure = f"{x} is not orthogonal to every singular line"
                break
    report.add(_check("singular_lines", failure, len(points), detail=f"dim {s.dim}"))

    if ctx.is_unit_algebra:
        singular = a.parse("z02 + z12 + z22 - z01 - z21 - z11")
        quadratic = a.parse("z02 + z12 + z22")
        failure = None
        if char3_subclass(a, singular) != Char3Subclass.SINGULAR:
            failure = f"{singular} is not of singular type"
        elif char3_subclass(a, quadratic) != Char3Subclass.QUADRATIC:
            failure = f"{quadratic} is not of quadratic type"
        report.add(_check("subclass_examples", failure, 2))

        phi = phi_map(a)
        image = AlgebraElement(a, phi.apply(singular.coeffs))
        expected = a.parse("z10 + z01 + z22 - z20 - z02 - z11")
        failure = automorphism_failure(a, phi)
        if failure is None and image != expected:
            failure = f"phi({singular}) = {image}"
        report.add(_check("phi_exchanges_singular_plane", failure, 64))


def _char3_nonsplit_checks(ctx: SuiteContext, report: SuiteReport) -> None:
    a, f = ctx.algebra, ctx.field
    k = f.one
    w = nonsplit_char3_witness(a, k)
    u = w.u
    target = u.scale(a.beta * (a.beta + k * k * k))
    failure = None
    if u * u:
        failure = f"u*u = {u * u}"
    elif a.bilin(w.v, u):
        failure = "v is not orthogonal to u"
    elif w.w != w.v * u:
        failure = "w != v*u"
    elif w.w * w.w != target:
        failure = f"w*w = {w.w * w.w}, expected {target}"
    elif not target:
        failure = "beta(beta + k^3) vanishes"
    report.add(_check("nonsplit_witness", failure, detail=f"k = {k}"))

    x, y = a.parse("z01 - z11"), a.parse("z02 - z22")
    xx, yy = x * x, y * y
    failure = None
    if a.bilin(xx, yy):
        failure = f"n(x*x, y*y) = {a.bilin(xx, yy)}"
    else:
        cert = certify_distance(a, x, y)
        if not cert.is_valid(a) or cert.length != 3:
            failure = f"certificate {cert.labels(a)}"
    report.add(_check("distance_three_certificate", failure))


# =============================================================================
# section5
# =============================================================================


def suite_section5(ctx: SuiteContext) -> SuiteReport:
    a, f, cfg = ctx.algebra, ctx.field, ctx.cfg
    if not a.has_omega():
        raise IncompatibleSuite(f"section5 needs a primitive cube root of unity in {f}")
    report = ctx.new_report("section5")
    p = pseudo_octonions(f)
    rng = ctx.rng(8)

    for check in composition_identity_checks(p.ops(), cfg.identity_trials, rng):
        report.add(check.model_copy(update={"name": f"p8_{check.name}"}))

    def polarization_failure(_) -> str | None:
        x, y = p.random_element(rng), p.random_element(rng)
        if p8_norm(x + y) - p8_norm(x) - p8_norm(y) != p8_bilin(x, y):
            return f"x={x}, y={y}"
        return None

    checked, failure = _first(range(cfg.identity_trials), polarization_failure)
    report.add(_check("p8_polarization", failure, checked))

    omega = omega_matrix(f)
    w = p.omega
    expected = TracelessMatrix(f, [[f.one, f.zero, f.zero], [f.zero, w * w, f.zero], [f.zero, f.zero, w]])
    e12 = TracelessMatrix.unit(f, 1, 2)
    failure = None
    if p.mul(omega, omega) != expected:
        failure = f"Omega*Omega = {p.mul(omega, omega)}"
    elif p8_norm(omega) or p8_classify_zero_divisor(omega) != P8ZeroDivisorKind.OMEGA_TYPE:
        failure = "Omega is not an omega-type zero divisor"
    elif p8_classify_zero_divisor(e12) != P8ZeroDivisorKind.NILPOTENT or p.mul(e12, e12) != TracelessMatrix(f, e12 @ e12):
        failure = "E12 is not a nilpotent with y*y = yy"
    report.add(_check("p8_examples", failure, 3))

    exhaustive = f.order**8 <= cfg.p8_exhaustive_limit
    census = cube_law_census(f) if exhaustive else cube_law_sampled(f, cfg.identity_trials, rng)
    report.add(
        _check(
            "cube_law",
            census.counterexample,
            census.zero_divisors,
            detail=f"{'exhaustive' if exhaustive else 'sampled'}: "
            f"{census.nilpotent} nilpotent, {census.omega_type} omega-type",
        )
    )

    if exhaustive:
        found = len(nilpotents(f))
        report.add(_check("nilpotent_count", None if found == f.order**6 else f"{found} nilpotents", found))
        checked, failure = orth_equiv_exhaustive(f)
        report.add(_check("orthogonalizers_agree", failure, checked, detail="every nilpotent line"))
        _nilpotent_graph_checks(ctx, report)
    else:

        def orth_failure(_) -> str | None:
            while True:
                x = p.random_element(rng)
                if x and not x.det and not x.minor_sum:
                    break
            return None if matrix_orthogonalizer(x) == p.orthogonalizer(x) else f"orthogonalizers differ at {x}"

        checked, failure = _first(range(cfg.adjacency_sample), orth_failure)
        report.add(_check("orthogonalizers_agree", failure, checked, detail="sampled nilpotents"))
    return report


def _nilpotent_graph_checks(ctx: SuiteContext, report: SuiteReport) -> None:
    ng = nilpotent_line_graph(ctx.field)
    diameter, violation = nilpotent_graph_summary(ng)
    report.add(_check("nilpotent_graph_diameter", None if diameter == 5 else f"diameter {diameter}", len(ng.vertices)))
    report.add(_check("nilpotent_graph_geodesics", violation, len(ng.vertices)))
    if not ctx.is_unit_algebra or expected_vertex_count(ctx.field.order) > MAX_VERTICES:
        return
    g, big = ctx.graph, ctx.big
    failure = None
    if big is None:
        failure = "no big component"
    elif len(big) != len(ng.vertices):
        failure = f"big component has {len(big)} vertices, {len(ng.vertices)} nilpotent lines"
    else:
        square_zero = sum(1 for i in big if g.classes[i] == ZeroDivisorClass.TYPE_C)
        if square_zero != sum(ng.square_zero):
            failure = f"{square_zero} square-zero vertices against {sum(ng.square_zero)} square-zero matrices"
    report.add(_check("big_component_matches_nilpotent_lines", failure, len(ng.vertices)))


# =============================================================================
# petersson
# =============================================================================


def _zorn_vector_product(x: Vector, y: Vector) -> Vector:
    return zorn_mul(ZornElement.from_coords(x), ZornElement.from_coords(y)).coords()


def suite_petersson(ctx: SuiteContext) -> SuiteReport:
    a, f, cfg = ctx.algebra, ctx.field, ctx.cfg
    try:
        e = split_idempotent(a)
    except NotSplit as err:
        raise IncompatibleSuite(f"petersson needs an idempotent: {err}") from err
    report = ctx.new_report("petersson")
    rng = ctx.rng(9)
    ident = Matrix.identity(f)
    t = tau_from_idempotent(a, e)
    h = hurwitz_from_idempotent(a, e)

    report.add(_check("tau_order_three", None if t @ t @ t == ident else "tau^3 != id"))
    report.add(_check("tau_closed_form", None if t == tau_closed_form(a, e) else "e*(e*x) != n(e,x)e - x*e"))
    report.add(_check("tau_fixes_e", None if t.apply(e.coeffs) == e.coeffs else "tau(e) != e"))
    fix = fixed_space(t)
    report.add(_check("fix_is_centralizer", None if fix == centralizer(a, e) else "Fix(tau) != C(e)"))
    report.add(_check("hurwitz_unit", h.unit_failure(), 8))
    report.add(_check("hurwitz_composition", h.composition_failure(cfg.petersson_trials, rng), cfg.petersson_trials))
    report.add(petersson_reconstruct_check(a, e, cfg.petersson_trials, cfg.seed))

    basis = [unit_vector(f, i) for i in range(8)]
    report.add(_check("zorn_table", zorn_table_failure(_zorn_vector_product, basis, f), 64))

    def zorn_failure(_) -> str | None:
        x, y = random_zorn(f, rng), random_zorn(f, rng)
        if zorn_norm(zorn_mul(x, y)) != zorn_norm(x) * zorn_norm(y):
            return f"x={x}, y={y}"
        return None

    checked, failure = _first(range(cfg.petersson_trials), zorn_failure)
    report.add(_check("zorn_composition", failure, checked))

    if a.characteristic == 3 and a.is_split():
        d = t - ident
        report.add(_check("tau_unipotent", None if d @ d == Matrix.zeros(f, 8, 8) else "(tau - id)^2 != 0"))
        report.add(_check("fix_dimension_six", None if fix.dim == 6 else f"dim Fix(tau) = {fix.dim}"))
        if f.is_finite:
            alignment = align_zorn_basis(a, e, cfg.zorn_search_limit)
            if alignment is None:
                detail = "no aligned basis within the search limit; basis-free checks above stand"
            else:
                detail = f"aligned after {alignment.candidates} candidates: " + ", ".join(
                    f"{n}={a.format(AlgebraElement(a, alignment.basis[n]))}" for n in ZORN_NAMES
                )
            report.add(_check("zorn_alignment", None, detail=detail))
    return report


# =============================================================================
# appendix
# =============================================================================


def suite_appendix(ctx: SuiteContext) -> SuiteReport:
    """Products and norms of x = z01 - z11 and y = z02 - z22 printed as vectors, with alpha = 1."""
    f = ctx.field
    beta = ctx.algebra.beta
    a = OkuboAlgebra(f, f.one, beta)
    report = ctx.new_report("appendix")
    x, y = a.parse("z01 - z11"), a.parse("z02 - z22")
    xx, yy = x * x, y * y
    b = str(beta)
    expected = [
        ("mult_x_x", a.format_vector(xx), "{0, 0, 0, 1, 0, 1, 1, 0}"),
        ("mult_y_y", a.format_vector(yy), f"{{0, 0, {b}, 0, {b}, 0, 0, {b}}}"),
        ("norm_x_xx", str(a.bilin(x, xx)), "0"),
        ("norm_xx_yy", str(a.bilin(xx, yy)), str(f(3) * beta * beta)),
    ]
    for name, got, want in expected:
        report.add(_check(name, None if got == want else f"printed {got!r}, expected {want!r}", detail=got))
    o = ctx.algebra
    failure = None
    if o.z("z10") * o.z("z20"):
        failure = f"z10*z20 = {o.z('z10') * o.z('z20')}"
    elif o.bilin(o.z("z10"), o.z("z20")) != o.alpha:
        failure = f"n(z10, z20) = {o.bilin(o.z('z10'), o.z('z20'))}"
    report.add(_check("table_spot_checks", failure, 2))
    return report


# =============================================================================
# Driver
# =============================================================================

SUITES: dict[str, Callable[[SuiteContext], SuiteReport]] = {
    "identities": suite_identities,
    "annihilators": suite_annihilators,
    "zdiv": suite_zdiv,
    "orth-components": suite_orth_components,
    "geodesics": suite_geodesics,
    "char3": suite_char3,
    "section5": suite_section5,
    "petersson": suite_petersson,
    "appendix": suite_appendix,
}


def run_suite(name: str, ctx: SuiteContext) -> SuiteReport:
    if name not in SUITES:
        raise IncompatibleSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    logger.info("=" * 60)
    logger.info(f"SUITE {name} over {ctx.algebra.describe()}")
    logger.info("=" * 60)
    t0 = time.time()
    report = SUITES[name](ctx)
    elapsed = time.time() - t0
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        logger.info(f"  [{status}] {check.name} ({check.checked} checked){': ' + check.detail if check.detail else ''}")
        if not check.passed:
            logger.warning(f"  counterexample: {check.counterexample}")
    logger.info(f"Suite {name}: {'pass' if report.passed else 'FAIL'} in {elapsed:.1f}s")
    return report


def run_verification(ctx: SuiteContext, suite: str = "all") -> VerificationRun:
    """Run one suite, or every suite compatible with the algebra when suite is 'all'."""
    run = VerificationRun(field=ctx.algebra.field_spec)
    if suite != "all":
        run.suites.append(run_suite(suite, ctx))
        return run
    for name in SUITE_ORDER:
        try:
            run.suites.append(run_suite(name, ctx))
        except IncompatibleSuite as e:
            logger.info(f"Skipping {name}: {e}")
            run.skipped.append(f"{name}: {e}")
    return run
