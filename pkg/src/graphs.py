"""Orthogonality graph and directed zero-divisor graph of an Okubo algebra."""

import itertools
import logging
import random
from collections import deque
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

from .errors import (
    Disconnected,
    InfiniteField,
    NoZeroSquareSubspace,
    NotZeroDivisor,
    TooLarge,
    TooLargeForExact,
)
from .field import TableArithmetic
from .linalg import (
    Matrix,
    Vector,
    canonical,
    is_zero_vector,
    kernel,
    proportional,
    vec_scale,
    vec_sub,
)
from .models import (
    CertifiedDiameter,
    CheckResult,
    ComponentKind,
    ComponentReport,
    GraphReport,
    ZdivSummary,
    ZeroDivisorClass,
)
from .okubo import AlgebraElement, OkuboAlgebra, classify_vec, zero_square_pair

logger = logging.getLogger(__name__)

# Largest vertex count a graph build accepts.
MAX_VERTICES = 200_000

ProjectivePoint = Vector


def expected_vertex_count(q: int) -> int:
    """Lines through nonzero isotropic vectors of an 8-dimensional hyperbolic form."""
    return (q**7 + q**4 - q**3 - 1) // (q - 1)


def _chunks(n: int, parts: int) -> list[range]:
    size = max(1, -(-n // max(1, parts)))
    return [range(i, min(n, i + size)) for i in range(0, n, size)]


def parallel_map(fn: Callable[[int], Any], n: int, threads: int = 1) -> list:
    """[fn(i) for i in range(n)], split into contiguous chunks and merged in order."""
    if threads <= 1 or n < 2:
        return [fn(i) for i in range(n)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda r: [fn(i) for i in r], _chunks(n, threads))
        return [x for part in parts for x in part]


# =============================================================================
# Vertices
# =============================================================================


def _vertices_vectorized(a: OkuboAlgebra) -> list[Vector]:
    f = a.field
    ops = TableArithmetic(f)
    pairs = [(i, j, c.value) for i, j, c in a._pairs]
    found: list[np.ndarray] = []
    # Lead position 7 first: canonical vectors with an earlier zero prefix sort first.
    for lead in range(7, -1, -1):
        tail = ops.grid(7 - lead)
        n = len(tail)
        rows = np.zeros((n, 8), dtype=np.int64)
        rows[:, lead] = f.one.value
        rows[:, lead + 1:] = tail
        norm = np.zeros(n, dtype=np.int64)
        for i, j, c in pairs:
            norm = ops.add(norm, ops.mul(c, ops.mul(rows[:, i], rows[:, j])))
        found.append(rows[norm == 0])
    rows = np.concatenate(found)
    return [ops.to_elements(r) for r in rows]


def _vertices_scalar(a: OkuboAlgebra) -> list[Vector]:
    f = a.field
    zero, one = f.zero, f.one
    out = []
    elements = f.elements()
    for lead in range(7, -1, -1):
        for tail in itertools.product(elements, repeat=7 - lead):
            v = (zero,) * lead + (one,) + tail
            if not a.qnorm_vec(v):
                out.append(v)
    return out


def vertices_orth(a: OkuboAlgebra) -> list[ProjectivePoint]:
    """Canonical representatives of every line of zero divisors, lexicographically ordered."""
    f = a.field
    if not f.is_finite:
        raise InfiniteField(f"{f} has infinitely many zero divisors")
    expected = expected_vertex_count(f.order)
    if expected > MAX_VERTICES:
        raise TooLarge(f"{expected} vertices over {f} exceed the limit of {MAX_VERTICES}")
    if f.arith_tables() is not None:
        vertices = _vertices_vectorized(a)
    else:
        vertices = _vertices_scalar(a)
    logger.debug(f"Enumerated {len(vertices)} projective zero divisors over {f}")
    return vertices


# =============================================================================
# Breadth-first search
# =============================================================================


def bfs_counts(adjacency: Sequence[Sequence[int]], source: int) -> tuple[list[int], list[int]]:
    """Distances (-1 when unreachable) and numbers of shortest paths from source."""
    n = len(adjacency)
    dist = [-1] * n
    count = [0] * n
    dist[source] = 0
    count[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                count[w] = count[u]
                queue.append(w)
            elif dist[w] == du:
                count[w] += count[u]
    return dist, count


def two_geodesics_expected(distance: int, square_zero_u: bool, square_zero_v: bool) -> bool:
    """Pairs joined by exactly two shortest paths in the split case with a cube root of unity."""
    if distance == 3:
        return square_zero_u and square_zero_v
    if distance == 4:
        return square_zero_u or square_zero_v
    return distance == 5


# =============================================================================
# Orthogonality graph
# =============================================================================


def neighbors_orth(a: OkuboAlgebra, v: AlgebraElement | Vector) -> list[Vector]:
    """Lines of the orthogonalizer of [v] other than [v] itself."""
    v = canonical(v.coeffs if isinstance(v, AlgebraElement) else v)
    orth = a.orthogonalizer_vec(v)
    if orth.dim == 1:
        points = [canonical(orth.basis[0])]
    elif not a.field.is_finite:
        raise InfiniteField(f"[{a.format(AlgebraElement(a, v))}] has infinitely many neighbors over {a.field}")
    else:
        points = list(orth.projective_points())
    return [p for p in points if p != v]


class OrthogonalityGraph:
    """Lines of zero divisors; [x] -- [y] when x*y = y*x = 0."""

    def __init__(
        self,
        algebra: OkuboAlgebra,
        vertices: list[Vector],
        adjacency: list[list[int]],
        classes: list[ZeroDivisorClass],
    ) -> None:
        self.algebra = algebra
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.adjacency = adjacency
        self.classes = classes

    @classmethod
    def build(cls, a: OkuboAlgebra, threads: int = 1) -> "OrthogonalityGraph":
        vertices = vertices_orth(a)
        index = {v: i for i, v in enumerate(vertices)}

        def neighbors(i: int) -> list[int]:
            out = []
            for p in neighbors_orth(a, vertices[i]):
                j = index.get(p)
                if j is None:
                    raise NotZeroDivisor(f"orthogonalizer of {vertices[i]} contains a non-zero-divisor")
                out.append(j)
            return sorted(out)

        adjacency = parallel_map(neighbors, len(vertices), threads)
        classes = parallel_map(lambda i: classify_vec(a, vertices[i]), len(vertices), threads)
        logger.info(f"Orthogonality graph over {a.field}: {len(vertices)} vertices, "
                    f"{sum(len(n) for n in adjacency) // 2} edges")
        return cls(a, vertices, adjacency, classes)

    def __len__(self) -> int:
        return len(self.vertices)

    def label(self, i: int) -> str:
        return self.algebra.format(AlgebraElement(self.algebra, self.vertices[i]))

    def vertex_of(self, x: AlgebraElement | Vector) -> int:
        v = x.coeffs if isinstance(x, AlgebraElement) else x
        return self.index[canonical(v)]

    def neighbors(self, i: int) -> list[int]:
        return self.adjacency[i]

    def brute_force_neighbors(self, i: int) -> list[int]:
        """Scan every vertex for mutual annihilation."""
        a, v = self.algebra, self.vertices[i]
        out = []
        for j, w in enumerate(self.vertices):
            if j != i and is_zero_vector(a.mul_vec(v, w)) and is_zero_vector(a.mul_vec(w, v)):
                out.append(j)
        return out

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j)
        return g

    def components(self) -> list[list[int]]:
        """Vertex sets of the connected components, each sorted, ordered by first vertex."""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def bfs(self, source: int) -> tuple[list[int], list[int]]:
        return bfs_counts(self.adjacency, source)

    def geodesic_count(self, u: int, v: int) -> tuple[int, int]:
        dist, count = self.bfs(u)
        if dist[v] < 0:
            raise Disconnected(f"{self.label(u)} and {self.label(v)} lie in different components")
        return dist[v], count[v]

    def eccentricity(self, source: int) -> int:
        return max(self.bfs(source)[0])

    def diameter(self, component: Sequence[int], exact_limit: int = 10_000) -> int:
        if len(component) > exact_limit:
            raise TooLargeForExact(f"component of {len(component)} vertices exceeds {exact_limit}")
        return max(max(d for d in self.bfs(s)[0] if d >= 0) for s in component)


# =============================================================================
# Components
# =============================================================================


def component_kind(g: OrthogonalityGraph, comp: list[int]) -> tuple[ComponentKind, int | None]:
    if len(comp) == 2 and all(g.classes[i] == ZeroDivisorClass.TYPE_A for i in comp):
        return ComponentKind.PAIR, None
    if len(comp) > 2:
        for c in comp:
            if len(g.adjacency[c]) == len(comp) - 1 and all(
                len(g.adjacency[i]) == 1 for i in comp if i != c
            ):
                return ComponentKind.STAR, c
    return ComponentKind.BIG, None


def component_flags(g: OrthogonalityGraph, comp: list[int], kind: ComponentKind) -> list[str]:
    """Vertices that break the Pair/Star/Big description of their component."""
    a = g.algebra
    flagged = []
    for i in comp:
        v = g.vertices[i]
        if g.classes[i] == ZeroDivisorClass.TYPE_A:
            sq = a.mul_vec(v, v)
            if proportional(sq, v):
                flagged.append(f"{g.label(i)}: square is proportional to itself")
            elif kind != ComponentKind.PAIR:
                flagged.append(f"{g.label(i)}: TypeA vertex outside a two-vertex component")
        elif kind == ComponentKind.PAIR:
            flagged.append(f"{g.label(i)}: {g.classes[i].value} vertex in a two-vertex component")
    return flagged


def describe_component(
    g: OrthogonalityGraph,
    comp: list[int],
    exact_limit: int = 10_000,
    certificate_sample: int = 1000,
    seed: int = 0,
) -> ComponentReport:
    kind, center = component_kind(g, comp)
    census: dict[str, int] = {}
    for i in comp:
        census[g.classes[i].value] = census.get(g.classes[i].value, 0) + 1
    if kind == ComponentKind.PAIR:
        diameter: int | CertifiedDiameter = 1
    elif len(comp) <= exact_limit:
        diameter = g.diameter(comp, exact_limit)
    else:
        diameter = certified_diameter(g, comp, certificate_sample, seed)
    return ComponentReport(
        kind=kind,
        size=len(comp),
        diameter=diameter,
        center=g.label(center) if center is not None else None,
        class_census=dict(sorted(census.items())),
        flagged=component_flags(g, comp, kind),
    )


def components_orth(
    g: OrthogonalityGraph, exact_limit: int = 10_000, certificate_sample: int = 1000, seed: int = 0
) -> list[ComponentReport]:
    reports = [describe_component(g, c, exact_limit, certificate_sample, seed) for c in g.components()]
    kinds: dict[str, int] = {}
    for r in reports:
        kinds[r.kind.value] = kinds.get(r.kind.value, 0) + 1
    logger.info(f"Components over {g.algebra.field}: {kinds}")
    return reports


# Pairs at distance five in the split algebras.
EXTREMAL_PAIRS = (("z01 - z11", "z02 - z22"), ("z01 - z11", "z10 - z21"))


def certified_diameter(
    g: OrthogonalityGraph, comp: list[int], sample: int = 1000, seed: int = 0
) -> CertifiedDiameter:
    """Lower bound from BFS out of known far-apart vertices, upper bound from constructed paths.

    Every valid certificate has length at most five, which bounds the
    diameter of the component once all sampled certificates check out.
    """
    a = g.algebra
    rng = random.Random(seed)
    members = set(comp)
    sources = [comp[0]]
    for xs, _ in EXTREMAL_PAIRS:
        i = g.index.get(canonical(a.parse(xs).coeffs))
        if i in members:
            sources.append(i)
    sources += rng.sample(comp, min(4, len(comp)))
    lower = max(g.eccentricity(s) for s in dict.fromkeys(sources))

    longest = 0
    certified = True
    for _ in range(sample):
        u, v = rng.choice(comp), rng.choice(comp)
        cert = certify_distance(a, g.vertices[u], g.vertices[v])
        if not cert.is_valid(a) or cert.length > 5:
            logger.warning(f"Certificate {cert.labels(a)} failed validation")
            certified = False
        longest = max(longest, cert.length)
    upper = 5 if certified else max(longest, lower)
    return CertifiedDiameter(lower=lower, upper=max(upper, lower), certified=certified and lower <= upper)


# =============================================================================
# Path certificates
# =============================================================================


class PathCertificate(BaseModel):
    """A walk of projective points whose consecutive members annihilate each other."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    points: tuple[Any, ...]

    @property
    def length(self) -> int:
        return len(self.points) - 1

    def is_valid(self, a: OkuboAlgebra) -> bool:
        if any(is_zero_vector(p) or a.qnorm_vec(p) for p in self.points):
            return False
        for p, q in zip(self.points, self.points[1:]):
            if p == q or any(a.mul_vec(p, q)) or any(a.mul_vec(q, p)):
                return False
        return True

    def labels(self, a: OkuboAlgebra) -> list[str]:
        return [a.format(AlgebraElement(a, p)) for p in self.points]


def _adjacent(a: OkuboAlgebra, x: Vector, y: Vector) -> bool:
    return is_zero_vector(a.mul_vec(x, y)) and is_zero_vector(a.mul_vec(y, x))


def _in_orthogonalizer(a: OkuboAlgebra, y: Vector, w: Vector) -> bool:
    return _adjacent(a, y, w)


def zero_square_partner(a: OkuboAlgebra, y: Vector) -> Vector:
    """Some w in O(y) off the line of y with w*w = 0, for y*y = 0."""
    try:
        sa, sb = (s.coeffs for s in zero_square_pair(a))
    except NoZeroSquareSubspace:
        sa = sb = None

    candidates: list[Vector] = []
    if sa is not None:
        na, nb = a.bilin_vec(y, sa), a.bilin_vec(y, sb)
        w = vec_sub(vec_scale(nb, sa), vec_scale(na, sb))
        if is_zero_vector(w):
            w = sa if not proportional(sa, y) else sb
        if proportional(w, y):
            candidates = [s for s in (sa, sb) if not proportional(s, y)]
        elif _in_orthogonalizer(a, y, w):
            candidates = [w]
        else:
            candidates = [a.mul_vec(w, y), a.mul_vec(y, w)]
    if a.field.is_finite:
        candidates = candidates + list(a.orthogonalizer_vec(y).projective_points())
    for w in candidates:
        if (
            not is_zero_vector(w)
            and not proportional(w, y)
            and is_zero_vector(a.mul_vec(w, w))
            and _in_orthogonalizer(a, y, w)
        ):
            return w
    raise NoZeroSquareSubspace(
        f"no zero-square plane through {a.format(AlgebraElement(a, y))} in its orthogonalizer"
    )


def _middle(a: OkuboAlgebra, x: Vector, y: Vector) -> Vector:
    m = a.mul_vec(y, x)
    return m if not is_zero_vector(m) else a.mul_vec(x, y)


def _core(a: OkuboAlgebra, x: Vector, y: Vector) -> list[Vector]:
    """Path between two elements with zero squares."""
    if proportional(x, y):
        return [x]
    if _adjacent(a, x, y):
        return [x, y]
    if not a.bilin_vec(x, y):
        return [x, _middle(a, x, y), y]
    w = zero_square_partner(a, y)
    # z spans span{y, w} ∩ x^⊥.
    z = vec_sub(vec_scale(a.bilin_vec(x, w), y), vec_scale(a.bilin_vec(x, y), w))
    if _adjacent(a, x, z):
        return [x, z, y]
    return [x, _middle(a, x, z), z, y]


def _shortcut(points: list[Vector]) -> list[Vector]:
    """Drop repeated points and the loops between them."""
    out: list[Vector] = []
    for p in points:
        if p in out:
            out = out[: out.index(p) + 1]
        else:
            out.append(p)
    return out


def certify_distance(a: OkuboAlgebra, x: AlgebraElement | Vector, y: AlgebraElement | Vector) -> PathCertificate:
    """Build a path from [x] to [y] of length at most 5 for TypeB/TypeC endpoints."""
    xs = x.coeffs if isinstance(x, AlgebraElement) else tuple(x)
    ys = y.coeffs if isinstance(y, AlgebraElement) else tuple(y)
    steps = []
    for v in (xs, ys):
        if is_zero_vector(v) or a.qnorm_vec(v):
            raise NotZeroDivisor(f"{a.format(AlgebraElement(a, v))} is not a zero divisor")
        cls = classify_vec(a, v)
        if cls == ZeroDivisorClass.TYPE_A:
            raise Disconnected(f"{a.format(AlgebraElement(a, v))} lies in a two-vertex component")
        steps.append(a.mul_vec(v, v) if cls == ZeroDivisorClass.TYPE_B else v)
    x1, y1 = steps
    walk = [xs, x1] + _core(a, x1, y1)[1:-1] + [y1, ys]
    points = _shortcut([canonical(p) for p in walk])
    return PathCertificate(points=tuple(points))


# =============================================================================
# Geodesic checks
# =============================================================================


def geodesic_check(
    g: OrthogonalityGraph, comp: list[int], all_unique: bool, sources: Sequence[int] | None = None
) -> CheckResult:
    """Number of shortest paths between every pair of the component (or from the given sources)."""
    square_zero = [c == ZeroDivisorClass.TYPE_C for c in g.classes]
    checked = 0
    for s in sources if sources is not None else comp:
        dist, count = g.bfs(s)
        for t in comp:
            if t == s or (sources is None and t < s):
                continue
            checked += 1
            if all_unique:
                want = 1
            else:
                want = 2 if two_geodesics_expected(dist[t], square_zero[s], square_zero[t]) else 1
            if count[t] != want:
                return CheckResult(
                    name="geodesic_counts",
                    passed=False,
                    checked=checked,
                    counterexample=f"{g.label(s)} -> {g.label(t)}: d={dist[t]}, "
                    f"{count[t]} shortest paths, expected {want}",
                )
    return CheckResult(name="geodesic_counts", passed=True, checked=checked)


# =============================================================================
# Directed zero-divisor graph
# =============================================================================


class ZeroDivisorDigraph:
    """Lines of zero divisors; [x] -> [y] when x*y = 0 and [x] != [y]."""

    def __init__(self, algebra: OkuboAlgebra, vertices: list[Vector], out: list[list[int]]) -> None:
        self.algebra = algebra
        self.vertices = vertices
        self.index = {v: i for i, v in enumerate(vertices)}
        self.out = out

    @classmethod
    def build(cls, a: OkuboAlgebra, vertices: list[Vector] | None = None, threads: int = 1) -> "ZeroDivisorDigraph":
        vertices = vertices if vertices is not None else vertices_orth(a)
        index = {v: i for i, v in enumerate(vertices)}

        def out_neighbors(i: int) -> list[int]:
            v = vertices[i]
            right = kernel(Matrix(a.field, a.left_rows(v)))
            return sorted(index[p] for p in right.projective_points() if p != v)

        out = parallel_map(out_neighbors, len(vertices), threads)
        logger.info(f"Zero-divisor digraph over {a.field}: {len(vertices)} vertices, "
                    f"{sum(len(o) for o in out)} arcs")
        return cls(a, vertices, out)

    def __len__(self) -> int:
        return len(self.vertices)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        g.add_edges_from((i, j) for i, nbrs in enumerate(self.out) for j in nbrs)
        return g

    def label(self, i: int) -> str:
        return self.algebra.format(AlgebraElement(self.algebra, self.vertices[i]))


def arc_witness(a: OkuboAlgebra, x: Vector, y: Vector) -> Vector | None:
    """z with x*z = 0 = z*y, a nonzero vector of the annihilator intersection."""
    rows = a.left_rows(x) + a.right_rows(y)
    for z in kernel(Matrix(a.field, rows, 8)).basis:
        return z
    return None


def _label(a: OkuboAlgebra, v: Vector) -> str:
    return a.format(AlgebraElement(a, v))


def _zdiv_exhaustive(dg: ZeroDivisorDigraph) -> tuple[ZdivSummary, CheckResult]:
    """Bitset sweep: out-neighbors united with their out-neighbors must cover every other vertex."""
    n = len(dg)
    masks = [sum(1 << j for j in nbrs) for nbrs in dg.out]
    full = (1 << n) - 1
    has_distance_two = False
    for i in range(n):
        reach = masks[i]
        two = 0
        for j in dg.out[i]:
            two |= masks[j]
        target = full & ~(1 << i)
        covered = (reach | two) & target
        if covered != target:
            j = (covered ^ target).bit_length() - 1
            summary = ZdivSummary(strongly_connected=False, mode="exhaustive", pairs_checked=i * (n - 1))
            return summary, CheckResult(
                name="zdiv_diameter_two",
                passed=False,
                checked=i * (n - 1),
                counterexample=f"no directed path of length <= 2 from {dg.label(i)} to {dg.label(j)}",
            )
        if reach & target != target:
            has_distance_two = True
    strongly = nx.is_strongly_connected(dg.to_networkx())
    diameter = 2 if has_distance_two else 1
    summary = ZdivSummary(
        strongly_connected=strongly, directed_diameter=diameter, mode="exhaustive", pairs_checked=n * (n - 1)
    )
    return summary, CheckResult(
        name="zdiv_diameter_two",
        passed=strongly and diameter == 2,
        checked=n * (n - 1),
        detail=f"strongly connected={strongly}, directed diameter={diameter}",
    )


def _zdiv_sampled(
    a: OkuboAlgebra, vertices: list[Vector], sample_pairs: int, seed: int
) -> tuple[ZdivSummary, CheckResult]:
    rng = random.Random(seed)
    n = len(vertices)
    has_distance_two = False
    for k in range(sample_pairs):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        x, y = vertices[i], vertices[j]
        if is_zero_vector(a.mul_vec(x, y)):
            continue
        has_distance_two = True
        z = arc_witness(a, x, y)
        if z is None or any(a.mul_vec(x, z)) or any(a.mul_vec(z, y)):
            summary = ZdivSummary(mode="sampled", pairs_checked=k + 1)
            return summary, CheckResult(
                name="zdiv_diameter_two",
                passed=False,
                checked=k + 1,
                counterexample=f"no witness for {_label(a, x)} -> {_label(a, y)}",
            )
    summary = ZdivSummary(mode="sampled", pairs_checked=sample_pairs)
    detail = f"sampled: every one of {sample_pairs} ordered pairs had a witness"
    if has_distance_two:
        detail += ", some at distance 2"
    return summary, CheckResult(name="zdiv_diameter_two", passed=True, checked=sample_pairs, detail=detail)


def zdiv_digraph_check(
    a: OkuboAlgebra,
    vertices: list[Vector] | None = None,
    exact_limit: int = 10_000,
    sample_pairs: int = 100_000,
    seed: int = 0,
    threads: int = 1,
) -> tuple[ZdivSummary, CheckResult]:
    """Every ordered pair of distinct vertices is joined by an arc or a directed 2-path.

    Up to exact_limit vertices the whole digraph is built and swept; beyond
    that, random ordered pairs are checked through annihilator witnesses.
    """
    vertices = vertices if vertices is not None else vertices_orth(a)
    if len(vertices) <= exact_limit:
        return _zdiv_exhaustive(ZeroDivisorDigraph.build(a, vertices, threads))
    logger.info(f"{len(vertices)} vertices exceed {exact_limit}; sampling {sample_pairs} ordered pairs")
    return _zdiv_sampled(a, vertices, sample_pairs, seed)


# =============================================================================
# Export
# =============================================================================


def _dot_label(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: OrthogonalityGraph, component: Sequence[int] | None = None, name: str = "orthogonality") -> str:
    """Undirected DOT text for a component (or the whole graph)."""
    members = list(component) if component is not None else list(range(len(g)))
    keep = set(members)
    center = None
    if component is not None:
        kind, center = component_kind(g, sorted(members))
    lines = [f"graph {name} {{"]
    for i in members:
        attrs = f'label="{_dot_label(g.label(i))} ({g.classes[i].value})"'
        if i == center:
            attrs += ", shape=doublecircle"
        lines.append(f"  v{i} [{attrs}];")
    for i in members:
        for j in g.adjacency[i]:
            if i < j and j in keep:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot_digraph(dg: ZeroDivisorDigraph, name: str = "zero_divisors") -> str:
    lines = [f"digraph {name} {{"]
    for i in range(len(dg)):
        lines.append(f'  v{i} [label="{_dot_label(dg.label(i))}"];')
    for i, nbrs in enumerate(dg.out):
        for j in nbrs:
            lines.append(f"  v{i} -> v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_report(
    g: OrthogonalityGraph,
    components: list[ComponentReport],
    geodesic_trichotomy: str = "skipped",
    zdiv: ZdivSummary | None = None,
) -> GraphReport:
    a = g.algebra
    return GraphReport(
        field=a.field_spec,
        alpha=str(a.alpha),
        beta=str(a.beta),
        vertex_count=len(g),
        components=components,
        geodesic_trichotomy=geodesic_trichotomy,
        zdiv=zdiv,
    )
