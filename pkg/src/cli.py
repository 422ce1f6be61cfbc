"""Command-line entry point: mult, norm, graph, verify and info.

Exit codes: 0 success, 1 a check failed (or an unexpected error), 2 invalid
configuration, input or suite choice.
"""

import argparse
import logging
import sys
import time
from pathlib import Path

from pydantic import ValidationError

from .config import RunConfig, settings
from .errors import OkuboError
from .graphs import (
    OrthogonalityGraph,
    ZeroDivisorDigraph,
    components_orth,
    expected_vertex_count,
    export_dot,
    export_dot_digraph,
    export_report,
    geodesic_check,
    vertices_orth,
    zdiv_digraph_check,
)
from .models import ComponentKind, GraphReport
from .output import ReportWriter
from .suites import SUITE_ORDER, SuiteContext, run_verification

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%H:%M:%S",
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="okubo", description="Exact computations in Okubo algebras")
    parser.add_argument("--field", help="field spec: p, p^k, p^k/c_k,...,c_0, p(t) or gf2..gf13, gf3t")
    parser.add_argument("--alpha", help="alpha as a field literal")
    parser.add_argument("--beta", help="beta as a field literal")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--threads", type=int)
    parser.add_argument("--exact-limit", type=int, dest="exact_limit")
    parser.add_argument("--out", type=Path, dest="output_dir", help="output directory")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="print the coefficient vector of x*y")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("norm", help="print n(x, y)")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("graph", help="build a graph and write a report or DOT file")
    p.add_argument("which", choices=["orth", "zdiv"])
    p.add_argument("--export", choices=["report", "dot"], default="report")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", choices=[*SUITE_ORDER, "all"])

    sub.add_parser("info", help="describe the configured field and algebra")
    return parser


def config_from_args(args: argparse.Namespace, base: RunConfig | None = None) -> RunConfig:
    """Settings overridden by whichever flags were given."""
    base = base or settings
    overrides = {
        k: getattr(args, k)
        for k in ("field", "alpha", "beta", "seed", "threads", "exact_limit", "output_dir")
        if getattr(args, k, None) is not None
    }
    return RunConfig(**{**base.model_dump(), **overrides})


# =============================================================================
# Commands
# =============================================================================


def cmd_mult(cfg: RunConfig, x_expr: str, y_expr: str) -> int:
    a = cfg.build_algebra()
    x, y = a.parse(x_expr), a.parse(y_expr)
    print(a.format_vector(x * y))
    return EXIT_OK


def cmd_norm(cfg: RunConfig, x_expr: str, y_expr: str) -> int:
    a = cfg.build_algebra()
    x, y = a.parse(x_expr), a.parse(y_expr)
    print(a.bilin(x, y))
    return EXIT_OK


def cmd_info(cfg: RunConfig) -> int:
    a = cfg.build_algebra()
    f = a.field
    print(f"field: {a.field_spec} ({f})")
    print(f"characteristic: {f.characteristic}")
    print(f"order: {f.order if f.is_finite else 'infinite'}")
    print(f"cube roots of unity: {', '.join(str(w) for w in f.primitive_cube_roots()) or 'none'}")
    print(f"alpha: {a.alpha}")
    print(f"beta: {a.beta}")
    if a.characteristic == 3:
        print(f"split: {'yes' if a.is_split() else 'no'}")
    else:
        print(f"omega in field: {'yes' if a.has_omega() else 'no'}")
    if f.is_finite:
        print(f"expected vertices: {expected_vertex_count(f.order)}")
    return EXIT_OK


def _orth_report(cfg: RunConfig, ctx: SuiteContext, g: OrthogonalityGraph) -> GraphReport:
    components = components_orth(g, cfg.exact_limit, cfg.certificate_sample, cfg.seed)
    trichotomy = "skipped"
    big = ctx.big if ctx.expects_big else None
    if big is not None and len(big) <= cfg.exact_limit:
        check = geodesic_check(g, big, all_unique=ctx.algebra.characteristic == 3)
        trichotomy = "pass" if check.passed else "fail"
        if not check.passed:
            logger.warning(f"Geodesic counts: {check.counterexample}")
    return export_report(g, components, geodesic_trichotomy=trichotomy)


def cmd_graph(cfg: RunConfig, which: str, export: str) -> int:
    a = cfg.build_algebra()
    writer = ReportWriter(cfg)
    ctx = SuiteContext(a, cfg)
    t0 = time.time()

    if which == "orth":
        g = ctx.graph
        if export == "dot":
            writer.save_dot(export_dot(g), a.field_spec, which)
            code = EXIT_OK
        else:
            report = _orth_report(cfg, ctx, g)
            writer.save_graph_report(report, which)
            code = EXIT_FAILED if report.geodesic_trichotomy == "fail" else EXIT_OK
            kinds = [c.kind for c in report.components]
            logger.info(
                f"  {report.vertex_count} vertices: {kinds.count(ComponentKind.PAIR)} pairs, "
                f"{kinds.count(ComponentKind.STAR)} stars, {kinds.count(ComponentKind.BIG)} big"
            )
    else:
        vertices = vertices_orth(a)
        if export == "dot":
            dg = ZeroDivisorDigraph.build(a, vertices, cfg.threads)
            writer.save_dot(export_dot_digraph(dg), a.field_spec, which)
            code = EXIT_OK
        else:
            summary, check = zdiv_digraph_check(
                a, vertices, cfg.exact_limit, cfg.zdiv_sample_pairs, cfg.seed, cfg.threads
            )
            report = GraphReport(
                field=a.field_spec,
                alpha=str(a.alpha),
                beta=str(a.beta),
                vertex_count=len(vertices),
                components=[],
                zdiv=summary,
            )
            writer.save_graph_report(report, which)
            code = EXIT_OK if check.passed else EXIT_FAILED
    logger.info(f"Graph {which} over {a.field_spec} done in {time.time() - t0:.1f}s")
    return code


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    a = cfg.build_algebra()
    t0 = time.time()
    run = run_verification(SuiteContext(a, cfg), suite)
    ReportWriter(cfg).save_verification(run)

    logger.info("=" * 60)
    logger.info(f"VERIFICATION {'PASSED' if run.passed else 'FAILED'} over {a.describe()}")
    logger.info(f"  Suites: {len(run.suites)}, skipped: {len(run.skipped)}")
    logger.info(f"  Total time: {time.time() - t0:.1f}s")
    logger.info("=" * 60)
    for report in run.suites:
        for check in report.failures:
            print(f"FAIL {report.suite}/{check.name}: {check.counterexample}")
    return EXIT_OK if run.passed else EXIT_FAILED


# =============================================================================
# Entry point
# =============================================================================


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, and map the outcome to an exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        cfg = config_from_args(args)
        if args.command == "mult":
            return cmd_mult(cfg, args.x, args.y)
        if args.command == "norm":
            return cmd_norm(cfg, args.x, args.y)
        if args.command == "graph":
            return cmd_graph(cfg, args.which, args.export)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        return cmd_info(cfg)
    except (OkuboError, ValidationError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_CONFIG
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FAILED
    except Exception as e:
        logger.error(f"Run failed: {e}", exc_info=True)
        return EXIT_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
