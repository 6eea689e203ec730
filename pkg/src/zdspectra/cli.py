"""Command line: quotient rendering, spectral reports, verification
sweeps, and graph exports.

Exit statuses: 0 success, 1 check failure, 2 usage error, 3 resource cap
exceeded.  Identical invocations produce byte-identical output.  The
default size caps can be overridden with the ZDSPECTRA_SIZE_CAP and
ZDSPECTRA_DENSE_CAP environment variables (flags win over both).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from .fib import docagne_residual
from .graph import (
    DEFAULT_SIZE_CAP,
    NotEquitableError,
    SizeCapExceeded,
    adjacency_matrix,
    adjacency_to_csv,
    build_bipartite,
    build_graph,
    empirical_quotient,
    expected_cell_sizes,
    to_dot,
    to_json_descriptor,
)
from .quotient import (
    NonIntegerEntryError,
    QuotientKind,
    build_p,
    build_q,
    det_walk_formula,
    exact_det,
    exact_rank,
    h_coefficients,
    json_safe_int,
    matrix_json_entries,
    matrix_to_csv,
    walk_matrix_closed_p,
    walk_matrix_closed_q,
    walk_matrix_iterative,
)
from .spectra import (
    DEFAULT_DENSE_CAP,
    DEFAULT_TOLERANCES,
    AmbiguousClassification,
    CheckResult,
    EigenBundle,
    PredictedSpectrum,
    Tolerances,
    eigen_bundle,
    krylov_rank,
    predicted_spectrum,
    q_eigen_exact_check,
    quotient_eigenvalues,
    verify_main_correspondences,
    verify_spectrum_theorem,
)

SIZE_CAP_ENV = "ZDSPECTRA_SIZE_CAP"
DENSE_CAP_ENV = "ZDSPECTRA_DENSE_CAP"


@dataclass(frozen=True)
class RunConfig:
    """Resolved knobs shared by the check-running subcommands."""

    size_cap: int
    dense_cap: int
    tolerance: float
    tolerances: Tolerances


# -- argument plumbing ------------------------------------------------------


def _range_arg(text: str) -> tuple[int, int]:
    """Inclusive integer interval: '4' or '2..6'."""
    lo_text, _, hi_text = text.partition("..")
    hi_text = hi_text or lo_text
    try:
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO..HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _add_common(parser: argparse.ArgumentParser, *, dense: bool) -> None:
    parser.add_argument(
        "--size-cap",
        type=int,
        default=None,
        help=f"refuse to enumerate graphs above this vertex count "
        f"(default {DEFAULT_SIZE_CAP}, env {SIZE_CAP_ENV})",
    )
    if dense:
        parser.add_argument(
            "--dense-cap",
            type=int,
            default=None,
            help=f"skip dense spectrum checks above this vertex count "
            f"(default {DEFAULT_DENSE_CAP}, env {DENSE_CAP_ENV})",
        )
        parser.add_argument(
            "--tolerance",
            type=float,
            default=1e-8,
            help="absolute tolerance for matching predicted eigenvalues",
        )
        parser.add_argument(
            "--eigen-convergence",
            type=float,
            default=DEFAULT_TOLERANCES.eigen_convergence,
            help="relative off-diagonal target of the eigensolver",
        )
        parser.add_argument(
            "--grouping-gap",
            type=float,
            default=DEFAULT_TOLERANCES.grouping_gap,
            help="absolute gap under which computed eigenvalues merge",
        )
        parser.add_argument(
            "--projection-threshold",
            type=float,
            default=DEFAULT_TOLERANCES.projection_threshold,
            help="all-ones projection norm above which a group is main",
        )
    parser.add_argument(
        "--output", metavar="PATH", default=None, help="write to PATH instead of stdout"
    )


def _resolve_cap(flag_value: int | None, env_name: str, default: int, parser) -> int:
    if flag_value is not None:
        value = flag_value
    else:
        raw = os.environ.get(env_name)
        if raw is None:
            return default
        try:
            value = int(raw)
        except ValueError:
            parser.error(f"{env_name} must be an integer, got {raw!r}")
    if value < 1:
        parser.error(f"caps must be positive, got {value}")
    return value


def _make_config(args, parser) -> RunConfig:
    size_cap = _resolve_cap(
        getattr(args, "size_cap", None), SIZE_CAP_ENV, DEFAULT_SIZE_CAP, parser
    )
    dense_cap = _resolve_cap(
        getattr(args, "dense_cap", None), DENSE_CAP_ENV, DEFAULT_DENSE_CAP, parser
    )
    # dense work never exceeds what may be enumerated at all
    dense_cap = min(dense_cap, size_cap)
    tolerances = Tolerances(
        eigen_convergence=getattr(
            args, "eigen_convergence", DEFAULT_TOLERANCES.eigen_convergence
        ),
        grouping_gap=getattr(args, "grouping_gap", DEFAULT_TOLERANCES.grouping_gap),
        projection_threshold=getattr(
            args, "projection_threshold", DEFAULT_TOLERANCES.projection_threshold
        ),
    )
    return RunConfig(
        size_cap=size_cap,
        dense_cap=dense_cap,
        tolerance=getattr(args, "tolerance", 1e-8),
        tolerances=tolerances,
    )


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


# -- check batteries --------------------------------------------------------


def _quotient_checks(m: int, n: int, kind: QuotientKind, gap: float) -> list[CheckResult]:
    """Exact-arithmetic checks for one quotient kind."""
    quotient = build_p(m, n) if kind is QuotientKind.P else build_q(m, n)
    tag = kind.value
    checks = []

    if kind is QuotientKind.P:
        law = tuple(m**i - 1 for i in range(1, n))
    else:
        law = tuple((m - 1) * m ** (i - 1) for i in range(1, n))
    sums = quotient.row_sums()
    checks.append(
        CheckResult(
            f"row sums follow the degree law ({tag})",
            sums == law,
            None,
            f"row sums {sums}",
        )
    )

    walk = walk_matrix_iterative(quotient)
    closed_of = walk_matrix_closed_p if kind is QuotientKind.P else walk_matrix_closed_q
    try:
        closed = closed_of(m, n)
        routes_agree = closed.entries == walk.entries
        detail = "" if routes_agree else "closed and iterative walk matrices differ"
    except NonIntegerEntryError as exc:
        routes_agree, detail = False, str(exc)
    checks.append(CheckResult(f"walk routes agree ({tag})", routes_agree, None, detail))

    rank = exact_rank(walk)
    checks.append(
        CheckResult(
            f"walk rank equals n-1 ({tag})", rank == n - 1, None, f"rank {rank}"
        )
    )

    det_elimination = exact_det(walk)
    det_factorization = det_walk_formula(m, n, kind)
    checks.append(
        CheckResult(
            f"determinant routes agree ({tag})",
            det_elimination == det_factorization,
            None,
            f"elimination {det_elimination}, factorization {det_factorization}",
        )
    )

    values = quotient_eigenvalues(quotient)
    spacing = min(
        (b - a for a, b in zip(values, values[1:])),
        default=math.inf,
    )
    checks.append(
        CheckResult(
            f"quotient eigenvalues pairwise separated ({tag})",
            spacing > gap,
            None,
            f"min spacing {spacing:.6g} vs grouping gap {gap:.6g}",
        )
    )
    return checks


def _recurrence_checks(m: int) -> list[CheckResult]:
    checks = []
    for l, r in ((5, 0), (9, 2), (14, 6)):
        residual = docagne_residual(m, l, r)
        checks.append(
            CheckResult(
                f"cross-product identity (l={l}, r={r})",
                residual == 0,
                float(abs(residual)),
            )
        )
    return checks


def _structure_checks(graph_obj, quotient, tag: str) -> list[CheckResult]:
    """Cell sizes and the equitable quotient against the closed form."""
    checks = []
    sizes = tuple(len(cell) for cell in graph_obj.cells)
    law = expected_cell_sizes(graph_obj.m, graph_obj.n, graph_obj.role)
    checks.append(
        CheckResult(
            f"cell sizes follow the closed form ({tag})",
            sizes == law,
            None,
            f"sizes {sizes}",
        )
    )
    try:
        empirical = empirical_quotient(graph_obj)
        equal = empirical == quotient.entries
        detail = "" if equal else "empirical quotient differs from the closed form"
    except NotEquitableError as exc:
        equal, detail = False, str(exc)
    checks.append(
        CheckResult(
            f"empirical quotient equals the closed form ({tag})", equal, None, detail
        )
    )
    return checks


def _krylov_check(graph_obj, tag: str) -> CheckResult:
    rank = krylov_rank(adjacency_matrix(graph_obj))
    want = graph_obj.n - 1
    return CheckResult(
        f"exact Krylov rank equals n-1 ({tag})",
        rank == want,
        None,
        f"rank {rank} vs {want}",
    )


def _values_match(
    predicted: list[float], computed: list[float], tolerance: float
) -> tuple[bool, float | None]:
    if len(predicted) != len(computed):
        return False, None
    residual = max(
        (abs(a - b) for a, b in zip(sorted(predicted), sorted(computed))),
        default=0.0,
    )
    return residual <= tolerance, residual


def _partial_bipartite_checks(
    bundle: EigenBundle, m: int, n: int, tolerance: float
) -> list[CheckResult]:
    """Subgraph-side correspondences when the full graph is too dense."""
    q_spectrum = list(quotient_eigenvalues(build_q(m, n)))
    main_values = list(bundle.report.main_values())
    ok, residual = _values_match(q_spectrum, main_values, tolerance)
    rank = krylov_rank(bundle.adjacency_int, max_cols=len(bundle.report.groups) + 1)
    return [
        CheckResult(
            "subgraph main eigenvalues equal the bipartite quotient spectrum",
            ok,
            residual,
            f"{len(main_values)} main vs {len(q_spectrum)} predicted",
        ),
        CheckResult(
            "subgraph main count equals n-1",
            len(main_values) == n - 1,
            None,
            f"{len(main_values)} vs {n - 1}",
        ),
        CheckResult(
            "exact Krylov rank of the subgraph equals its main count",
            rank == len(main_values),
            None,
            f"rank {rank}",
        ),
    ]


@dataclass
class Battery:
    """All checks for one (m, n), split by the graph they describe."""

    m: int
    n: int
    prediction: PredictedSpectrum
    q_spectrum: tuple[float, ...]
    full_checks: list[CheckResult]
    bip_checks: list[CheckResult]
    full_skipped: list[str]
    bip_skipped: list[str]
    full_bundle: EigenBundle | None
    bip_bundle: EigenBundle | None
    capped: bool

    @property
    def failures(self) -> list[tuple[str, CheckResult]]:
        bad = [("full", c) for c in self.full_checks if not c.passed]
        bad += [("bipartite", c) for c in self.bip_checks if not c.passed]
        return bad


def run_battery(m: int, n: int, config: RunConfig) -> Battery:
    """Run every check that fits under the caps for one parameter cell."""
    tol = config.tolerances
    prediction = predicted_spectrum(m, n)
    q_spectrum = quotient_eigenvalues(build_q(m, n))
    count_full = m**n - (m - 1) ** n - 1
    count_bip = 2 * (m - 1) * m ** (n - 2)

    full_checks = _quotient_checks(m, n, QuotientKind.P, tol.grouping_gap)
    bip_checks = _quotient_checks(m, n, QuotientKind.Q, tol.grouping_gap)
    full_skipped: list[str] = []
    bip_skipped: list[str] = []

    if n <= 10:
        bip_checks += list(q_eigen_exact_check(m, n).checks)
    else:
        bip_skipped.append(f"exact annihilation: n={n} beyond the exact bound 10")

    capped = count_full > config.size_cap
    full_bundle = bip_bundle = None

    if capped:
        full_skipped.append(
            f"all graph-level checks: vertex count {count_full} "
            f"exceeds size cap {config.size_cap}"
        )
    else:
        graph_full = build_graph(m, n, size_cap=config.size_cap)
        full_checks += _structure_checks(graph_full, build_p(m, n), "full graph")
        if count_full > config.dense_cap:
            full_skipped.append(
                f"dense spectrum checks: vertex count {count_full} "
                f"exceeds dense cap {config.dense_cap}"
            )
            full_checks.append(_krylov_check(graph_full, "full graph"))
        else:
            full_bundle = eigen_bundle(graph_full, tol)
            theorem = verify_spectrum_theorem(
                m, n, config.tolerance, tolerances=tol, bundle=full_bundle
            )
            full_checks += list(theorem.checks)

    if count_bip > config.size_cap:
        bip_skipped.append(
            f"all subgraph-level checks: vertex count {count_bip} "
            f"exceeds size cap {config.size_cap}"
        )
    else:
        graph_bip = build_bipartite(m, n, size_cap=config.size_cap)
        bip_checks += _structure_checks(graph_bip, build_q(m, n), "bipartite subgraph")
        if count_bip > config.dense_cap:
            bip_skipped.append(
                f"dense spectrum checks: vertex count {count_bip} "
                f"exceeds dense cap {config.dense_cap}"
            )
            bip_checks.append(_krylov_check(graph_bip, "bipartite subgraph"))
        else:
            bip_bundle = eigen_bundle(graph_bip, tol)

    if full_bundle is not None and bip_bundle is not None:
        correspondences = verify_main_correspondences(
            m,
            n,
            config.tolerance,
            tolerances=tol,
            full_bundle=full_bundle,
            bipartite_bundle=bip_bundle,
        )
        # fixed order: P match, Q match, negation, counts, two Krylov ranks
        cc = correspondences.checks
        full_checks += [cc[0], cc[4]]
        bip_checks += [cc[1], cc[2], cc[3], cc[5]]
    elif bip_bundle is not None:
        bip_checks += _partial_bipartite_checks(bip_bundle, m, n, config.tolerance)

    return Battery(
        m,
        n,
        prediction,
        q_spectrum,
        full_checks,
        bip_checks,
        full_skipped,
        bip_skipped,
        full_bundle,
        bip_bundle,
        capped,
    )


# -- report assembly --------------------------------------------------------


def _graph_entry(
    battery: Battery,
    role: str,
    vertex_count: int,
    predicted: dict,
    checks: list[CheckResult],
    skipped: list[str],
    bundle: EigenBundle | None,
) -> dict:
    entry = {
        "m": battery.m,
        "n": battery.n,
        "graph": role,
        "vertices": json_safe_int(vertex_count),
        "eigenvalues": bundle.report.eigenvalue_json_entries() if bundle else [],
        "predicted": predicted,
        "checks": [c.json_entry() for c in checks],
    }
    if skipped:
        entry["skipped"] = list(skipped)
    return entry


def assemble_report(m: int, n: int, config: RunConfig) -> tuple[list[dict], Battery]:
    battery = run_battery(m, n, config)
    count_full = m**n - (m - 1) ** n - 1
    count_bip = 2 * (m - 1) * m ** (n - 2)
    full_entry = _graph_entry(
        battery,
        "full",
        count_full,
        battery.prediction.json_entries(),
        battery.full_checks,
        battery.full_skipped,
        battery.full_bundle,
    )
    bip_entry = _graph_entry(
        battery,
        "bipartite",
        count_bip,
        {"main_eigenvalues": list(battery.q_spectrum), "main_count": n - 1},
        battery.bip_checks,
        battery.bip_skipped,
        battery.bip_bundle,
    )
    return [full_entry, bip_entry], battery


def _report_text(entries: list[dict]) -> str:
    lines = []
    for entry in entries:
        lines.append(
            f"{entry['graph']} graph, m={entry['m']}, n={entry['n']}: "
            f"{entry['vertices']} vertices"
        )
        if entry["eigenvalues"]:
            lines.append("  eigenvalues (value x multiplicity, * marks main):")
            for ev in entry["eigenvalues"]:
                star = " *" if ev["main"] else ""
                lines.append(f"    {ev['value']:.12g} x{ev['multiplicity']}{star}")
        passed = sum(1 for c in entry["checks"] if c["pass"])
        lines.append(f"  checks passed: {passed}/{len(entry['checks'])}")
        for c in entry["checks"]:
            if not c["pass"]:
                lines.append(f"    FAIL {c['name']}")
        for note in entry.get("skipped", ()):
            lines.append(f"  skipped {note}")
    return "\n".join(lines) + "\n"


# -- subcommand handlers ----------------------------------------------------


def _cmd_quotient(args, parser) -> int:
    kind = QuotientKind.P if args.kind == "p" else QuotientKind.Q
    m, n = args.m, args.n
    quotient = build_p(m, n) if kind is QuotientKind.P else build_q(m, n)
    walk = walk_matrix_iterative(quotient)
    closed_of = walk_matrix_closed_p if kind is QuotientKind.P else walk_matrix_closed_q
    closed = closed_of(m, n)
    walk_match = closed.entries == walk.entries
    rank = exact_rank(walk)
    det_elimination = exact_det(walk)
    det_factorization = det_walk_formula(m, n, kind)
    det_match = det_elimination == det_factorization

    if args.format == "csv":
        text = matrix_to_csv(quotient)
    elif args.format == "json":
        payload = {
            "kind": kind.value,
            "m": m,
            "n": n,
            "matrix": matrix_json_entries(quotient),
            "row_sums": [str(x) for x in quotient.row_sums()],
            "walk_iterative": matrix_json_entries(walk),
            "walk_closed": matrix_json_entries(closed),
            "walk_match": walk_match,
            "rank": rank,
            "det_elimination": str(det_elimination),
            "det_factorization": str(det_factorization),
            "det_match": det_match,
        }
        if kind is QuotientKind.P:
            payload["h_coefficients"] = [str(h) for h in h_coefficients(m, n)]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        def block(title: str, rows) -> list[str]:
            width = max(len(str(x)) for row in rows for x in row)
            out = [f"{title}:"]
            out += ["  " + " ".join(f"{x:>{width}}" for x in row) for row in rows]
            return out

        lines = [f"quotient {kind.value} (m={m}, n={n})"]
        lines += block("matrix", quotient.entries)
        lines.append(f"row sums: {' '.join(str(x) for x in quotient.row_sums())}")
        lines += block("walk matrix (iterative)", walk.entries)
        if walk_match:
            lines.append("walk matrix (closed form): identical")
        else:
            lines += block("walk matrix (closed form)", closed.entries)
        if kind is QuotientKind.P:
            lines.append(
                "h coefficients: "
                + " ".join(str(h) for h in h_coefficients(m, n))
            )
        lines.append(f"rank: {rank}")
        lines.append(f"determinant (elimination): {det_elimination}")
        lines.append(f"determinant (factorization): {det_factorization}")
        lines.append(
            "cross-checks: "
            + ("walk routes match" if walk_match else "WALK ROUTES DIFFER")
            + ", "
            + ("determinants match" if det_match else "DETERMINANTS DIFFER")
        )
        text = "\n".join(lines) + "\n"

    _emit(text, args.output)
    return 0 if walk_match and det_match else 1


def _cmd_report(args, parser) -> int:
    config = _make_config(args, parser)
    entries, battery = assemble_report(args.m, args.n, config)
    if args.format == "text":
        text = _report_text(entries)
    else:
        text = json.dumps(entries, indent=2) + "\n"
    _emit(text, args.output)
    if battery.capped:
        print(
            f"error: vertex count exceeds size cap {config.size_cap}; "
            "quotient-level report only",
            file=sys.stderr,
        )
        return 3
    if battery.failures:
        print("check failures:", file=sys.stderr)
        for role, check in battery.failures:
            print(f"  {role}: {check.name}", file=sys.stderr)
        return 1
    return 0


def _cmd_verify(args, parser) -> int:
    config = _make_config(args, parser)
    m_lo, m_hi = args.m
    n_lo, n_hi = args.n
    rows = []
    failures = []
    skip_notes = []
    total = 0
    for m in range(m_lo, m_hi + 1):
        for n in range(n_lo, n_hi + 1):
            battery = run_battery(m, n, config)
            checks = (
                _recurrence_checks(m) + battery.full_checks + battery.bip_checks
            )
            failed = [c for c in checks if not c.passed]
            skipped = battery.full_skipped + battery.bip_skipped
            total += len(checks)
            rows.append(
                (m, n, len(checks), len(failed), len(skipped),
                 "pass" if not failed else "FAIL")
            )
            failures += [(m, n, c) for c in failed]
            skip_notes += [(m, n, note) for note in skipped]

    lines = [f"{'m':>3} {'n':>3} {'checks':>7} {'failed':>7} {'skipped':>8}  status"]
    for m, n, n_checks, n_failed, n_skipped, status in rows:
        lines.append(
            f"{m:>3} {n:>3} {n_checks:>7} {n_failed:>7} {n_skipped:>8}  {status}"
        )
    lines.append("")
    lines.append(
        f"{len(rows)} cells, {total} checks, {len(failures)} failures"
    )
    if skip_notes:
        lines.append("skipped:")
        lines += [f"  m={m} n={n}: {note}" for m, n, note in skip_notes]
    if failures:
        lines.append("failures:")
        for m, n, check in failures:
            residual = (
                f" (residual {check.residual:.3e})"
                if check.residual is not None
                else ""
            )
            detail = f" - {check.detail}" if check.detail else ""
            lines.append(f"  m={m} n={n}: {check.name}{residual}{detail}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0 if not failures else 1


def _cmd_export(args, parser) -> int:
    config = _make_config(args, parser)
    build = build_graph if args.what == "graph" else build_bipartite
    graph_obj = build(args.m, args.n, size_cap=config.size_cap)
    if args.format == "dot":
        text = to_dot(graph_obj)
    elif args.format == "csv":
        text = adjacency_to_csv(graph_obj)
    else:
        text = json.dumps(to_json_descriptor(graph_obj), indent=2) + "\n"
    _emit(text, args.output)
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zdspectra",
        description="Spectra of zero-divisor graphs over products of equal-size "
        "fields: quotient matrices, predicted eigenvalues, and machine checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_quot = sub.add_parser(
        "quotient", help="render a quotient matrix with its walk-matrix checks"
    )
    p_quot.add_argument("--kind", choices=("p", "q"), required=True,
                        help="p: full-graph quotient; q: bipartite quotient")
    p_quot.add_argument("--m", type=int, required=True, help="field size (>= 2)")
    p_quot.add_argument("--n", type=int, required=True, help="tuple length (>= 2)")
    p_quot.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_quot.add_argument("--output", metavar="PATH", default=None)
    p_quot.set_defaults(handler=_cmd_quotient)

    p_rep = sub.add_parser(
        "report", help="full spectral report for one (m, n), both graphs"
    )
    p_rep.add_argument("--m", type=int, required=True)
    p_rep.add_argument("--n", type=int, required=True)
    p_rep.add_argument("--format", choices=("json", "text"), default="json")
    _add_common(p_rep, dense=True)
    p_rep.set_defaults(handler=_cmd_report)

    p_ver = sub.add_parser(
        "verify", help="run the invariant battery over a parameter grid"
    )
    p_ver.add_argument(
        "--m", type=_range_arg, default=(2, 4), help="range LO..HI (default 2..4)"
    )
    p_ver.add_argument(
        "--n", type=_range_arg, default=(2, 6), help="range LO..HI (default 2..6)"
    )
    _add_common(p_ver, dense=True)
    p_ver.set_defaults(handler=_cmd_verify)

    p_exp = sub.add_parser("export", help="emit a graph as DOT, CSV, or JSON")
    p_exp.add_argument("--m", type=int, required=True)
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--what", choices=("graph", "subgraph"), default="graph")
    p_exp.add_argument("--format", choices=("dot", "csv", "json"), default="dot")
    _add_common(p_exp, dense=False)
    p_exp.set_defaults(handler=_cmd_export)

    return parser


def _validate_bounds(args, parser) -> None:
    for name in ("m", "n"):
        value = getattr(args, name, None)
        if value is None:
            continue
        low = value[0] if isinstance(value, tuple) else value
        if low < 2:
            parser.error(f"{name} must be at least 2, got {low}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate_bounds(args, parser)
    try:
        return args.handler(args, parser)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AmbiguousClassification, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
