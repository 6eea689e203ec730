"""Spectral checks: dense eigensolving, main-eigenvalue classification,
Krylov ranks, and comparison of graph spectra against their predictions.

The eigensolver is cyclic-sweep Jacobi on dense symmetric matrices
(compiled with numba when available, plain numpy otherwise).  Computed
eigenvalues are merged into groups by a gap rule, each group is flagged
as main or not by projecting the normalized all-ones vector onto its
eigenspace, and a dead band around the decision threshold is reported
as ambiguous rather than silently resolved.  Exact routes run beside
the floating ones: Krylov ranks over the integers and annihilation of
the quadratic pair powers in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .fib import QuadraticNumber, golden_pair
from .graph import (
    DEFAULT_SIZE_CAP,
    SizeCapExceeded,
    adjacency_matrix,
    build_bipartite,
    build_graph,
)
from .quotient import QuotientMatrix, build_p, build_q, exact_rank, json_safe_int

__all__ = [
    "DEFAULT_DENSE_CAP",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "JacobiConvergenceError",
    "AmbiguousClassification",
    "SpectrumMismatch",
    "NonzeroDeterminant",
    "GraphSource",
    "EigenvalueGroup",
    "SpectralReport",
    "CheckResult",
    "VerificationReport",
    "QEigenvalue",
    "PredictedSpectrum",
    "EigenBundle",
    "symmetric_eigen",
    "classify_main",
    "krylov_rank",
    "quotient_eigenvalues",
    "predicted_spectrum",
    "eigen_bundle",
    "verify_spectrum_theorem",
    "verify_main_correspondences",
    "q_eigen_exact_check",
]

DEFAULT_DENSE_CAP = 3_000


@dataclass(frozen=True)
class Tolerances:
    """Numeric policy for the floating-point spectral pipeline."""

    # Jacobi stops when the off-diagonal Frobenius norm drops below
    # eigen_convergence * ||A||_F, within max_sweeps cyclic sweeps.
    eigen_convergence: float = 1e-12
    max_sweeps: int = 100
    # Computed eigenvalues closer than max(grouping_gap,
    # grouping_gap_rel * ||A||_F) are merged into one group.
    grouping_gap: float = 1e-8
    grouping_gap_rel: float = 1e-9
    # A group is main when the all-ones projection norm exceeds
    # projection_threshold; norms inside
    # [dead_band_factor * threshold, threshold] raise.
    projection_threshold: float = 1e-7
    dead_band_factor: float = 0.1


DEFAULT_TOLERANCES = Tolerances()


class JacobiConvergenceError(RuntimeError):
    """The rotation sweeps exhausted their budget before convergence."""

    def __init__(self, sweeps: int, off: float, target: float) -> None:
        super().__init__(
            f"no convergence after {sweeps} sweeps: off-diagonal norm "
            f"{off:.3e} above target {target:.3e}"
        )
        self.sweeps = sweeps
        self.off = off
        self.target = target


class AmbiguousClassification(Exception):
    """A projection norm landed inside the main/non-main dead band."""

    def __init__(self, value: float, projection: float, low: float, high: float) -> None:
        super().__init__(
            f"projection norm {projection:.3e} for eigenvalue {value:.12g} "
            f"lies inside the dead band [{low:.3e}, {high:.3e}]"
        )
        self.value = value
        self.projection = projection
        self.band = (low, high)


class SpectrumMismatch(Exception):
    """A computed spectrum disagrees with its prediction."""


class NonzeroDeterminant(Exception):
    """An exact annihilation determinant failed to vanish."""


# -- eigensolver ------------------------------------------------------------


def _jacobi_dense(A, target, max_sweeps):  # pragma: no cover - exercised compiled
    n = A.shape[0]
    V = np.eye(n)
    off = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                off += A[i, j] * A[i, j]
    off = math.sqrt(off)
    sweeps = 0
    skip = target / max(1.0, float(n))
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    if k != p and k != q:
                        akp = A[k, p]
                        akq = A[k, q]
                        A[k, p] = c * akp - s * akq
                        A[k, q] = s * akp + c * akq
                        A[p, k] = A[k, p]
                        A[q, k] = A[k, q]
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
        sweeps += 1
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += A[i, j] * A[i, j]
        off = math.sqrt(off)
    w = np.empty(n)
    for i in range(n):
        w[i] = A[i, i]
    return w, V, sweeps, off


def _jacobi_numpy(A, target, max_sweeps):
    """Slice-vectorized fallback with the same rotation order."""
    n = A.shape[0]
    V = np.eye(n)

    def off_norm(M):
        hollow = M.copy()
        np.fill_diagonal(hollow, 0.0)
        return float(np.linalg.norm(hollow))

    off = off_norm(A)
    sweeps = 0
    skip = target / max(1.0, float(n))
    while off > target and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= skip:
                    continue
                app = A[p, p]
                aqq = A[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rowp = A[p, :].copy()
                rowq = A[q, :].copy()
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                colp = A[:, p].copy()
                colq = A[:, q].copy()
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                A[p, p] = app - t * apq
                A[q, q] = aqq + t * apq
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        sweeps += 1
        off = off_norm(A)
    return np.diag(A).copy(), V, sweeps, off


try:  # compiled kernel when numba is around; pure numpy otherwise
    from numba import njit

    _jacobi_kernel = njit(cache=True)(_jacobi_dense)
except ImportError:  # pragma: no cover
    _jacobi_kernel = _jacobi_numpy


def symmetric_eigen(
    matrix: object, tolerances: Tolerances | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of an exactly symmetric matrix.

    Returns (w, V) with eigenvalues w ascending and orthonormal
    eigenvectors in the columns of V.  Deterministic for fixed input:
    rotations run in cyclic row order and ties sort stably.  Raises
    JacobiConvergenceError when the sweep budget is exhausted.
    """
    tol = tolerances or DEFAULT_TOLERANCES
    A = np.array(matrix, dtype=np.float64, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError("matrix must be square and non-empty")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix must be exactly symmetric")
    A = np.ascontiguousarray(A)
    target = tol.eigen_convergence * float(np.linalg.norm(A))
    w, V, sweeps, off = _jacobi_kernel(A, target, tol.max_sweeps)
    if off > target:
        raise JacobiConvergenceError(sweeps, off, target)
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


# -- classification ---------------------------------------------------------


@dataclass(frozen=True)
class GraphSource:
    """Identity of the graph a spectral report describes."""

    m: int
    n: int
    graph: str  # "full" or "bipartite"


@dataclass(frozen=True)
class EigenvalueGroup:
    value: float
    multiplicity: int
    projection: float
    is_main: bool


@dataclass(frozen=True)
class SpectralReport:
    """Grouped eigenvalues of one graph with main flags."""

    source: GraphSource | None
    groups: tuple[EigenvalueGroup, ...]
    grouping_gap: float
    projection_threshold: float

    def main_values(self) -> tuple[float, ...]:
        return tuple(g.value for g in self.groups if g.is_main)

    def nonmain_values(self) -> tuple[float, ...]:
        return tuple(g.value for g in self.groups if not g.is_main)

    @property
    def total_multiplicity(self) -> int:
        return sum(g.multiplicity for g in self.groups)

    def eigenvalue_json_entries(self) -> list[dict]:
        return [
            {"value": g.value, "multiplicity": g.multiplicity, "main": g.is_main}
            for g in self.groups
        ]


def _group_bounds(w: np.ndarray, gap: float) -> list[tuple[int, int]]:
    bounds = []
    start = 0
    for i in range(1, len(w)):
        if float(w[i] - w[i - 1]) >= gap:
            bounds.append((start, i))
            start = i
    bounds.append((start, len(w)))
    return bounds


def _classify(
    w: np.ndarray,
    V: np.ndarray,
    frobenius: float,
    tol: Tolerances,
    source: GraphSource | None,
) -> SpectralReport:
    n = len(w)
    gap = max(tol.grouping_gap, tol.grouping_gap_rel * frobenius)
    ones = np.full(n, 1.0 / math.sqrt(n))
    coeff = V.T @ ones
    low = tol.dead_band_factor * tol.projection_threshold
    groups = []
    for a, b in _group_bounds(w, gap):
        projection = float(math.sqrt(float(np.sum(coeff[a:b] ** 2))))
        value = float(np.mean(w[a:b]))
        if low <= projection <= tol.projection_threshold:
            raise AmbiguousClassification(
                value, projection, low, tol.projection_threshold
            )
        groups.append(
            EigenvalueGroup(value, b - a, projection, projection > tol.projection_threshold)
        )
    report = SpectralReport(source, tuple(groups), gap, tol.projection_threshold)
    assert report.total_multiplicity == n
    assert any(g.is_main for g in groups), "every graph has a main eigenvalue"
    return report


def classify_main(
    matrix: object,
    *,
    tolerances: Tolerances | None = None,
    source: GraphSource | None = None,
) -> SpectralReport:
    """Group the spectrum of a symmetric matrix and flag main eigenvalues.

    A group is main when the normalized all-ones vector has projection
    norm above the threshold on its eigenspace; norms inside the dead
    band raise AmbiguousClassification.
    """
    tol = tolerances or DEFAULT_TOLERANCES
    w, V = symmetric_eigen(matrix, tol)
    frobenius = float(np.linalg.norm(np.asarray(matrix, dtype=np.float64)))
    return _classify(w, V, frobenius, tol, source)


# -- exact Krylov rank ------------------------------------------------------


def krylov_rank(matrix: object, max_cols: int | None = None) -> int:
    """Rank of [e, Ae, A**2 e, ...] over the rationals, in exact arithmetic.

    Columns extend until two consecutive ranks agree (the rank can never
    grow again after that), capped at max_cols (default: order + 1).
    """
    M = np.asarray(matrix)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValueError("matrix must be square and non-empty")
    if M.dtype == object:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in M.flat):
            raise ValueError("matrix entries must be integers")
    elif not np.issubdtype(M.dtype, np.integer):
        raise ValueError("matrix entries must be integers")
    n = M.shape[0]
    cap = n + 1 if max_cols is None else max_cols
    if cap < 1:
        raise ValueError(f"max_cols must be at least 1, got {max_cols!r}")
    binary = M.dtype != object and int(M.min()) >= 0 and int(M.max()) <= 1
    if binary:
        neighbors = [np.flatnonzero(row).tolist() for row in M]
    else:
        dense_rows = [[int(x) for x in row] for row in M.tolist()]
    vec = [1] * n
    krylov_rows = [vec]
    rank = 1
    while len(krylov_rows) < cap:
        prev = krylov_rows[-1]
        if binary:
            nxt = [sum(prev[j] for j in hood) for hood in neighbors]
        else:
            nxt = [
                sum(row[j] * prev[j] for j in range(n) if row[j])
                for row in dense_rows
            ]
        krylov_rows.append(nxt)
        new_rank = exact_rank(krylov_rows)
        if new_rank == rank:
            return rank
        rank = new_rank
    return rank


# -- predictions ------------------------------------------------------------


def quotient_eigenvalues(quotient: QuotientMatrix) -> tuple[float, ...]:
    """Sorted real eigenvalues of a (generally nonsymmetric) quotient."""
    values = np.linalg.eigvals(np.array(quotient.entries, dtype=np.float64))
    scale = 1.0 + float(np.max(np.abs(values), initial=0.0))
    drift = float(np.max(np.abs(values.imag), initial=0.0))
    if drift > 1e-9 * scale:
        raise ArithmeticError(
            f"quotient spectrum unexpectedly complex (imaginary drift {drift:.3e})"
        )
    return tuple(sorted(float(x) for x in values.real))


@dataclass(frozen=True)
class QEigenvalue:
    """One sign-flipped eigenvalue contributed by the bipartite quotient."""

    index: int
    exact: QuadraticNumber
    value: float
    multiplicity: int


@dataclass(frozen=True)
class PredictedSpectrum:
    """Predicted spectrum of the full graph.

    The quotient eigenvalues appear once each, the pair powers
    phi**i * xi**(n-i) appear with multiplicity C(n, i) - 1, and zero
    fills the remainder: its multiplicity is derived from the counting
    identity (vertex count minus everything else), which simplifies to
    m**n - (m-1)**n - 2**n + 1 and vanishes exactly when m = 2.
    """

    m: int
    n: int
    p_eigenvalues: tuple[float, ...]
    q_derived: tuple[QEigenvalue, ...]
    zero_multiplicity: int

    @property
    def total_multiplicity(self) -> int:
        return (
            len(self.p_eigenvalues)
            + sum(q.multiplicity for q in self.q_derived)
            + self.zero_multiplicity
        )

    def multiset(self) -> list[tuple[float, int]]:
        """Sorted (value, multiplicity) pairs including the zero block."""
        items = [(v, 1) for v in self.p_eigenvalues]
        items.extend((q.value, q.multiplicity) for q in self.q_derived)
        if self.zero_multiplicity:
            items.append((0.0, self.zero_multiplicity))
        return sorted(items)

    def json_entries(self) -> dict:
        return {
            "p_eigenvalues": list(self.p_eigenvalues),
            "q_derived": [
                {
                    "index": q.index,
                    "exact": str(q.exact),
                    "value": q.value,
                    "multiplicity": json_safe_int(q.multiplicity),
                }
                for q in self.q_derived
            ],
            "zero_multiplicity": json_safe_int(self.zero_multiplicity),
            "zero_multiplicity_derived": True,
        }


def predicted_spectrum(m: int, n: int) -> PredictedSpectrum:
    """Assemble the predicted full-graph spectrum for (m, n)."""
    p_values = quotient_eigenvalues(build_p(m, n))
    phi, xi = golden_pair(m)
    q_values = []
    for i in range(1, n):
        exact = phi**i * xi ** (n - i)
        q_values.append(
            QEigenvalue(i, exact, float(exact), math.comb(n, i) - 1)
        )
    zero = m**n - (m - 1) ** n - 2**n + 1
    prediction = PredictedSpectrum(m, n, p_values, tuple(q_values), zero)
    assert prediction.total_multiplicity == m**n - (m - 1) ** n - 1
    return prediction


# -- verification reports ---------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    residual: float | None = None
    detail: str = ""

    def json_entry(self) -> dict:
        return {"name": self.name, "pass": self.passed, "residual": self.residual}


@dataclass(frozen=True)
class VerificationReport:
    title: str
    checks: tuple[CheckResult, ...]
    failure_exception: type = SpectrumMismatch

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def raise_if_failed(self) -> None:
        if not self.passed:
            lines = [self.title] + [
                f"  {c.name}: {c.detail or 'failed'}"
                + (f" (residual {c.residual:.3e})" if c.residual is not None else "")
                for c in self.failures
            ]
            raise self.failure_exception("\n".join(lines))


@dataclass
class EigenBundle:
    """One graph with its dense eigensystem and classification."""

    graph: object
    adjacency_int: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    report: SpectralReport


def eigen_bundle(graph: object, tolerances: Tolerances | None = None) -> EigenBundle:
    """Decompose a graph's adjacency matrix once, for reuse across checks."""
    tol = tolerances or DEFAULT_TOLERANCES
    adjacency = adjacency_matrix(graph)
    dense = adjacency.astype(np.float64)
    w, V = symmetric_eigen(dense, tol)
    source = GraphSource(graph.m, graph.n, graph.role)
    report = _classify(w, V, float(np.linalg.norm(dense)), tol, source)
    return EigenBundle(graph, adjacency, w, V, report)


def _dense_graph_bundle(
    m: int,
    n: int,
    count: int,
    what: str,
    build,
    tolerances: Tolerances | None,
    size_cap: int,
    dense_cap: int,
) -> EigenBundle:
    if count > dense_cap:
        raise SizeCapExceeded(f"dense spectrum of the {what}", count, dense_cap)
    return eigen_bundle(build(m, n, size_cap=size_cap), tolerances)


def verify_spectrum_theorem(
    m: int,
    n: int,
    tolerance: float = 1e-8,
    *,
    tolerances: Tolerances | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    dense_cap: int = DEFAULT_DENSE_CAP,
    bundle: EigenBundle | None = None,
) -> VerificationReport:
    """Compare the computed full-graph spectrum with its prediction.

    Every predicted eigenvalue must match a computed group within
    `tolerance`, with exactly the predicted multiplicity.  Returns a
    report with one check per eigenvalue; `raise_if_failed` raises
    SpectrumMismatch.
    """
    prediction = predicted_spectrum(m, n)
    if bundle is None:
        count = m**n - (m - 1) ** n - 1
        bundle = _dense_graph_bundle(
            m, n, count, f"graph for m={m}, n={n}",
            build_graph, tolerances, size_cap, dense_cap,
        )
    predicted_items = prediction.multiset()
    spacing = min(
        (b - a for (a, _), (b, _) in zip(predicted_items, predicted_items[1:])),
        default=math.inf,
    )
    if spacing <= 2 * tolerance:
        raise ArithmeticError(
            f"predicted eigenvalues only {spacing:.3e} apart; "
            f"cannot match at tolerance {tolerance:.3e}"
        )
    computed_items = [(g.value, g.multiplicity) for g in bundle.report.groups]
    checks = [
        CheckResult(
            "distinct eigenvalue count",
            len(computed_items) == len(predicted_items),
            None,
            f"computed {len(computed_items)}, predicted {len(predicted_items)}",
        )
    ]
    if len(computed_items) == len(predicted_items):
        for (pv, pm), (cv, cm) in zip(predicted_items, computed_items):
            residual = abs(cv - pv)
            checks.append(
                CheckResult(
                    f"eigenvalue {pv:.12g} x{pm}",
                    residual <= tolerance and cm == pm,
                    residual,
                    f"computed {cv:.12g} x{cm}",
                )
            )
    return VerificationReport(
        f"spectrum of the full graph (m={m}, n={n})", tuple(checks), SpectrumMismatch
    )


def _match_sorted(
    predicted: list[float], computed: list[float], tolerance: float
) -> tuple[bool, float]:
    if len(predicted) != len(computed):
        return False, math.inf
    residual = max(
        (abs(a - b) for a, b in zip(sorted(predicted), sorted(computed))),
        default=0.0,
    )
    return residual <= tolerance, residual


def verify_main_correspondences(
    m: int,
    n: int,
    tolerance: float = 1e-8,
    *,
    tolerances: Tolerances | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    dense_cap: int = DEFAULT_DENSE_CAP,
    full_bundle: EigenBundle | None = None,
    bipartite_bundle: EigenBundle | None = None,
) -> VerificationReport:
    """Check the three main-eigenvalue correspondences for (m, n):

    the full graph's main values are the full quotient's spectrum, the
    subgraph's main values are the bipartite quotient's spectrum, the
    full graph's nonzero non-main values are the negated subgraph mains,
    and both main counts equal n-1 and the exact Krylov ranks.
    """
    if full_bundle is None:
        count = m**n - (m - 1) ** n - 1
        full_bundle = _dense_graph_bundle(
            m, n, count, f"graph for m={m}, n={n}",
            build_graph, tolerances, size_cap, dense_cap,
        )
    if bipartite_bundle is None:
        count = 2 * (m - 1) * m ** (n - 2)
        bipartite_bundle = _dense_graph_bundle(
            m, n, count, f"two-sided subgraph for m={m}, n={n}",
            build_bipartite, tolerances, size_cap, dense_cap,
        )
    prediction = predicted_spectrum(m, n)
    p_spectrum = list(quotient_eigenvalues(build_p(m, n)))
    q_spectrum = list(quotient_eigenvalues(build_q(m, n)))
    main_full = list(full_bundle.report.main_values())
    main_bip = list(bipartite_bundle.report.main_values())

    checks = []
    ok, res = _match_sorted(p_spectrum, main_full, tolerance)
    checks.append(
        CheckResult(
            "main eigenvalues equal the full quotient spectrum",
            ok,
            None if math.isinf(res) else res,
            f"{len(main_full)} main vs {len(p_spectrum)} predicted",
        )
    )
    ok, res = _match_sorted(q_spectrum, main_bip, tolerance)
    checks.append(
        CheckResult(
            "subgraph main eigenvalues equal the bipartite quotient spectrum",
            ok,
            None if math.isinf(res) else res,
            f"{len(main_bip)} main vs {len(q_spectrum)} predicted",
        )
    )
    nonmain = [
        g for g in full_bundle.report.groups if not g.is_main
    ]
    if prediction.zero_multiplicity and nonmain:
        zero_group = min(nonmain, key=lambda g: abs(g.value))
        nonmain = [g for g in nonmain if g is not zero_group]
    ok, res = _match_sorted(
        [-v for v in main_bip], [g.value for g in nonmain], tolerance
    )
    checks.append(
        CheckResult(
            "nonzero non-main values equal the negated subgraph mains",
            ok,
            None if math.isinf(res) else res,
            f"{len(nonmain)} non-main vs {len(main_bip)} negated mains",
        )
    )
    checks.append(
        CheckResult(
            "main counts equal n-1 on both graphs",
            len(main_full) == n - 1 == len(main_bip),
            None,
            f"full {len(main_full)}, subgraph {len(main_bip)}, n-1 = {n - 1}",
        )
    )
    distinct_full = len(full_bundle.report.groups)
    rank_full = krylov_rank(full_bundle.adjacency_int, max_cols=distinct_full + 1)
    checks.append(
        CheckResult(
            "exact Krylov rank of the graph equals its main count",
            rank_full == len(main_full),
            None,
            f"rank {rank_full} vs {len(main_full)} main",
        )
    )
    distinct_bip = len(bipartite_bundle.report.groups)
    rank_bip = krylov_rank(
        bipartite_bundle.adjacency_int, max_cols=distinct_bip + 1
    )
    checks.append(
        CheckResult(
            "exact Krylov rank of the subgraph equals its main count",
            rank_bip == len(main_bip),
            None,
            f"rank {rank_bip} vs {len(main_bip)} main",
        )
    )
    return VerificationReport(
        f"main-eigenvalue correspondences (m={m}, n={n})",
        tuple(checks),
        SpectrumMismatch,
    )


# -- exact annihilation -----------------------------------------------------


def _det_quadratic(rows: list[list[QuadraticNumber]]) -> QuadraticNumber:
    """Exact determinant over the quadratic field, by elimination."""
    order = len(rows)
    rows = [list(row) for row in rows]
    det = QuadraticNumber(Fraction(1))
    negate = False
    for col in range(order):
        pivot_row = next(
            (r for r in range(col, order) if not rows[r][col].is_zero), None
        )
        if pivot_row is None:
            return QuadraticNumber(Fraction(0))
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            negate = not negate
        pivot = rows[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(col + 1, order):
            factor = rows[r][col] * inv
            if factor.is_zero:
                continue
            for c in range(col, order):
                rows[r][c] = rows[r][c] - factor * rows[col][c]
    return -det if negate else det


def q_eigen_exact_check(m: int, n: int) -> VerificationReport:
    """Exactly verify that every pair power phi**i * xi**(n-i) annihilates
    the bipartite quotient: det(Q + value * I) == 0 in the quadratic field.

    Returns one check per index i; `raise_if_failed` raises
    NonzeroDeterminant with the exact residual in the detail.
    """
    if n > 10:
        raise ValueError(
            f"exact annihilation is supported for n <= 10, got n={n}"
        )
    quotient = build_q(m, n)
    phi, xi = golden_pair(m)
    checks = []
    for i in range(1, n):
        value = phi**i * xi ** (n - i)
        shifted = [
            [
                QuadraticNumber(Fraction(quotient.entries[r][c]))
                + (value if r == c else 0)
                for c in range(n - 1)
            ]
            for r in range(n - 1)
        ]
        det = _det_quadratic(shifted)
        checks.append(
            CheckResult(
                f"pair power i={i} annihilates the bipartite quotient",
                det.is_zero,
                abs(float(det)),
                f"det(Q + ({value}) I) = {det}",
            )
        )
    return VerificationReport(
        f"exact annihilation by pair powers (m={m}, n={n})",
        tuple(checks),
        NonzeroDeterminant,
    )
