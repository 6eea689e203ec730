"""Quotient matrices of the zero-count partition and their walk matrices.

Two (n-1) x (n-1) integer matrices are built for field size m and tuple
length n: the P kind records, for a vertex with i zero coordinates, how
many neighbors it has with j zero coordinates in the full graph; the
Q kind does the same inside the two-sided induced subgraph.  Their walk
matrices [e, Be, B**2 e, ...] admit closed forms in the weighted
Fibonacci family, a Vandermonde-diagonal-unitriangular factorization,
and a product formula for the determinant.  All arithmetic in this
module is exact (integers and fractions); floats never appear.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .fib import FibSequence

__all__ = [
    "QuotientKind",
    "QuotientMatrix",
    "WalkMatrix",
    "WalkFactorization",
    "NonIntegerEntryError",
    "build_p",
    "build_q",
    "walk_matrix_iterative",
    "h_coefficients",
    "walk_matrix_closed_p",
    "walk_matrix_closed_q",
    "factorize_walk",
    "det_walk_formula",
    "exact_rank",
    "exact_det",
    "matrix_to_csv",
    "matrix_json_entries",
    "matrix_to_json",
    "json_safe_int",
]

IntMatrix = tuple[tuple[int, ...], ...]


class NonIntegerEntryError(ArithmeticError):
    """A closed-form walk entry failed to reduce to an integer.

    This signals an implementation bug, never a user error.
    """


class QuotientKind(Enum):
    P = "P"  # full-graph partition quotient
    Q = "Q"  # bipartite-subgraph partition quotient


def _check_order(m: int, n: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"field size m must be an integer >= 2, got {m!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise ValueError(f"tuple length n must be an integer >= 2, got {n!r}")


@dataclass(frozen=True)
class QuotientMatrix:
    """Integer quotient matrix; rows and columns are indexed 1..n-1."""

    kind: QuotientKind
    m: int
    n: int
    entries: IntMatrix

    @property
    def order(self) -> int:
        return self.n - 1

    def entry(self, i: int, j: int) -> int:
        """1-based accessor."""
        return self.entries[i - 1][j - 1]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)


def build_p(m: int, n: int) -> QuotientMatrix:
    """Full-graph quotient: entry (i, j) is C(i, n-j) * (m-1)**(n-j) when
    i + j >= n and 0 otherwise.  Row i sums to m**i - 1."""
    _check_order(m, n)
    entries = tuple(
        tuple(
            math.comb(i, n - j) * (m - 1) ** (n - j) if i + j >= n else 0
            for j in range(1, n)
        )
        for i in range(1, n)
    )
    return QuotientMatrix(QuotientKind.P, m, n, entries)


def build_q(m: int, n: int) -> QuotientMatrix:
    """Two-sided-subgraph quotient: entry (i, j) is
    C(i-1, n-j-1) * (m-1)**(n-j) when i + j >= n and 0 otherwise.
    Row i sums to (m-1) * m**(i-1)."""
    _check_order(m, n)
    entries = tuple(
        tuple(
            math.comb(i - 1, n - j - 1) * (m - 1) ** (n - j) if i + j >= n else 0
            for j in range(1, n)
        )
        for i in range(1, n)
    )
    return QuotientMatrix(QuotientKind.Q, m, n, entries)


@dataclass(frozen=True)
class WalkMatrix:
    """Columns e, Be, ..., B**(n-2) e of a quotient matrix B, row-major."""

    kind: QuotientKind
    m: int
    n: int
    entries: IntMatrix

    @property
    def order(self) -> int:
        return self.n - 1

    def column(self, k: int) -> tuple[int, ...]:
        """Column k = B**k e, for k in 0..n-2."""
        return tuple(row[k] for row in self.entries)


def walk_matrix_iterative(quotient: QuotientMatrix) -> WalkMatrix:
    """Walk matrix by repeated exact matrix-vector products."""
    r = quotient.order
    cols = [[1] * r]
    for _ in range(r - 1):
        prev = cols[-1]
        cols.append(
            [sum(quotient.entries[i][j] * prev[j] for j in range(r)) for i in range(r)]
        )
    entries = tuple(tuple(cols[k][i] for k in range(r)) for i in range(r))
    return WalkMatrix(quotient.kind, quotient.m, quotient.n, entries)


def h_coefficients(m: int, n: int) -> tuple[int, ...]:
    """Correction coefficients h_0..h_{n-3} of the P-kind closed form.

    h_0 = 1 and h_j = F[j+1]**n - sum(h_r * F[j-r]**n for r < j).  The
    result always contains h_0, so its length is max(1, n-2).
    """
    _check_order(m, n)
    f = FibSequence(m)
    hs = [1]
    for j in range(1, max(1, n - 2)):
        hs.append(
            f.value(j + 1) ** n - sum(hs[r] * f.value(j - r) ** n for r in range(j))
        )
    return tuple(hs)


def walk_matrix_closed_p(m: int, n: int) -> WalkMatrix:
    """P-kind walk matrix from the closed form

        entry(i, k) = F[k]**n * g[k]**i - sum_j h_j * F[k-j-1]**n * g[k-j-1]**i

    with g[k] = F[k+1]/F[k], evaluated in exact rational arithmetic.
    Every entry must reduce to an integer; a surviving denominator raises
    NonIntegerEntryError.
    """
    _check_order(m, n)
    f = FibSequence(m)
    hs = h_coefficients(m, n)

    def power_term(idx: int, i: int) -> Fraction:
        return Fraction(f.value(idx)) ** n * f.ratio(idx) ** i

    rows = []
    for i in range(1, n):
        row = []
        for k in range(n - 1):
            value = power_term(k, i)
            for j in range(k):
                value -= hs[j] * power_term(k - j - 1, i)
            if value.denominator != 1:
                raise NonIntegerEntryError(
                    f"closed-form entry (i={i}, k={k}) for m={m}, n={n} "
                    f"reduced to {value}"
                )
            row.append(int(value))
        rows.append(tuple(row))
    return WalkMatrix(QuotientKind.P, m, n, tuple(rows))


def walk_matrix_closed_q(m: int, n: int) -> WalkMatrix:
    """Q-kind walk matrix from the closed form, in its integer shape:

        entry(i, k) = (m-1)**k * F[k]**(n-i-1) * F[k+1]**(i-1)
    """
    _check_order(m, n)
    f = FibSequence(m)
    entries = tuple(
        tuple(
            (m - 1) ** k * f.value(k) ** (n - i - 1) * f.value(k + 1) ** (i - 1)
            for k in range(n - 1)
        )
        for i in range(1, n)
    )
    return WalkMatrix(QuotientKind.Q, m, n, entries)


@dataclass(frozen=True)
class WalkFactorization:
    """Exact factorization W = V * diag(D) * U of a walk matrix.

    V is the Vandermonde matrix of the ratio nodes g[0]..g[n-2] (row i
    holds the i-th powers), D scales each column, and U is upper
    unitriangular (the identity for the Q kind).
    """

    kind: QuotientKind
    m: int
    n: int
    ratios: tuple[Fraction, ...]
    vandermonde: tuple[tuple[Fraction, ...], ...]
    diagonal: tuple[Fraction, ...]
    unitriangular: IntMatrix

    def product(self) -> tuple[tuple[Fraction, ...], ...]:
        """V * diag(D) * U, exactly."""
        r = self.n - 1
        scaled = [
            [self.vandermonde[i][k] * self.diagonal[k] for k in range(r)]
            for i in range(r)
        ]
        return tuple(
            tuple(
                sum(
                    (scaled[i][k] * self.unitriangular[k][j] for k in range(r)),
                    Fraction(0),
                )
                for j in range(r)
            )
            for i in range(r)
        )

    def vandermonde_det(self) -> Fraction:
        """Product of pairwise node differences g[l] - g[r] over l > r."""
        det = Fraction(1)
        for r in range(self.n - 1):
            for l in range(r + 1, self.n - 1):
                det *= self.ratios[l] - self.ratios[r]
        return det

    def diagonal_det(self) -> Fraction:
        det = Fraction(1)
        for x in self.diagonal:
            det *= x
        return det


def factorize_walk(m: int, n: int, kind: QuotientKind) -> WalkFactorization:
    """Factor the walk matrix of the chosen kind as V * diag(D) * U.

    For the P kind, D[k] = F[k]**n * g[k] and column k+1 of U is
    (-h_{k-1}, ..., -h_0, 1, 0, ...); for the Q kind,
    D[k] = (m-1)**k * F[k]**(n-2) and U is the identity.
    """
    _check_order(m, n)
    if not isinstance(kind, QuotientKind):
        raise ValueError(f"kind must be a QuotientKind, got {kind!r}")
    f = FibSequence(m)
    r = n - 1
    ratios = tuple(f.ratio(k) for k in range(r))
    vandermonde = tuple(tuple(g**i for g in ratios) for i in range(r))
    if kind is QuotientKind.P:
        diagonal = tuple(Fraction(f.value(k)) ** n * ratios[k] for k in range(r))
        hs = h_coefficients(m, n)
        unitriangular = tuple(
            tuple(
                1 if i == j else (-hs[j - 1 - i] if i < j else 0) for j in range(r)
            )
            for i in range(r)
        )
    else:
        diagonal = tuple(
            Fraction((m - 1) ** k * f.value(k) ** (n - 2)) for k in range(r)
        )
        unitriangular = tuple(
            tuple(1 if i == j else 0 for j in range(r)) for i in range(r)
        )
    return WalkFactorization(
        kind, m, n, ratios, vandermonde, diagonal, unitriangular
    )


def det_walk_formula(m: int, n: int, kind: QuotientKind) -> Fraction:
    """Walk-matrix determinant from the factorization:

        det = prod_{r<l} (g[l] - g[r]) * prod_k D[k]

    The result is a nonzero rational that always reduces to an integer.
    """
    fact = factorize_walk(m, n, kind)
    return fact.vandermonde_det() * fact.diagonal_det()


# -- exact linear algebra -------------------------------------------------


def _extract_rows(matrix: object) -> list[list[Fraction | int]]:
    if hasattr(matrix, "entries"):
        matrix = matrix.entries  # QuotientMatrix / WalkMatrix convenience
    try:
        import numpy as np

        if isinstance(matrix, np.ndarray):
            matrix = matrix.tolist()
    except ImportError:  # pragma: no cover
        pass
    rows = [list(row) for row in matrix]
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("matrix must be non-empty and rectangular")
    out: list[list[Fraction | int]] = []
    for row in rows:
        conv: list[Fraction | int] = []
        for x in row:
            if isinstance(x, Fraction):
                conv.append(x)
            elif isinstance(x, int) and not isinstance(x, bool):
                conv.append(x)
            elif hasattr(x, "item") and isinstance(x.item(), int):
                conv.append(x.item())
            else:
                raise ValueError(f"matrix entries must be exact, got {x!r}")
        out.append(conv)
    return out


def _integer_rows(rows: list[list[Fraction | int]]) -> list[list[int]]:
    """Clear denominators row by row (rank is unchanged by row scaling)."""
    cleared = []
    for row in rows:
        scale = 1
        for x in row:
            if isinstance(x, Fraction):
                scale = scale * x.denominator // math.gcd(scale, x.denominator)
        cleared.append([int(x * scale) for x in row])
    return cleared


def _bareiss(rows: list[list[int]]) -> tuple[int, int, bool]:
    """Fraction-free elimination in place.

    Returns (rank, signed last pivot, skipped) where `skipped` records
    whether any candidate column held no pivot.  Pivoting is the first
    nonzero entry in column order, so the procedure is deterministic.
    """
    n_rows = len(rows)
    n_cols = len(rows[0])
    prev = 1
    sign = 1
    pivot_row = 0
    last_pivot = 1
    skipped = False
    for col in range(n_cols):
        if pivot_row >= n_rows:
            break
        pivot = next(
            (r for r in range(pivot_row, n_rows) if rows[r][col] != 0), None
        )
        if pivot is None:
            skipped = True
            continue
        if pivot != pivot_row:
            rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
            sign = -sign
        p = rows[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            factor = rows[r][col]
            if factor == 0 and p == prev:
                # row already reduced against this pivot scale
                continue
            row_r = rows[r]
            row_p = rows[pivot_row]
            for c in range(col + 1, n_cols):
                num = p * row_r[c] - factor * row_p[c]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                row_r[c] = q
            row_r[col] = 0
        prev = p
        last_pivot = p
        pivot_row += 1
    return pivot_row, sign * last_pivot, skipped


def exact_rank(matrix: object) -> int:
    """Rank over the rationals via fraction-free elimination.

    Accepts any rectangular matrix of integers or fractions (or an
    object carrying `.entries`).
    """
    rows = _integer_rows(_extract_rows(matrix))
    rank, _, _ = _bareiss(rows)
    return rank


def exact_det(matrix: object) -> Fraction | int:
    """Exact determinant of a square matrix of integers or fractions."""
    rows = _extract_rows(matrix)
    if len(rows) != len(rows[0]):
        raise ValueError("determinant requires a square matrix")
    scale = Fraction(1)
    cleared = []
    for row in rows:
        lcm = 1
        for x in row:
            if isinstance(x, Fraction):
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scale *= lcm
        cleared.append([int(x * lcm) for x in row])
    rank, signed_pivot, _ = _bareiss(cleared)
    if rank < len(cleared):
        return 0
    det = Fraction(signed_pivot) / scale
    return int(det) if det.denominator == 1 else det


# -- serialization ----------------------------------------------------------


def matrix_to_csv(matrix: object) -> str:
    """Comma-separated decimal integers, one row per line."""
    rows = _extract_rows(matrix)
    return "\n".join(",".join(str(x) for x in row) for row in rows) + "\n"


def matrix_json_entries(matrix: object) -> list[list[str]]:
    """Array-of-arrays of decimal strings (safe for arbitrary precision)."""
    rows = _extract_rows(matrix)
    return [[str(x) for x in row] for row in rows]


def matrix_to_json(matrix: object) -> str:
    return json.dumps(matrix_json_entries(matrix))


def json_safe_int(value: int) -> int | str:
    """Ints beyond the exact-float range serialize as decimal strings."""
    return value if abs(value) <= 2**53 else str(value)
