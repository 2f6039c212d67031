"""Slow exact reference algorithms used to validate the fast ones.

Everything here favors obviousness over speed: fraction-free elimination
for determinants, trace iteration for dense characteristic polynomials,
exact rational interpolation, and the derangement recurrence.  Dense
matrices are capped in size because they exist only to cross-check the
recurrence-based algorithms, which never materialize a matrix.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .polyarith import IntPolynomial

if TYPE_CHECKING:
    from .charpoly import WeightedThresholdMatrix
    from .graph import ThresholdGraph

DEFAULT_ORACLE_CAP = 2048


def oracle_cap() -> int:
    """Dimension cap for dense-matrix oracles; THRESH_ORACLE_CAP overrides."""
    raw = os.environ.get("THRESH_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ORACLE_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"THRESH_ORACLE_CAP must be a positive integer, got {raw!r}")
    return cap


@dataclass(frozen=True)
class DenseIntMatrix:
    """Explicit square integer matrix, row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows:
            raise ValueError("matrix must have at least one row")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "DenseIntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def dense_from_weighted(m: "WeightedThresholdMatrix") -> DenseIntMatrix:
    """Expand the implied matrix: b_min(i,j) off the diagonal, d_i on it."""
    n, b, d = m.n, m.b, m.d
    return DenseIntMatrix(
        tuple(
            tuple(d[i] if i == j else b[min(i, j)] for j in range(n))
            for i in range(n)
        )
    )


def bareiss_det(m: DenseIntMatrix) -> int:
    """Exact determinant by fraction-free elimination.

    Intermediate entries are minors of the input, so every division below
    is exact over the integers.
    """
    n = m.n
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _mat_mul(a: list, b: list) -> list:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def dense_charpoly(m: DenseIntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(λI − m) by exact trace iteration.

    O(n^4) integer operations; every division by the step index is exact
    and asserted.  Fine at oracle sizes, unusable beyond them.
    """
    n = m.n
    cap = oracle_cap()
    if n > cap:
        raise ValueError(
            f"dense characteristic polynomial refused for n={n} > cap {cap} "
            "(set THRESH_ORACLE_CAP to raise it)"
        )
    a = [list(row) for row in m.entries]
    work = [[0] * n for _ in range(n)]  # M_0 = 0
    coeffs = [1]  # highest degree first
    for k in range(1, n + 1):
        work = _mat_mul(a, work)
        last = coeffs[-1]
        for i in range(n):
            work[i][i] += last
        trace = sum(
            sum(x * y for x, y in zip(row, col))
            for row, col in zip(a, zip(*work))
        )
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("trace iteration produced a non-integer coefficient")
        coeffs.append(q)
    return IntPolynomial(reversed(coeffs))


def charpoly_interpolation(g: "ThresholdGraph") -> IntPolynomial:
    """Characteristic polynomial by evaluation at 0..n and exact interpolation.

    Uses the linear-time point evaluator at n+1 consecutive integers and
    reconstructs the unique degree-n interpolant with Newton divided
    differences over rationals.  The result must come out integral; a
    fractional coefficient would mean an arithmetic bug, so it raises.
    """
    from .charpoly import charpoly_eval

    n = g.n
    coef = [Fraction(charpoly_eval(g, x)) for x in range(n + 1)]
    # divided differences over the consecutive nodes 0..n: the spacing
    # x_i - x_{i-j} is just j
    for j in range(1, n + 1):
        for i in range(n, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / j
    # Horner expansion of the Newton form, highest node first
    poly = [coef[n]]
    for i in range(n - 1, -1, -1):
        # poly *= (λ - i), then += coef[i]
        shifted = [Fraction(0)] + poly
        for k in range(len(poly)):
            shifted[k] -= i * poly[k]
        shifted[0] += coef[i]
        poly = shifted
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError(f"interpolation produced non-integer coefficient {c}")
        out.append(int(c))
    return IntPolynomial(out)


def derangements(k: int) -> int:
    """Number of fixed-point-free permutations of k elements."""
    if k < 0:
        raise ValueError("derangements defined for nonnegative k")
    prev, cur = 1, 0  # D(0), D(1)
    if k == 0:
        return prev
    for i in range(2, k + 1):
        prev, cur = cur, (i - 1) * (cur + prev)
    return cur
