"""Determinants and characteristic polynomials of threshold-structured matrices.

A weighted threshold graph matrix is symmetric with entry b_min(i,j) off
the diagonal and d_i on it; the adjacency matrix of a threshold graph is
the all-zero-diagonal 0/1 case.  Its determinant D_n satisfies a
two-term recurrence

    D_0 = 1,  D_1 = d_1,
    D_n = (d_n + d_{n-1} - 2 b_{n-1}) D_{n-1} - (b_{n-1} - d_{n-1})^2 D_{n-2}

which this module exploits three ways: directly over integers for an
O(n) determinant, over polynomials for an O(n^2) characteristic
polynomial, and in 2x2-matrix form evaluated by a balanced product tree
for the quasilinear characteristic polynomial (in coefficient
operations; coefficient growth makes the bit cost higher).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .polyarith import (
    IDENTITY2,
    LAMBDA,
    ONE,
    ZERO,
    IntPolynomial,
    PolyMatrix2,
    apply_to_vector,
    matmul2,
    poly_mul,
    poly_sub,
)

if TYPE_CHECKING:
    from .graph import ThresholdGraph

DEFAULT_AUTO_CROSSOVER = 512


@dataclass(frozen=True)
class WeightedThresholdMatrix:
    """n-dimensional matrix given by n-1 off-diagonal values b and diagonal d."""

    n: int
    b: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(v) for v in self.b))
        object.__setattr__(self, "d", tuple(int(v) for v in self.d))
        if self.n < 1:
            raise ValueError(f"dimension must be at least 1, got {self.n}")
        if len(self.b) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} b-values, got {len(self.b)}")
        if len(self.d) != self.n:
            raise ValueError(f"expected {self.n} diagonal values, got {len(self.d)}")


def det_weighted(m: WeightedThresholdMatrix) -> int:
    """Exact determinant via the two-term recurrence; O(n) integer operations."""
    d, b = m.d, m.b
    prev, cur = 1, d[0]  # D_0, D_1
    for k in range(2, m.n + 1):
        dk, dk1, bk1 = d[k - 1], d[k - 2], b[k - 2]
        cur, prev = (dk + dk1 - 2 * bk1) * cur - (bk1 - dk1) ** 2 * prev, cur
    return cur


def charpoly_eval(g: "ThresholdGraph", x: int) -> int:
    """Value of the characteristic polynomial at x, in O(n) integer operations.

    det(xI - A) is the determinant of the weighted matrix with
    off-diagonal values -b_i and constant diagonal x.
    """
    bits = g.bits
    return det_weighted(
        WeightedThresholdMatrix(g.n, tuple(-b for b in bits), (x,) * g.n)
    )


def charpoly_quadratic(g: "ThresholdGraph") -> IntPolynomial:
    """Characteristic polynomial by running the recurrence over polynomials.

    Each step multiplies the previous results by fixed short polynomials,
    so the total is O(n^2) coefficient operations.  Serves as the
    production path below the auto crossover and as a cross-check for the
    balanced route.
    """
    prev, cur = ONE, LAMBDA  # D_0, D_1
    for b in g.bits:
        # step polynomials for det(λI − A): 2λ + 2b and (λ + b)^2
        lin = IntPolynomial((2 * b, 2))
        sq = IntPolynomial((b * b, 2 * b, 1))
        cur, prev = poly_sub(poly_mul(lin, cur), poly_mul(sq, prev)), cur
    return cur


def _step_factor(b: int, d_cur: int, d_prev: int) -> PolyMatrix2:
    # One step of the recurrence for det(λI − M), i.e. the recurrence run
    # with off-diagonal values −b and diagonal values λ − d.  Substituting
    # those into the step matrix gives
    #     [ 2λ + 2b − d_cur − d_prev    −(λ + b − d_prev)^2 ]
    #     [ 1                            0                  ]
    # mapping (D_{k-1}, D_{k-2}) to (D_k, D_{k-1}).
    c = b - d_prev
    return PolyMatrix2(
        IntPolynomial((2 * b - d_cur - d_prev, 2)),
        IntPolynomial((-c * c, -2 * c, -1)),
        ONE,
        ZERO,
    )


def build_factor(bit: int) -> PolyMatrix2:
    """The 2x2 recurrence factor [[2(λ−bit), −(bit−λ)²], [1, 0]].

    Chains of these factors applied to (λ, 1) produce the determinants of
    the matrices with off-diagonal values `bit` and diagonal λ.  The
    characteristic-polynomial routes below use the sign-flipped value
    instead, since det(λI − A) negates the off-diagonal entries.
    """
    if bit not in (0, 1):
        raise ValueError(f"factor bit must be 0 or 1, got {bit!r}")
    return _step_factor(-bit, 0, 0)


def _product_tree(factors: list) -> PolyMatrix2:
    # Balanced evaluation of an ordered matrix product: pad with identity
    # matrices (on the left end, where they multiply away harmlessly) to a
    # power of two, then halve the list by adjacent pairwise products.
    # Factors do not commute, so each round keeps left-to-right order.
    if not factors:
        return IDENTITY2
    size = 1 << (len(factors) - 1).bit_length()
    factors = [IDENTITY2] * (size - len(factors)) + factors
    while len(factors) > 1:
        factors = [
            matmul2(factors[i], factors[i + 1]) for i in range(0, len(factors), 2)
        ]
    return factors[0]


def charpoly_balanced(g: "ThresholdGraph") -> IntPolynomial:
    """Characteristic polynomial via the balanced product of step factors.

    Builds the n-1 step factors (last step leftmost), reduces them in
    log-many rounds of pairwise products, applies the result to the base
    vector (λ, 1) = (D_1, D_0), and returns the top component D_n.
    Agrees with charpoly_quadratic coefficient for coefficient.
    """
    factors = [_step_factor(b, 0, 0) for b in reversed(g.bits)]
    total = _product_tree(factors)
    top, _ = apply_to_vector(total, (LAMBDA, ONE))
    return top


def charpoly_weighted(m: WeightedThresholdMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(λI − M) of a weighted matrix.

    Same balanced product as charpoly_balanced, with the general step
    factors carrying the diagonal values; the base vector becomes
    (λ − d_1, 1).
    """
    b, d = m.b, m.d
    factors = [
        _step_factor(b[k - 2], d[k - 1], d[k - 2]) for k in range(m.n, 1, -1)
    ]
    total = _product_tree(factors)
    top, _ = apply_to_vector(total, (IntPolynomial((-d[0], 1)), ONE))
    return top


def auto_crossover() -> int:
    """Vertex count where auto switches algorithms; THRESH_AUTO_CROSSOVER overrides."""
    raw = os.environ.get("THRESH_AUTO_CROSSOVER")
    if raw is None:
        return DEFAULT_AUTO_CROSSOVER
    crossover = int(raw)
    if crossover < 1:
        raise ValueError(
            f"THRESH_AUTO_CROSSOVER must be a positive integer, got {raw!r}"
        )
    return crossover


def charpoly_auto(g: "ThresholdGraph", crossover: int | None = None) -> IntPolynomial:
    """Quadratic recurrence below the crossover size, balanced product above.

    The quadratic route wins below a few hundred vertices because its
    steps are short-polynomial multiplies with no packing overhead.
    """
    limit = auto_crossover() if crossover is None else crossover
    if g.n < limit:
        return charpoly_quadratic(g)
    return charpoly_balanced(g)
