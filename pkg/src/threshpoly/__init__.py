"""Exact determinants and characteristic polynomials of threshold graphs."""

from .polyarith import (
    DEFAULT_KRONECKER_CUTOFF,
    IDENTITY2,
    LAMBDA,
    NEG_INF,
    ONE,
    ZERO,
    IntPolynomial,
    PolyMatrix2,
    apply_to_vector,
    bigint_backend,
    format_poly,
    from_decimal_strings,
    matmul2,
    max_coeff_bits,
    poly_add,
    poly_eval,
    poly_mul,
    poly_sub,
    set_bigint_backend,
    to_decimal_strings,
)
from .oracle import (
    DenseIntMatrix,
    bareiss_det,
    charpoly_interpolation,
    dense_charpoly,
    dense_from_weighted,
    derangements,
    oracle_cap,
)
from .graph import (
    CreationSequence,
    ThresholdGraph,
    edge_count,
    edge_query,
    parse_sequence,
    to_dense_adjacency,
)
from .charpoly import (
    DEFAULT_AUTO_CROSSOVER,
    WeightedThresholdMatrix,
    auto_crossover,
    build_factor,
    charpoly_auto,
    charpoly_balanced,
    charpoly_eval,
    charpoly_quadratic,
    charpoly_weighted,
    det_weighted,
)

__version__ = "0.1.0"

__all__ = [
    "CreationSequence",
    "DEFAULT_AUTO_CROSSOVER",
    "DEFAULT_KRONECKER_CUTOFF",
    "DenseIntMatrix",
    "IDENTITY2",
    "IntPolynomial",
    "LAMBDA",
    "NEG_INF",
    "ONE",
    "PolyMatrix2",
    "ThresholdGraph",
    "WeightedThresholdMatrix",
    "ZERO",
    "apply_to_vector",
    "auto_crossover",
    "bareiss_det",
    "bigint_backend",
    "build_factor",
    "charpoly_auto",
    "charpoly_balanced",
    "charpoly_eval",
    "charpoly_interpolation",
    "charpoly_quadratic",
    "charpoly_weighted",
    "dense_charpoly",
    "dense_from_weighted",
    "derangements",
    "det_weighted",
    "edge_count",
    "edge_query",
    "format_poly",
    "from_decimal_strings",
    "matmul2",
    "max_coeff_bits",
    "oracle_cap",
    "parse_sequence",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_sub",
    "set_bigint_backend",
    "to_decimal_strings",
    "to_dense_adjacency",
]
