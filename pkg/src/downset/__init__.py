"""Unique decoding of downset codes over finite grids."""

from .codes import (
    CodeSpec,
    Downset,
    deg_m_and_slices,
    downset_from_generators,
    encode,
    is_codeword,
    is_downset,
    min_distance,
    min_distance_witness,
    min_weight_witness,
    nabla_size,
)
from .decoder import unique_decode, weighted_downset_decode
from .field import FieldElement, PrimeField, field_arith, field_inverse
from .grid import Grid
from .poly import (
    MultivariatePoly,
    UnivariatePoly,
    eval_multivariate,
    evaluate_on_grid,
    grid_interpolate,
    interpolate_univariate,
    leading_monomial,
    reduce_individual_degrees,
)
from .rs import errors_erasures_decode, weighted_rs_decode
from .weighted import WeightedWord, weighted_distance

__all__ = [
    "CodeSpec", "Downset", "FieldElement", "Grid", "MultivariatePoly", "PrimeField",
    "UnivariatePoly", "WeightedWord", "deg_m_and_slices", "downset_from_generators",
    "encode", "errors_erasures_decode", "eval_multivariate", "evaluate_on_grid",
    "field_arith", "field_inverse", "grid_interpolate", "interpolate_univariate",
    "is_codeword", "is_downset", "leading_monomial", "min_distance", "min_distance_witness",
    "min_weight_witness", "nabla_size", "reduce_individual_degrees", "unique_decode",
    "weighted_distance", "weighted_downset_decode", "weighted_rs_decode",
]
