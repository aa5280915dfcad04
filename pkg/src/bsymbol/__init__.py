"""Exact toolkit for linear codes under the b-symbol metric."""

from bsymbol.bweight import BWeightMatrix, b_support, b_weight, b_weight_vector, d_b_r, d_matrix
from bsymbol.codes import LinearCode, dual, enumerate_codewords, enumerate_pg, gaussian_binomial
from bsymbol.families import hamming_code, simplex_code
from bsymbol.gf import Field, FieldElement, field_new, gf, trace
from bsymbol.limits import EnumerationTooLarge, Limits, use_limits
from bsymbol.linalg import FqMatrix, Subspace, nullspace, rank, rref, select_columns

__all__ = [
    "BWeightMatrix",
    "EnumerationTooLarge",
    "Field",
    "FieldElement",
    "FqMatrix",
    "Limits",
    "LinearCode",
    "Subspace",
    "b_support",
    "b_weight",
    "b_weight_vector",
    "d_b_r",
    "d_matrix",
    "dual",
    "enumerate_codewords",
    "enumerate_pg",
    "field_new",
    "gaussian_binomial",
    "gf",
    "hamming_code",
    "nullspace",
    "rank",
    "rref",
    "select_columns",
    "simplex_code",
    "trace",
    "use_limits",
]
