"""Ordered column matrices, simplex and Hamming codes."""

from __future__ import annotations

import itertools

from bsymbol import limits
from bsymbol.codes import LinearCode, gaussian_binomial, projective_points
from bsymbol.gf import Field
from bsymbol.linalg import FqMatrix


def h_matrix(field: Field, k: int) -> FqMatrix:
    """One column per projective point of ``F_q^k``, normalized and in increasing order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    limits.check(f"points of PG(F_{field.q}^{k})", gaussian_binomial(field.q, 1, k), "subspaces")
    cols = projective_points(field, k)
    return FqMatrix(field, k, len(cols), tuple(zip(*cols)))


def f_matrix(field: Field, k: int) -> FqMatrix:
    """Every vector of ``F_q^k`` as a column, in lexicographic order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    limits.check(f"vectors of F_{field.q}^{k}", field.q**k, "codewords")
    cols = list(itertools.product(range(field.q), repeat=k))
    return FqMatrix(field, k, len(cols), tuple(zip(*cols)))


def simplex_code(field: Field, k: int) -> LinearCode:
    return LinearCode(h_matrix(field, k))


def hamming_code(field: Field, k: int) -> LinearCode:
    return LinearCode.from_parity(h_matrix(field, k))


def simplex_d(q: int, k: int, i: int, j: int) -> int:
    """Closed form of ``d_i^j`` for the simplex code of dimension ``k`` over GF(q)."""
    n = gaussian_binomial(q, 1, k)
    if not 1 <= j <= k or not 1 <= i <= n:
        raise ValueError(f"(i, j)=({i}, {j}) outside 1..{n} x 1..{k}")
    return min((q**k - q ** (k - j)) // (q - 1) + i - 1, n)
