"""Three independent b-MDS deciders plus the structural corollaries."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass

from bsymbol import limits
from bsymbol.bweight import backward_window_mask, forward_window_mask
from bsymbol.codes import LinearCode, gaussian_binomial
from bsymbol.linalg import FqMatrix, Vector, rank_of


@dataclass(frozen=True)
class MdsVerdict:
    """``witness`` is a codeword (direct) or an index set (generator, parity) when ``is_mds`` is false."""

    is_mds: bool
    criterion: str
    b: int
    witness: Vector | tuple[int, ...] | None = None

    def __str__(self) -> str:
        line = f"MDS b={self.b}: {'yes' if self.is_mds else 'no'}"
        if self.witness is not None:
            line += " [witness=" + ",".join(map(str, self.witness)) + "]"
        return line


def singleton_bound(n: int, k: int, b: int) -> int:
    return min(n + b - k, n)


def _check_b(C: LinearCode, b: int) -> None:
    if not 1 <= b <= C.n:
        raise ValueError(f"b={b} outside 1..{C.n}")


def _popcount(m: int) -> int:
    return bin(m).count("1")


def is_b_mds_direct(C: LinearCode, b: int) -> MdsVerdict:
    """Minimum b-weight over all nonzero codewords against the Singleton-type bound."""
    _check_b(C, b)
    n = C.n
    bound = singleton_bound(n, C.k, b)
    worst = None
    for mask, idx in C.codeword_masks.items():
        if mask and _popcount(backward_window_mask(mask, n, b)) < bound:
            if worst is None or idx < worst:
                worst = idx
    if worst is None:
        return MdsVerdict(True, "direct", b)
    return MdsVerdict(False, "direct", b, C.codeword(worst))


def _subsets(n: int, size: int, what: str) -> Iterator[tuple[int, ...]]:
    limits.check(what, math.comb(n, size), "subsets")
    return itertools.combinations(range(n), size)


def is_b_mds_generator(C: LinearCode, b: int) -> MdsVerdict:
    """Every forward window expansion ``J[b]`` with ``|J| = max(k - b, 0) + 1`` has full column rank k."""
    _check_b(C, b)
    n, k = C.n, C.k
    cols = C.G.columns()
    size = max(k - b, 0) + 1
    for J in _subsets(n, size, f"index sets of size {size} in Z_{n}"):
        m = 0
        for j in J:
            m |= 1 << j
        window = forward_window_mask(m, n, b)
        if rank_of(C.field, (cols[j] for j in range(n) if window >> j & 1), k) < k:
            return MdsVerdict(False, "generator", b, J)
    return MdsVerdict(True, "generator", b)


def is_b_mds_parity(C: LinearCode, b: int) -> MdsVerdict:
    """Columns of ``H`` indexed by ``J`` are independent whenever ``|J[-b]| < min(n - k + b, n)``.

    Since ``|J| <= |J[-b]|`` only sizes below the bound are scanned, smallest first.
    """
    _check_b(C, b)
    n, k = C.n, C.k
    if k == n:
        return MdsVerdict(True, "parity", b)
    H: FqMatrix = C.H
    cols = H.columns()
    limit = singleton_bound(n, k, b) - 1
    limits.check(f"index sets of Z_{n}", sum(math.comb(n, s) for s in range(1, limit + 1)), "subsets")
    for size in range(1, limit + 1):
        for J in itertools.combinations(range(n), size):
            m = 0
            for j in J:
                m |= 1 << j
            if _popcount(backward_window_mask(m, n, b)) > limit:
                continue
            if rank_of(C.field, (cols[j] for j in J), n - k) < size:
                return MdsVerdict(False, "parity", b, J)
    return MdsVerdict(True, "parity", b)


CRITERIA = {"direct": is_b_mds_direct, "generator": is_b_mds_generator, "parity": is_b_mds_parity}


def is_b_mds(C: LinearCode, b: int, criterion: str = "direct") -> MdsVerdict:
    try:
        fn = CRITERIA[criterion]
    except KeyError:
        raise ValueError(f"unknown criterion {criterion!r}") from None
    return fn(C, b)


def mds_length_bound(C: LinearCode, b: int) -> bool:
    """Whether ``n <= n_{1,k}``; a b-MDS code with ``b < k`` must satisfy it."""
    if not 1 <= b <= C.k - 1:
        raise ValueError(f"length bound needs 1 <= b <= k-1, got b={b}, k={C.k}")
    return C.n <= gaussian_binomial(C.q, 1, C.k)


def mds_ladder(C: LinearCode) -> int:
    """Smallest b for which ``C`` is b-MDS (b = n always qualifies)."""
    for b in range(1, C.n + 1):
        if is_b_mds_direct(C, b).is_mds:
            return b
    raise AssertionError("no b-MDS level found, but every code is n-MDS")


def repeated_block_code(block: FqMatrix, t: int) -> LinearCode:
    """``[block, block, ..., block]`` (t copies); b-MDS for ``b`` = block width when the block has rank k."""
    if t < 1:
        raise ValueError("t must be positive")
    rows = tuple(row * t for row in block.data)
    return LinearCode(FqMatrix(block.field, block.nrows, block.ncols * t, rows))
