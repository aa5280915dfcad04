"""Linear codes, projective-space enumeration and the code file format."""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterator, Sequence

from bsymbol import limits
from bsymbol.gf import Field
from bsymbol.linalg import (
    FqMatrix,
    ParseError,
    Subspace,
    Vector,
    nullspace,
    parse_matrix,
    rref,
    support_mask,
    vec_combination,
)


class ZeroCodeError(ValueError):
    """A construction produced the zero code, which has no generator matrix."""


def gaussian_binomial(q: int, r: int, k: int) -> int:
    """Number of r-dimensional subspaces of a k-dimensional space over GF(q)."""
    if r < 0 or k < 0:
        raise ValueError("dimensions must be non-negative")
    if r == 0:
        return 1
    if r > k:
        return 0
    num = den = 1
    for i in range(r):
        num *= q**k - q**i
        den *= q**r - q**i
    return num // den


class LinearCode:
    """An [n, k] linear code given by a full-row-rank generator matrix.

    A generator with independent rows is kept as given, so the row order the
    caller chose (which isometry images refer to) survives.  Dependent rows
    are replaced by the nonzero rows of the RREF.
    """

    def __init__(self, G: FqMatrix) -> None:
        red, rk, _ = rref(G)
        if rk == 0:
            raise ZeroCodeError("zero code")
        if rk < G.nrows:
            G = FqMatrix(G.field, rk, G.ncols, red.data[:rk])
        self.G = G
        self.field: Field = G.field
        self.n = G.ncols
        self.k = rk
        self._canonical = red.data[:rk]

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[int]]) -> LinearCode:
        return cls(FqMatrix.from_rows(field, rows))

    @classmethod
    def from_parity(cls, H: FqMatrix) -> LinearCode:
        kernel = nullspace(H)
        if kernel.dim == 0:
            raise ZeroCodeError("zero code")
        return cls(kernel.basis)

    @functools.cached_property
    def H(self) -> FqMatrix:
        """Parity-check matrix: canonical basis of the dual, ``(n-k) x n``."""
        return nullspace(self.G).basis

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def canonical_generator(self) -> FqMatrix:
        return FqMatrix(self.field, self.k, self.n, self._canonical)

    def as_subspace(self) -> Subspace:
        return Subspace(self.field, self.n, self.canonical_generator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field is other.field and self.n == other.n and self._canonical == other._canonical

    def __hash__(self) -> int:
        return hash((self.field.q, self.n, self._canonical))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    def encode(self, message: Sequence[int]) -> Vector:
        return vec_combination(self.field, message, self.G.data, self.n)

    def contains(self, v: Sequence[int]) -> bool:
        return self.as_subspace().contains_vector(v)

    def subspace_from_messages(self, message_space: Subspace) -> Subspace:
        """The subcode ``D = D~ G`` for a subspace ``D~`` of ``F_q^k``."""
        return message_space.image(self.G)

    @functools.cached_property
    def codeword_masks(self) -> dict[int, int]:
        """Support bitmask of every codeword -> index of its first codeword in enumeration order."""
        first: dict[int, int] = {}
        for idx, c in enumerate(enumerate_codewords(self)):
            first.setdefault(support_mask(c), idx)
        return first

    def codeword(self, index: int) -> Vector:
        """The ``index``-th codeword of :func:`enumerate_codewords`."""
        q = self.field.q
        msg = []
        for _ in range(self.k):
            index, d = divmod(index, q)
            msg.append(d)
        return self.encode(msg[::-1])


def code_from_generator(G: FqMatrix) -> LinearCode:
    return LinearCode(G)


def dual(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise ZeroCodeError("zero dual")
    return LinearCode(C.H)


def enumerate_codewords(C: LinearCode) -> Iterator[Vector]:
    """All ``q**k`` codewords, messages in lexicographic order (zero first)."""
    limits.check(f"codewords of {C!r}", C.q**C.k, "codewords")
    field, n = C.field, C.n
    add, mul = field.add, field.mul
    # build from the last generator row outward so the first message digit varies slowest
    words: list[Vector] = [(0,) * n]
    for g in reversed(C.G.data):
        multiples = [tuple(mul(a, x) for x in g) for a in range(field.q)]
        words = [tuple(map(add, m, w)) for m in multiples for w in words]
    return iter(words)


# -- projective spaces ------------------------------------------------------


def _rref_matrices(field: Field, ambient: int, r: int) -> list[tuple[Vector, ...]]:
    """All rank-r RREF matrices with ``ambient`` columns, sorted lexicographically."""
    out = []
    q = field.q
    for pivots in itertools.combinations(range(ambient), r):
        pivset = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, ambient) if j not in pivset]
        for vals in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * ambient for _ in range(r)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            out.append(tuple(tuple(row) for row in rows))
    out.sort()
    return out


@functools.cache
def _pg(field: Field, ambient: int, r: int) -> tuple[Subspace, ...]:
    if 2 * r > ambient:
        return tuple(V.orthogonal_complement() for V in _pg(field, ambient, ambient - r))
    return tuple(
        Subspace(field, ambient, FqMatrix(field, r, ambient, data)) for data in _rref_matrices(field, ambient, r)
    )


def enumerate_pg(field: Field, ambient: int, r: int) -> list[Subspace]:
    """All r-dimensional subspaces of ``F_q^ambient`` in canonical order.

    For ``r <= ambient/2`` the order is lexicographic on RREF bases; above that
    the i-th subspace is the orthogonal complement of the i-th subspace of
    dimension ``ambient - r``, so ``V_i^r = (V_i^{ambient-r})^perp``.
    """
    if not 0 <= r <= ambient:
        raise ValueError(f"dimension {r} outside 0..{ambient}")
    limits.check(f"PG^{r}(F_{field.q}^{ambient})", gaussian_binomial(field.q, r, ambient), "subspaces")
    return list(_pg(field, ambient, r))


def projective_points(field: Field, k: int) -> list[Vector]:
    """Representatives with first nonzero entry 1, in lexicographic order."""
    return [V.rows[0] for V in enumerate_pg(field, k, 1)]


# -- code file format -------------------------------------------------------


def parse_code(text: str) -> LinearCode:
    """Parse a code file: a ``generator`` or ``parity`` line then a matrix."""
    lines = text.splitlines()
    idx = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if idx is None:
        raise ParseError("empty code file", 1)
    kind = lines[idx].strip()
    if kind not in ("generator", "parity"):
        raise ParseError(f"expected 'generator' or 'parity', got {kind!r}", idx + 1)
    M = parse_matrix(lines[idx + 1 :], first_line=idx + 2)
    try:
        return LinearCode(M) if kind == "generator" else LinearCode.from_parity(M)
    except ZeroCodeError as exc:
        raise ParseError(str(exc), idx + 2) from None


def format_code(C: LinearCode, kind: str = "generator", matrix: FqMatrix | None = None) -> str:
    M = matrix if matrix is not None else (C.G if kind == "generator" else C.H)
    return f"{kind}\n{M.to_text()}"
