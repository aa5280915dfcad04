"""Dense exact linear algebra over a :class:`~bsymbol.gf.Field`.

Matrices store integer element reprs row-major.  Everything is plain
Gaussian elimination with the first nonzero pivot, so results are
deterministic and reduced row-echelon forms are canonical: two matrices
with the same row space have identical RREF.  Subspaces are represented by
their RREF basis, which makes them hashable map keys.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from bsymbol import limits
from bsymbol.gf import Field, FieldElement, FieldMismatchError

Vector = tuple[int, ...]


class ParseError(ValueError):
    """Malformed matrix or code text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int = 1) -> None:
        super().__init__(f"line {line}, column {col}: {message}" if line else message)
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class FqMatrix:
    field: Field
    nrows: int
    ncols: int
    data: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.nrows or any(len(r) != self.ncols for r in self.data):
            raise ValueError("matrix shape does not match its entries")
        q = self.field.q
        if any(not 0 <= x < q for r in self.data for x in r):
            raise ValueError(f"entry outside {self.field}")

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable[int | FieldElement]], ncols: int | None = None) -> FqMatrix:
        data = []
        for row in rows:
            vals = []
            for x in row:
                if isinstance(x, FieldElement):
                    if x.field is not field:
                        raise FieldMismatchError("field mismatch")
                    x = x.value
                vals.append(int(x))
            data.append(tuple(vals))
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(data[0])
        return cls(field, len(data), ncols, tuple(data))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> FqMatrix:
        return cls(field, nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> FqMatrix:
        return cls(field, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.data[i][j])

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self) -> FqMatrix:
        return FqMatrix(self.field, self.ncols, self.nrows, tuple(zip(*self.data)) if self.nrows else tuple(() for _ in range(self.ncols)))

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        if other.field is not self.field:
            raise FieldMismatchError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError("inner dimensions differ")
        cols = other.columns()
        return FqMatrix(
            self.field,
            self.nrows,
            other.ncols,
            tuple(tuple(dot(self.field, r, c) for c in cols) for r in self.data),
        )

    def vecmat(self, v: Sequence[int]) -> Vector:
        """Row vector times this matrix."""
        return vec_combination(self.field, v, self.data, self.ncols)

    def select_columns(self, J: Iterable[int]) -> FqMatrix:
        return select_columns(self, J)

    def stack(self, other: FqMatrix) -> FqMatrix:
        if other.field is not self.field or other.ncols != self.ncols:
            raise ValueError("cannot stack matrices of different fields or widths")
        return FqMatrix(self.field, self.nrows + other.nrows, self.ncols, self.data + other.data)

    def to_text(self) -> str:
        head = f"{self.field.p} {self.field.e} {self.nrows} {self.ncols}"
        return "\n".join([head, *(" ".join(map(str, r)) for r in self.data)]) + "\n"

    @classmethod
    def from_text(cls, text: str, first_line: int = 1) -> FqMatrix:
        return parse_matrix(text.splitlines(), first_line)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.data)


# -- vector helpers ---------------------------------------------------------


def dot(field: Field, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    add, mul = field.add, field.mul
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


def vec_combination(field: Field, coeffs: Sequence[int], rows: Sequence[Sequence[int]], width: int) -> Vector:
    out = [0] * width
    add, mul = field.add, field.mul
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    out[j] = add(out[j], mul(c, x))
    return tuple(out)


def support_mask(v: Sequence[int]) -> int:
    """Bit ``i`` set iff ``v[i] != 0``."""
    m = 0
    for i, x in enumerate(v):
        if x:
            m |= 1 << i
    return m


# -- elimination ------------------------------------------------------------


def _rref_rows(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            s = inv(lead)
            rows[r] = [mul(s, x) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            f = rows[i][c]
            if i != r and f:
                nf = neg(f)
                rows[i] = [add(x, mul(nf, y)) if y else x for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(M: FqMatrix) -> tuple[FqMatrix, int, list[int]]:
    """Reduced row-echelon form, rank and pivot columns of ``M``.

    The returned matrix has the same shape as ``M``; zero rows sit at the bottom.
    """
    rows, pivots = _rref_rows(M.field, M.data, M.ncols)
    return FqMatrix(M.field, M.nrows, M.ncols, tuple(tuple(r) for r in rows)), len(pivots), pivots


def rank(M: FqMatrix) -> int:
    return rank_of(M.field, M.data, M.ncols)


def rank_of(field: Field, vectors: Iterable[Sequence[int]], width: int) -> int:
    basis = EchelonBasis(field, width)
    for v in vectors:
        basis.add(v)
    return basis.dim


def select_columns(M: FqMatrix, J: Iterable[int]) -> FqMatrix:
    """Submatrix of the columns indexed by the set ``J``, in increasing order."""
    idx = sorted(set(J))
    if any(not 0 <= j < M.ncols for j in idx):
        raise IndexError(f"column index out of range for {M.ncols} columns")
    return FqMatrix(M.field, M.nrows, len(idx), tuple(tuple(r[j] for j in idx) for r in M.data))


def nullspace(M: FqMatrix) -> Subspace:
    """Right kernel ``{x : M x^T = 0}`` as a canonical subspace."""
    rows, pivots = _rref_rows(M.field, M.data, M.ncols)
    return Subspace.from_rows(M.field, M.ncols, _kernel_from_rref(M.field, rows, pivots, M.ncols))


def _kernel_from_rref(field: Field, rows: list[list[int]], pivots: list[int], ncols: int) -> list[Vector]:
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(rows[r][f])
        out.append(tuple(v))
    return out


class EchelonBasis:
    """Incrementally maintained echelon basis; ``add`` reports independence."""

    __slots__ = ("field", "width", "rows", "pivots")

    def __init__(self, field: Field, width: int) -> None:
        self.field = field
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> EchelonBasis:
        other = EchelonBasis(self.field, self.width)
        other.rows = list(self.rows)
        other.pivots = list(self.pivots)
        return other

    def reduce(self, v: Sequence[int]) -> list[int]:
        v = list(v)
        add, mul, neg = self.field.add, self.field.mul, self.field.neg
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if f:
                nf = neg(f)
                v = [add(x, mul(nf, y)) if y else x for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence[int]) -> bool:
        v = self.reduce(v)
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            return False
        lead = v[pc]
        if lead != 1:
            s = self.field.inv(lead)
            v = [self.field.mul(s, x) for x in v]
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))


# -- subspaces --------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``F_q^ambient_dim`` held as its canonical RREF basis."""

    field: Field
    ambient_dim: int
    basis: FqMatrix

    @classmethod
    def from_rows(cls, field: Field, ambient_dim: int, rows: Iterable[Sequence[int]]) -> Subspace:
        rows = [tuple(r) for r in rows]
        red, pivots = _rref_rows(field, rows, ambient_dim)
        data = tuple(tuple(r) for r in red[: len(pivots)])
        return cls(field, ambient_dim, FqMatrix(field, len(data), ambient_dim, data))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, FqMatrix(field, 0, ambient_dim, ()))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, FqMatrix.identity(field, ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self.basis.data

    def __len__(self) -> int:
        """Cardinality ``q ** dim``."""
        return self.field.q**self.dim

    def key(self) -> tuple[Vector, ...]:
        return self.basis.data

    def __lt__(self, other: Subspace) -> bool:
        return (self.dim, self.key()) < (other.dim, other.key())

    @functools.cached_property
    def _echelon(self) -> EchelonBasis:
        eb = EchelonBasis(self.field, self.ambient_dim)
        eb.rows = [list(r) for r in self.rows]
        eb.pivots = [next(j for j, x in enumerate(r) if x) for r in self.rows]
        return eb

    def contains_vector(self, v: Sequence[int]) -> bool:
        return self._echelon.contains(v)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.contains_vector(v)

    def issubspace(self, other: Subspace) -> bool:
        """``self <= other``."""
        if self.dim > other.dim:
            return False
        return all(other.contains_vector(r) for r in self.rows)

    def __le__(self, other: Subspace) -> bool:
        return self.issubspace(other)

    def orthogonal_complement(self) -> Subspace:
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient_dim)
        return nullspace(self.basis)

    def sum(self, other: Subspace) -> Subspace:
        return Subspace.from_rows(self.field, self.ambient_dim, self.rows + other.rows)

    def vectors(self) -> Iterator[Vector]:
        """All ``q ** dim`` vectors, coefficient tuples in lexicographic order."""
        limits.check("subspace vectors", len(self), "codewords")
        for coeffs in itertools.product(range(self.field.q), repeat=self.dim):
            yield vec_combination(self.field, coeffs, self.rows, self.ambient_dim)

    def image(self, G: FqMatrix) -> Subspace:
        """``{y G : y in self}``, for ``G`` with ``ambient_dim`` rows."""
        return Subspace.from_rows(self.field, G.ncols, [G.vecmat(r) for r in self.rows])

    def __repr__(self) -> str:
        return f"Subspace({self.field!r}^{self.ambient_dim}, dim={self.dim}, basis={list(self.rows)})"


# -- text format ------------------------------------------------------------


def _ints(line: str, lineno: int, expected: int | None, what: str) -> list[int]:
    out, col = [], 1
    for tok in line.split(" "):
        if tok == "":
            col += 1
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise ParseError(f"expected an integer in {what}, got {tok!r}", lineno, col) from None
        col += len(tok) + 1
    if expected is not None and len(out) != expected:
        raise ParseError(f"{what}: expected {expected} integers, got {len(out)}", lineno, 1)
    return out


def parse_matrix(lines: Sequence[str], first_line: int = 1) -> FqMatrix:
    """Parse ``p e rows cols`` followed by ``rows`` lines of element reprs."""
    from bsymbol.gf import field_new

    lines = [ln.rstrip("\r\n") for ln in lines]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("missing matrix header 'p e rows cols'", first_line)
    p, e, nrows, ncols = _ints(lines[0], first_line, 4, "header 'p e rows cols'")
    try:
        field = field_new(p, e)
    except ValueError as exc:
        raise ParseError(str(exc), first_line) from None
    if nrows < 0 or ncols < 0:
        raise ParseError("negative matrix dimension", first_line)
    if len(lines) - 1 != nrows:
        raise ParseError(f"expected {nrows} matrix rows, got {len(lines) - 1}", first_line + len(lines))
    data = []
    for i, ln in enumerate(lines[1:]):
        lineno = first_line + 1 + i
        row = _ints(ln, lineno, ncols, f"row {i}")
        for j, x in enumerate(row):
            if not 0 <= x < field.q:
                raise ParseError(f"entry {x} is not an element of {field}", lineno, j + 1)
        data.append(tuple(row))
    return FqMatrix(field, nrows, ncols, tuple(data))
