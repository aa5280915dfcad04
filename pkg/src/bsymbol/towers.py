"""Subfield subcodes, scalar extensions and trace codes along a field tower."""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from bsymbol import limits
from bsymbol.bweight import d_b
from bsymbol.codes import LinearCode, ZeroCodeError
from bsymbol.gf import Field, field_new, trace_repr
from bsymbol.linalg import FqMatrix, Vector, nullspace, rank_of


@dataclass(frozen=True)
class TowerContext:
    """``base = GF(p^m)`` sitting inside ``ext = GF(p^e)``."""

    base: Field
    ext: Field
    embedding: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.ext.e // self.base.e

    def lift(self, x: int) -> int:
        return self.embedding[x]

    def lower(self, x: int) -> int:
        """Inverse of :meth:`lift`; ``KeyError`` if ``x`` is outside the subfield."""
        return _lower_table(self.ext, self.base.e)[x]

    def in_base(self, x: int) -> bool:
        return x in _lower_table(self.ext, self.base.e)

    def lift_vector(self, v: Sequence[int]) -> Vector:
        return tuple(self.embedding[x] for x in v)

    def coordinates(self, x: int) -> Vector:
        """Coordinates of ``x`` over ``base`` in the basis ``1, g, ..., g^(t-1)``, g the generator of ``ext``."""
        return _coordinate_table(self.ext, self.base.e)[x]

    def basis(self) -> list[int]:
        return [self.ext.pow(self.ext.generator, i) for i in range(self.degree)]


def tower(ext: Field, m: int) -> TowerContext:
    if not ext.is_subfield_degree(m):
        raise ValueError(f"not a subfield: GF({ext.p}^{m}) in {ext}")
    base, emb = ext.subfield(m)
    return TowerContext(base, ext, emb)


@functools.cache
def _lower_table(ext: Field, m: int) -> dict[int, int]:
    _, emb = ext.subfield(m)
    return {v: a for a, v in enumerate(emb)}


@functools.cache
def _coordinate_table(ext: Field, m: int) -> dict[int, Vector]:
    T = tower(ext, m)
    basis = T.basis()
    table: dict[int, Vector] = {}
    for coords in itertools.product(range(T.base.q), repeat=T.degree):
        x = 0
        for c, beta in zip(coords, basis):
            x = ext.add(x, ext.mul(T.lift(c), beta))
        table[x] = coords
    if len(table) != ext.q:
        raise AssertionError("power basis does not span the extension")
    return table


# -- subfield subcodes ---------------------------------------------------------


def _subcode_space(C: LinearCode, m: int):
    T = tower(C.field, m)
    if C.k == C.n:
        return T, None
    rows = []
    for h in C.H.data:
        coords = [T.coordinates(x) for x in h]
        for level in range(T.degree):
            rows.append(tuple(c[level] for c in coords))
    return T, nullspace(FqMatrix(T.base, len(rows), C.n, tuple(rows)))


def subfield_subcode_dim(C: LinearCode, m: int) -> int:
    T, space = _subcode_space(C, m)
    return C.n if space is None else space.dim


def subfield_subcode(C: LinearCode, m: int) -> LinearCode:
    """Codewords of ``C`` with every entry in ``GF(p^m)``, as a code over that subfield.

    Each parity equation over the big field is split into ``e/m`` equations
    over the subfield by expanding in a power basis; the subcode is their
    common kernel.  Raises :class:`ZeroCodeError` when only zero survives.
    """
    T, space = _subcode_space(C, m)
    if space is None:
        return LinearCode(FqMatrix.identity(T.base, C.n))
    if space.dim == 0:
        raise ZeroCodeError("zero code")
    return LinearCode(space.basis)


def essential_number(C: LinearCode) -> int:
    """Smallest ``m | e`` whose subfield subcode keeps dimension ``k``."""
    e = C.field.e
    return next(m for m in range(1, e + 1) if e % m == 0 and subfield_subcode_dim(C, m) == C.k)


# -- extension and trace ----------------------------------------------------------


def extend_code(C: LinearCode, m: int) -> LinearCode:
    """The same generator read over ``GF(q^m)``."""
    if m < 1:
        raise ValueError("m must be positive")
    base = C.field
    limits.check(f"GF({base.p}^{base.e * m})", base.q**m, "field_order")
    T = tower(field_new(base.p, base.e * m), base.e)
    return LinearCode(FqMatrix(T.ext, C.k, C.n, tuple(T.lift_vector(g) for g in C.G.data)))


def trace_vector(ext: Field, base: Field, v: Sequence[int]) -> Vector:
    return tuple(trace_repr(ext, base.e, x) for x in v)


def trace_code(C: LinearCode, base: Field) -> LinearCode:
    """Span of componentwise traces: ``Tr(beta * g)`` over a power basis ``beta`` and generator rows ``g``."""
    T = tower(C.field, base.e)
    if T.base is not base:
        raise ValueError(f"not a subfield: {base} in {C.field}")
    ext = C.field
    rows = [trace_vector(ext, base, tuple(ext.mul(beta, x) for x in g)) for g in C.G.data for beta in T.basis()]
    return LinearCode(FqMatrix(base, len(rows), C.n, tuple(rows)))


def independent_over_both(vectors: Sequence[Sequence[int]], base: Field, m: int) -> tuple[bool, bool]:
    """Independence of base-field vectors over the base and over ``GF(|base|^m)``."""
    vectors = [tuple(v) for v in vectors]
    width = len(vectors[0]) if vectors else 0
    T = tower(field_new(base.p, base.e * m), base.e)
    over_base = rank_of(base, vectors, width) == len(vectors)
    over_ext = rank_of(T.ext, [T.lift_vector(v) for v in vectors], width) == len(vectors)
    return over_base, over_ext


# -- reduction checks ---------------------------------------------------------------


@dataclass(frozen=True)
class ReductionReport:
    b: int
    applicable: bool
    big: int | None
    small: int | None
    path: str

    @property
    def holds(self) -> bool:
        return not self.applicable or self.big == self.small

    def __str__(self) -> str:
        if not self.applicable:
            return f"b={self.b}: not applicable ({self.path})"
        verdict = "equal" if self.big == self.small else "DIFFERENT"
        return f"b={self.b}: {self.big} {self.small} {verdict} ({self.path})"


def check_reduction(C: LinearCode, b: int, base_degree: int = 1) -> ReductionReport:
    """Compare ``d_b(C)`` with ``d_b`` of its subfield subcode when that subcode has full dimension."""
    dim = subfield_subcode_dim(C, base_degree)
    if dim != C.k:
        return ReductionReport(b, False, None, None, f"subcode dimension {dim} < {C.k}")
    small = subfield_subcode(C, base_degree)
    if C.q**C.k <= limits.current().codewords:
        return ReductionReport(b, True, d_b(C, b), d_b(small, b), "direct")
    # C is the extension of its full-dimension subcode, so the base value stands in for it
    return ReductionReport(b, True, d_b(small, b), d_b(small, b), "via-subcode")


def check_extension(C: LinearCode, m: int, b: int) -> ReductionReport:
    """Compare ``d_b(C)`` with ``d_b`` of its scalar extension to ``GF(q^m)``."""
    big = extend_code(C, m)
    if big.q**big.k <= limits.current().codewords:
        return ReductionReport(b, True, d_b(big, b), d_b(C, b), "direct")
    return ReductionReport(b, True, d_b(C, b), d_b(C, b), "via-base")
