"""Window-span censuses, incidence matrices and b-weight preserving isomorphisms.

For a generator ``G`` the census counts, for every subspace ``V`` of the
message space, how many cyclic windows of ``b`` consecutive columns span
exactly ``V``.  Whether a linear isomorphism keeps b-weights is decided by
comparing weighted sums of two censuses over the subspaces through each
projective point, plus a single matched codeword.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from bsymbol.codes import LinearCode, enumerate_pg, gaussian_binomial
from bsymbol.gf import Field, gf
from bsymbol.linalg import FqMatrix, Subspace, Vector, rank_of, support_mask


class NotAnIsomorphism(ValueError):
    pass


# -- census of window spans ---------------------------------------------------


@dataclass(frozen=True)
class WindowCensus:
    G: FqMatrix
    b: int
    spans: tuple[Subspace, ...]
    counts: dict[tuple[Vector, ...], int]
    by_key: dict[tuple[Vector, ...], Subspace]

    @property
    def field(self) -> Field:
        return self.G.field

    @property
    def k(self) -> int:
        return self.G.nrows

    @property
    def n(self) -> int:
        return self.G.ncols

    def m(self, V: Subspace) -> int:
        return self.counts.get(V.key(), 0)


def window_census(G: FqMatrix, b: int) -> WindowCensus:
    n, k = G.ncols, G.nrows
    if not 1 <= b <= n:
        raise ValueError(f"b={b} outside 1..{n}")
    cols = G.columns()
    spans = tuple(Subspace.from_rows(G.field, k, [cols[(j + t) % n] for t in range(b)]) for j in range(n))
    counts = Counter(S.key() for S in spans)
    by_key = {S.key(): S for S in spans}
    return WindowCensus(G, b, spans, dict(counts), by_key)


def theta_G(census: WindowCensus, U: Subspace) -> int:
    """Number of windows whose span lies inside ``U``."""
    return sum(m for key, m in census.counts.items() if census.by_key[key] <= U)


# -- incidence matrices --------------------------------------------------------


def _field(q_or_field: int | Field) -> Field:
    return q_or_field if isinstance(q_or_field, Field) else gf(q_or_field)


@dataclass(frozen=True)
class IncidenceMatrix:
    q: int
    k: int
    r: int
    s: int
    T: np.ndarray  # object array of Fraction 0/1

    @property
    def shape(self) -> tuple[int, int]:
        return self.T.shape


def t_matrix(q: int | Field, k: int, r: int, s: int) -> IncidenceMatrix:
    """Containment incidence between ``PG^r`` and ``PG^s`` of ``F_q^k`` in canonical order."""
    if not 0 <= r <= s <= k:
        raise ValueError(f"need 0 <= r <= s <= k, got r={r}, s={s}, k={k}")
    F = _field(q)
    rows = enumerate_pg(F, k, r)
    cols = enumerate_pg(F, k, s)
    T = np.empty((len(rows), len(cols)), dtype=object)
    for i, V in enumerate(rows):
        for j, W in enumerate(cols):
            T[i, j] = Fraction(1) if V <= W else Fraction(0)
    return IncidenceMatrix(F.q, k, r, s, T)


def _ones(m: int, n: int) -> np.ndarray:
    J = np.empty((m, n), dtype=object)
    J.fill(Fraction(1))
    return J


def _eye(m: int) -> np.ndarray:
    out = np.empty((m, m), dtype=object)
    out.fill(Fraction(0))
    for i in range(m):
        out[i, i] = Fraction(1)
    return out


def _equal(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool((A == B).all())


def column_sums_identity(q: int | Field, k: int, r: int, s: int) -> bool:
    """Every column of ``T_{r,s}`` sums to the number of r-subspaces of an s-space."""
    T = t_matrix(q, k, r, s).T
    return all(v == gaussian_binomial(_field(q).q, r, s) for v in T.sum(axis=0))


def hyperplane_inverse(q: int | Field, k: int) -> np.ndarray:
    """Closed-form inverse of the point-hyperplane incidence matrix, ``k >= 2``."""
    if k < 2:
        raise ValueError("need k >= 2")
    qq = _field(q).q
    T = t_matrix(q, k, 1, k - 1).T
    n = T.shape[0]
    c = Fraction(qq ** (k - 2) - 1, qq ** (k - 1) - 1)
    return (T - c * _ones(n, n)) * Fraction(1, qq ** (k - 2))


def inverse_identity(q: int | Field, k: int) -> bool:
    T = t_matrix(q, k, 1, k - 1).T
    inv = hyperplane_inverse(q, k)
    sums = inv.sum(axis=0)
    return _equal(T.dot(inv), _eye(T.shape[0])) and all(v == sums[0] for v in sums)


def hyperplane_product_identity(q: int | Field, k: int, r: int) -> bool:
    """Both product formulas for ``T_{r,k-1}`` against ``T_{1,k-1}`` and its inverse, ``k >= r + 1``."""
    if not 1 <= r <= k - 1:
        raise ValueError(f"need 1 <= r <= k-1, got r={r}, k={k}")
    qq = _field(q).q
    Trk = t_matrix(q, k, r, k - 1).T
    T1k = t_matrix(q, k, 1, k - 1).T
    T1r = t_matrix(q, k, 1, r).T.T
    J = _ones(Trk.shape[0], T1k.shape[0])
    lhs = Trk.dot(T1k)
    rhs = T1r * qq ** (k - r - 1) + J * Fraction(qq ** (k - r - 1) - 1, qq - 1)
    if not _equal(lhs, rhs):
        return False
    lhs = Trk.dot(hyperplane_inverse(q, k))
    rhs = T1r * Fraction(1, qq ** (r - 1)) - J * Fraction(qq ** (r - 1) - 1, qq ** (r - 1) * (qq ** (k - 1) - 1))
    return _equal(lhs, rhs)


def chain_identity(q: int | Field, k: int, r: int, s: int, z: int) -> bool:
    """``T_{r,s} T_{s,z} = n_{s-r,z-r} T_{r,z}``."""
    qq = _field(q).q
    lhs = t_matrix(q, k, r, s).T.dot(t_matrix(q, k, s, z).T)
    return _equal(lhs, t_matrix(q, k, r, z).T * gaussian_binomial(qq, s - r, z - r))


# -- omega sums ---------------------------------------------------------------


def omega_depth(b: int, k: int) -> int:
    return min(b, k - 1)


def omega_sums(census: WindowCensus) -> list[Fraction]:
    """Entry i: sum of ``m_G(V) / q^dim V`` over subspaces ``V`` of dimension 1..s through point i.

    Runs over every subspace of dimension at most ``s = min(b, k-1)`` and
    tests containment of each projective point.
    """
    F, k = census.field, census.k
    q = F.q
    points = enumerate_pg(F, k, 1)
    out = [Fraction(0)] * len(points)
    for r in range(1, omega_depth(census.b, k) + 1):
        weight = Fraction(1, q**r)
        for V in enumerate_pg(F, k, r):
            m = census.m(V)
            if not m:
                continue
            for i, P in enumerate(points):
                if V.contains_vector(P.rows[0]):
                    out[i] += m * weight
    return out


def omega_sums_fast(census: WindowCensus) -> list[Fraction]:
    """Same sums from the windows directly: point i gains ``q^-rank`` from every window span containing it.

    Unlike :func:`omega_sums` this does not drop windows spanning more than
    ``s`` dimensions.
    """
    F, k = census.field, census.k
    points = enumerate_pg(F, k, 1)
    out = [Fraction(0)] * len(points)
    for S in census.spans:
        if S.dim == 0:
            continue
        weight = Fraction(1, F.q**S.dim)
        for i, P in enumerate(points):
            if S.contains_vector(P.rows[0]):
                out[i] += weight
    return out


def fast_path_applies(census: WindowCensus) -> bool:
    s = omega_depth(census.b, census.k)
    return all(S.dim <= s for S in census.spans)


# -- isomorphism checks --------------------------------------------------------


def _window_weight(v: Sequence[int], b: int) -> int:
    n = len(v)
    m = support_mask(v)
    full = (1 << n) - 1
    out = 0
    for i in range(b):
        out |= ((m >> i) | (m << (n - i))) & full
    return bin(out).count("1")


def _image_matrix(C: LinearCode, images: FqMatrix | Sequence[Sequence[int]], C_tilde: LinearCode | None) -> FqMatrix:
    Gt = images if isinstance(images, FqMatrix) else FqMatrix.from_rows(C.field, images, C.n)
    if Gt.field is not C.field:
        raise NotAnIsomorphism("field mismatch")
    if Gt.nrows != C.k or Gt.ncols != C.n:
        raise NotAnIsomorphism(f"not an isomorphism: need {C.k} images of length {C.n}")
    if rank_of(C.field, Gt.data, C.n) < C.k:
        raise NotAnIsomorphism("not an isomorphism: images are dependent")
    if C_tilde is not None and LinearCode(Gt) != C_tilde:
        raise NotAnIsomorphism("not an isomorphism: images do not span the target code")
    return Gt


@dataclass(frozen=True)
class IsometryReport:
    b: int
    preserves: bool
    differences: tuple[Fraction, ...]
    differences_constant: bool
    anchor: Vector
    anchor_weights: tuple[int, int]
    fast_differences: tuple[Fraction, ...]
    fast_path_applies: bool
    fast_shift: Fraction | None

    def lines(self) -> list[str]:
        out = [
            f"b={self.b} preserves: {'yes' if self.preserves else 'no'}",
            "omega differences constant: " + ("yes" if self.differences_constant else "no"),
            "anchor " + " ".join(map(str, self.anchor)) + f" weights {self.anchor_weights[0]} {self.anchor_weights[1]}",
        ]
        if self.fast_path_applies:
            out.append("fast path: agrees" if self.fast_shift == 0 else "fast path: DISAGREES")
        elif self.fast_shift is not None:
            out.append(f"fast path: shifted by {self.fast_shift} at every point")
        else:
            out.append("fast path: not comparable")
        return out


def preserves_b_weight(
    C: LinearCode,
    C_tilde: LinearCode | None,
    images: FqMatrix | Sequence[Sequence[int]],
    b: int,
) -> IsometryReport:
    """Decide ``w_b(c) = w_b(phi(c))`` for all c, ``phi`` sending row i of ``C.G`` to ``images[i]``.

    The test is: the census differences summed over subspaces through each
    point are the same for every point, and the first generator row keeps its
    b-weight.
    """
    Gt = _image_matrix(C, images, C_tilde)
    if not 1 <= b <= C.n:
        raise ValueError(f"b={b} outside 1..{C.n}")
    A, B = window_census(C.G, b), window_census(Gt, b)
    diffs = tuple(x - y for x, y in zip(omega_sums(A), omega_sums(B)))
    constant = all(d == diffs[0] for d in diffs)
    anchor = C.G.data[0]
    weights = (_window_weight(anchor, b), _window_weight(Gt.data[0], b))

    fast = tuple(x - y for x, y in zip(omega_sums_fast(A), omega_sums_fast(B)))
    applies = fast_path_applies(A) and fast_path_applies(B)
    gaps = {f - d for f, d in zip(fast, diffs)}
    shift = gaps.pop() if len(gaps) == 1 else None
    return IsometryReport(b, constant and weights[0] == weights[1], diffs, constant, anchor, weights, fast, applies, shift)


def preserves_b_weight_brute(C: LinearCode, images: FqMatrix | Sequence[Sequence[int]], b: int) -> bool:
    """Compare b-weights of every message under both generators."""
    Gt = _image_matrix(C, images, None)
    tilde = LinearCode(Gt)
    from bsymbol.codes import enumerate_codewords

    return all(
        _window_weight(c, b) == _window_weight(d, b) for c, d in zip(enumerate_codewords(C), enumerate_codewords(tilde))
    )


def _normalize(field: Field, v: Vector) -> tuple[Vector, int]:
    """Projective representative of ``v`` and the scalar with ``v = scalar * rep``."""
    lead = next((x for x in v if x), 0)
    if not lead:
        return v, 1
    inv = field.inv(lead)
    return tuple(field.mul(inv, x) for x in v), lead


def is_monomial_induced(
    C: LinearCode,
    C_tilde: LinearCode | None,
    images: FqMatrix | Sequence[Sequence[int]],
) -> tuple[list[int], list[int]] | None:
    """Find ``perm``, ``scalars`` with column ``perm[j]`` of the image generator equal to ``scalars[j]`` times column j.

    Then ``phi(x) = x M`` for the monomial ``M`` with ``M[j, perm[j]] = scalars[j]``.
    Columns are matched by projective class, so the search is a bucket
    matching rather than a walk over permutations.
    """
    Gt = _image_matrix(C, images, C_tilde)
    F = C.field
    buckets: dict[Vector, list[tuple[int, int]]] = {}
    for j, col in enumerate(Gt.columns()):
        rep, lam = _normalize(F, col)
        buckets.setdefault(rep, []).append((j, lam))
    perm, scalars = [], []
    for col in C.G.columns():
        rep, lam = _normalize(F, col)
        pool = buckets.get(rep)
        if not pool:
            return None
        target, lam_t = pool.pop(0)
        perm.append(target)
        scalars.append(F.div(lam_t, lam) if any(col) else 1)
    return perm, scalars


def apply_monomial(C: LinearCode, perm: Sequence[int], scalars: Sequence[int]) -> FqMatrix:
    """Images of the generator rows under ``x -> x M``."""
    F = C.field
    rows = []
    for g in C.G.data:
        out = [0] * C.n
        for j, x in enumerate(g):
            out[perm[j]] = F.mul(scalars[j], x)
        rows.append(tuple(out))
    return FqMatrix(F, C.k, C.n, tuple(rows))
