"""Brute-force reference implementations used only by the tests.

Nothing here touches the package's elimination, enumeration or table code:
fields are polynomial arithmetic on coefficient tuples, subspaces are plain
sets of vectors, and every minimum is taken over an explicit enumeration.
"""

from __future__ import annotations

import itertools
from functools import cache


# -- fields as polynomials ------------------------------------------------------


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def _preduce(a, mod, p):
    a = list(a)
    e = len(mod) - 1
    for i in range(len(a) - 1, e - 1, -1):
        c = a[i]
        if c:
            for j in range(e + 1):
                a[i - e + j] = (a[i - e + j] - c * mod[j]) % p
    return (a + [0] * e)[:e]


@cache
def oracle_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic degree-e polynomial (low coefficients compared first) with no factor of lower degree.

    Irreducibility is decided by multiplying out every pair of monic factors.
    """
    if e == 1:
        return (0, 1)
    products = set()
    for d in range(1, e // 2 + 1):
        for lo in itertools.product(range(p), repeat=d):
            for hi in itertools.product(range(p), repeat=e - d):
                products.add(tuple(_pmul(list(lo) + [1], list(hi) + [1], p)))
    for coeffs in itertools.product(range(p), repeat=e):
        cand = tuple(coeffs) + (1,)
        if cand not in products:
            return cand
    raise AssertionError("no irreducible found")


class OracleField:
    def __init__(self, p: int, e: int) -> None:
        self.p, self.e, self.q = p, e, p**e
        self.mod = oracle_modulus(p, e)

    def digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def value(self, ds):
        return sum(d * self.p**i for i, d in enumerate(ds))

    def add(self, a, b):
        return self.value([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.value([(-x) % self.p for x in self.digits(a)])

    def mul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        return self.value(_preduce(_pmul(self.digits(a), self.digits(b), self.p), self.mod, self.p))

    def pow(self, a, k):
        out = 1
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def inv(self, a):
        return next(x for x in range(1, self.q) if self.mul(a, x) == 1)


# -- vectors, spans and subspaces as sets ------------------------------------------


def span(F: OracleField, vectors, n: int) -> frozenset:
    vectors = [tuple(v) for v in vectors]
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=len(vectors)):
        w = [0] * n
        for c, v in zip(coeffs, vectors):
            w = [F.add(x, F.mul(c, y)) for x, y in zip(w, v)]
        out.add(tuple(w))
    return frozenset(out)


def dimension(F: OracleField, S: frozenset) -> int:
    size, d = len(S), 0
    while F.q**d < size:
        d += 1
    assert F.q**d == size
    return d


def rank(F: OracleField, vectors, n: int) -> int:
    return dimension(F, span(F, vectors, n))


def subspaces(F: OracleField, ambient_vectors: frozenset, r: int, n: int) -> set[frozenset]:
    """All r-dimensional subspaces of the space ``ambient_vectors``, by spanning r-subsets."""
    nonzero = sorted(v for v in ambient_vectors if any(v))
    out = set()
    for combo in itertools.combinations(nonzero, r):
        S = span(F, combo, n)
        if len(S) == F.q**r:
            out.add(S)
    return out


def full_space(F: OracleField, n: int) -> frozenset:
    return frozenset(itertools.product(range(F.q), repeat=n))


def orth(F: OracleField, S: frozenset, n: int) -> frozenset:
    def dot(u, v):
        acc = 0
        for x, y in zip(u, v):
            acc = F.add(acc, F.mul(x, y))
        return acc

    return frozenset(v for v in full_space(F, n) if all(dot(u, v) == 0 for u in S))


# -- b-weights from the definition -----------------------------------------------


def window_weight(x, b: int) -> int:
    n = len(x)
    return sum(1 for i in range(n) if any(x[(i + t) % n] for t in range(b)))


def window_support(S, b: int, n: int) -> frozenset:
    return frozenset(i for i in range(n) if any(v[(i + t) % n] for v in S for t in range(b)))


def expand(J, n: int, b: int, sign: int) -> frozenset:
    return frozenset((j + sign * i) % n for j in J for i in range(b))


def holes(J, n: int) -> list[frozenset]:
    """Maximal runs of non-members, each flanked by members, from the definition."""
    J = set(J)
    out = []
    for a in J:
        run = []
        x = (a + 1) % n
        while x not in J:
            run.append(x)
            x = (x + 1) % n
        if run:
            out.append(frozenset(run))
    return out


def d_br(F: OracleField, code_vectors: frozenset, b: int, r: int, n: int) -> int:
    return min(len(window_support(S, b, n)) for S in subspaces(F, code_vectors, r, n))


def d_matrix(F: OracleField, code_vectors: frozenset, n: int) -> list[list[int]]:
    k = dimension(F, code_vectors)
    return [[d_br(F, code_vectors, b, r, n) for r in range(1, k + 1)] for b in range(1, n + 1)]


def is_b_mds(code_vectors: frozenset, b: int, n: int, k: int) -> bool:
    return min(window_weight(c, b) for c in code_vectors if any(c)) == min(n + b - k, n)


def gaussian_count(F: OracleField, r: int, k: int) -> int:
    return len(subspaces(F, full_space(F, k), r, k)) if r else 1
