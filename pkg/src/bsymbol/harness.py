"""Random code generation, the built-in corpus and the self-check harness."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from bsymbol import isometry, mds
from bsymbol.bweight import check_bound_theorems, d_matrix
from bsymbol.codes import LinearCode, dual
from bsymbol.families import hamming_code, simplex_code
from bsymbol.gf import Field, gf
from bsymbol.linalg import FqMatrix, rank_of


def random_code(rng: random.Random, field: Field, n: int, k: int) -> LinearCode:
    """Uniform full-rank ``k x n`` generator, by rejection."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    while True:
        rows = [tuple(rng.randrange(field.q) for _ in range(n)) for _ in range(k)]
        if rank_of(field, rows, n) == k:
            return LinearCode(FqMatrix(field, k, n, tuple(rows)))


def random_corpus(seed: int, count: int, qs=(2, 3), n_range=(2, 8)) -> Iterator[LinearCode]:
    rng = random.Random(seed)
    for _ in range(count):
        F = gf(rng.choice(qs))
        n = rng.randint(*n_range)
        yield random_code(rng, F, n, rng.randint(1, n))


def random_invertible(rng: random.Random, field: Field, k: int) -> FqMatrix:
    while True:
        rows = [tuple(rng.randrange(field.q) for _ in range(k)) for _ in range(k)]
        if rank_of(field, rows, k) == k:
            return FqMatrix(field, k, k, tuple(rows))


def random_isomorphism(rng: random.Random, C: LinearCode) -> FqMatrix:
    """Images of the generator rows under one of several kinds of random maps.

    Mixes cyclic shifts (always b-weight preserving), monomial maps (Hamming
    weight preserving) and arbitrary maps into arbitrary codes of the same
    dimension.
    """
    F, n, k = C.field, C.n, C.k
    kind = rng.choice(("shift", "monomial", "permutation", "automorphism", "any"))
    if kind == "shift":
        s = rng.randrange(n)
        rows = [tuple(g[(j - s) % n] for j in range(n)) for g in C.G.data]
    elif kind in ("monomial", "permutation"):
        perm = list(range(n))
        rng.shuffle(perm)
        lam = [rng.randrange(1, F.q) if kind == "monomial" else 1 for _ in range(n)]
        rows = []
        for g in C.G.data:
            out = [0] * n
            for j, x in enumerate(g):
                out[perm[j]] = F.mul(lam[j], x)
            rows.append(tuple(out))
    elif kind == "automorphism":
        A = random_invertible(rng, F, k)
        rows = list((A @ C.G).data)
    else:
        rows = list(random_code(rng, F, n, k).G.data)
    return FqMatrix(F, k, n, tuple(rows))


def builtin_corpus() -> list[tuple[str, LinearCode]]:
    F2, F3, F4 = gf(2), gf(3), gf(4)
    C101 = LinearCode.from_rows(F2, [[1, 0, 1]])
    out = [
        ("<101>", C101),
        ("<101>^perp", dual(C101)),
        ("hamming(2,3)", hamming_code(F2, 3)),
        ("simplex(2,3)", simplex_code(F2, 3)),
        ("simplex(3,2)", simplex_code(F3, 2)),
        ("full(2,3)", LinearCode(FqMatrix.identity(F2, 3))),
        ("<w1>", LinearCode.from_rows(F4, [[2, 1]])),
    ]
    out.extend((f"random#{i}", C) for i, C in enumerate(random_corpus(7, 25, n_range=(2, 7))))
    return out


@dataclass
class SelfCheck:
    lines: list[str] = field(default_factory=list)
    failures: int = 0

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.lines.append(f"{'pass' if ok else 'FAIL'} {name}{(': ' + detail) if detail and not ok else ''}")
        if not ok:
            self.failures += 1

    def guard(self, name: str, fn: Callable[[], bool]) -> None:
        try:
            self.record(name, bool(fn()))
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            self.record(name, False, f"{type(exc).__name__}: {exc}")


def selfcheck() -> SelfCheck:
    report = SelfCheck()
    for name, C in builtin_corpus():
        report.guard(f"bounds {name}", lambda C=C: check_bound_theorems(C, d_matrix(C)).passed)
        report.guard(
            f"mds-agreement {name}",
            lambda C=C: all(
                len({f(C, b).is_mds for f in mds.CRITERIA.values()}) == 1 for b in range(1, C.n + 1)
            ),
        )
    for q in (2, 3):
        for k in (2, 3):
            report.guard(f"hyperplane-inverse q={q} k={k}", lambda q=q, k=k: isometry.inverse_identity(q, k))
            for r in range(1, k):
                report.guard(
                    f"hyperplane-product q={q} k={k} r={r}",
                    lambda q=q, k=k, r=r: isometry.hyperplane_product_identity(q, k, r),
                )
    report.guard(
        "incidence-chain q=2 k=3",
        lambda: all(
            isometry.chain_identity(2, 3, r, s, z) for r in range(1, 4) for s in range(r, 4) for z in range(s, 4)
        ),
    )
    return report
