import itertools
import random
from fractions import Fraction

import pytest

from bsymbol import gf
from bsymbol.bweight import b_weight
from bsymbol.codes import LinearCode, dual, enumerate_pg
from bsymbol.harness import random_code, random_isomorphism
from bsymbol.isometry import (
    NotAnIsomorphism,
    apply_monomial,
    chain_identity,
    column_sums_identity,
    fast_path_applies,
    hyperplane_inverse,
    hyperplane_product_identity,
    inverse_identity,
    is_monomial_induced,
    omega_sums,
    omega_sums_fast,
    preserves_b_weight,
    preserves_b_weight_brute,
    t_matrix,
    theta_G,
    window_census,
)
from bsymbol.linalg import FqMatrix, Subspace
from oracles import window_weight


def test_census_small_example():
    F = gf(2)
    G = FqMatrix.from_rows(F, [[1, 0, 1]])
    c = window_census(G, 2)
    assert c.m(Subspace.full(F, 1)) == 3
    assert c.m(Subspace.zero(F, 1)) == 0


def test_census_full_window_and_total():
    rng = random.Random(2)
    for _ in range(20):
        C = random_code(rng, gf(3), rng.randint(2, 6), 2)
        c = window_census(C.G, C.n)
        assert len(c.counts) == 1 and sum(c.counts.values()) == C.n
        for b in range(1, C.n + 1):
            c = window_census(C.G, b)
            assert sum(c.counts.values()) == C.n
            assert all(S.dim <= min(b, C.k) for S in c.spans)


def test_theta_extremes():
    F = gf(2)
    C = random_code(random.Random(0), F, 6, 3)
    c = window_census(C.G, 2)
    assert theta_G(c, Subspace.full(F, 3)) == 6
    assert theta_G(c, Subspace.zero(F, 3)) == c.m(Subspace.zero(F, 3))


def test_weight_from_theta_on_example():
    F = gf(2)
    C = LinearCode.from_rows(F, [[1, 0, 1]])
    c = window_census(C.G, 2)
    V = Subspace.full(F, 1)
    D = C.subspace_from_messages(V)
    assert b_weight(D, 2) == 3 == C.n - theta_G(c, V.orthogonal_complement())


def test_incidence_small():
    T = t_matrix(2, 2, 1, 1).T
    assert T.shape == (3, 3)
    assert all(T[i, j] == (i == j) for i in range(3) for j in range(3))
    for q, k in [(2, 3), (3, 3)]:
        for r in range(1, k + 1):
            T = t_matrix(q, k, r, r).T
            assert all(T[i, j] == (i == j) for i in range(T.shape[0]) for j in range(T.shape[1]))


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_incidence_identities(q, k):
    for r in range(1, k + 1):
        for s in range(r, k + 1):
            assert column_sums_identity(q, k, r, s)
    assert inverse_identity(q, k)
    for r in range(1, k):
        assert hyperplane_product_identity(q, k, r)


def test_incidence_chain_binary():
    for r, s, z in itertools.combinations_with_replacement(range(1, 4), 3):
        assert chain_identity(2, 3, r, s, z)
        assert chain_identity(2, 4, r, s, z)


def test_inverse_is_exact():
    inv = hyperplane_inverse(3, 3)
    assert all(isinstance(x, Fraction) for x in inv.flat)


def test_omega_sums_dimension_one_edge():
    C = LinearCode.from_rows(gf(2), [[1, 0, 1]])
    c = window_census(C.G, 2)
    assert omega_sums(c) == [0]


@pytest.mark.parametrize("seed", range(15))
def test_omega_paths_agree(seed):
    rng = random.Random(seed)
    C = random_code(rng, gf(2), rng.randint(3, 8), 3)
    c = window_census(C.G, 2)
    assert fast_path_applies(c)
    assert omega_sums(c) == omega_sums_fast(c)


@pytest.mark.parametrize("seed", range(10))
def test_omega_paths_differ_by_full_windows_only(seed):
    rng = random.Random(100 + seed)
    q = rng.choice([2, 3])
    k = rng.randint(1, 3)
    C = random_code(rng, gf(q), rng.randint(k, 6), k)
    b = rng.randint(k, C.n)
    c = window_census(C.G, b)
    full = c.m(Subspace.full(C.field, k))
    shift = Fraction(full, q**k)
    assert [f - d for f, d in zip(omega_sums_fast(c), omega_sums(c))] == [shift] * len(omega_sums(c))


def test_identity_and_shift_preserve():
    rng = random.Random(9)
    for _ in range(10):
        C = random_code(rng, gf(3), 5, 2)
        for b in range(1, 6):
            assert preserves_b_weight(C, C, C.G, b).preserves
            shifted = [g[-1:] + g[:-1] for g in C.G.data]
            assert preserves_b_weight(C, None, shifted, b).preserves
            assert preserves_b_weight_brute(C, shifted, b)


def test_pinned_adjacency_breaking_permutation():
    # no permutation of three cyclic positions breaks adjacency, so the smallest case has length 4
    F = gf(2)
    C = LinearCode.from_rows(F, [[1, 1, 0, 0]])
    images = [(1, 0, 1, 0)]
    assert window_weight(C.G.data[0], 2) == 3 and window_weight(images[0], 2) == 4
    assert not preserves_b_weight_brute(C, images, 2)
    report = preserves_b_weight(C, None, images, 2)
    assert not report.preserves
    assert preserves_b_weight(C, None, images, 1).preserves
    D = dual(LinearCode.from_rows(F, [[1, 0, 1]]))
    for p in itertools.permutations(range(3)):
        assert preserves_b_weight_brute(D, [tuple(g[p[j]] for j in range(3)) for g in D.G.data], 2)


def test_not_an_isomorphism():
    F = gf(2)
    C = LinearCode.from_rows(F, [[1, 0, 0, 1], [0, 1, 1, 0]])
    with pytest.raises(NotAnIsomorphism, match="not an isomorphism"):
        preserves_b_weight(C, None, [[1, 1, 0, 0], [1, 1, 0, 0]], 2)
    with pytest.raises(NotAnIsomorphism):
        preserves_b_weight(C, C, [[1, 1, 0, 0], [0, 0, 1, 1]], 2)


@pytest.mark.parametrize("seed", range(40))
def test_verdict_matches_brute_force(seed):
    rng = random.Random(seed)
    q = rng.choice([2, 3])
    n = rng.randint(2, 7)
    C = random_code(rng, gf(q), n, rng.randint(1, min(n, 4)))
    images = random_isomorphism(rng, C)
    for b in range(1, n + 1):
        assert preserves_b_weight(C, None, images, b).preserves == preserves_b_weight_brute(C, images, b)


def test_monomial_examples():
    F = gf(3)
    C = LinearCode.from_rows(F, [[1, 2, 0, 1], [0, 1, 1, 2]])
    perm, lam = is_monomial_induced(C, C, C.G)
    assert perm == [0, 1, 2, 3] and lam == [1, 1, 1, 1]
    scaled = [(F.mul(2, g[0]),) + g[1:] for g in C.G.data]
    perm, lam = is_monomial_induced(C, None, scaled)
    assert lam[0] == 2 and apply_monomial(C, perm, lam).data == tuple(scaled)


@pytest.mark.parametrize("seed", range(40))
def test_hamming_weight_preservation_iff_monomial(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    C = random_code(rng, gf(3), n, rng.randint(1, min(n, 3)))
    images = random_isomorphism(rng, C)
    found = is_monomial_induced(C, None, images)
    assert (found is not None) == preserves_b_weight_brute(C, images, 1)
    if found is not None:
        assert apply_monomial(C, *found) == images
