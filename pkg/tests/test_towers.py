import itertools
import random

import pytest

from bsymbol import gf
from bsymbol.bweight import d_b
from bsymbol.codes import LinearCode, ZeroCodeError, enumerate_codewords
from bsymbol.families import h_matrix, simplex_code
from bsymbol.harness import random_code
from bsymbol.linalg import FqMatrix
from bsymbol.towers import (
    check_extension,
    check_reduction,
    essential_number,
    extend_code,
    independent_over_both,
    subfield_subcode,
    subfield_subcode_dim,
    tower,
    trace_code,
    trace_vector,
)


def brute_subcode(C, m):
    T = tower(C.field, m)
    return {tuple(T.lower(x) for x in c) for c in enumerate_codewords(C) if all(T.in_base(x) for x in c)}


def test_binary_parity_matrix_over_gf4():
    C = extend_code(simplex_code(gf(2), 3), 2)
    assert C.field.q == 4
    assert subfield_subcode_dim(C, 1) == 3
    assert subfield_subcode(C, 1) == simplex_code(gf(2), 3)


def test_non_binary_line_has_trivial_subcode():
    F4 = gf(4)
    C = LinearCode.from_rows(F4, [[2, 1]])
    assert subfield_subcode_dim(C, 1) == 0
    with pytest.raises(ZeroCodeError):
        subfield_subcode(C, 1)
    assert essential_number(C) == 2


def test_top_degree_is_identity():
    C = random_code(random.Random(1), gf(8), 4, 2)
    assert subfield_subcode(C, 3) == C


def test_essential_number_examples():
    assert essential_number(random_code(random.Random(2), gf(5), 4, 2)) == 1
    assert essential_number(extend_code(random_code(random.Random(3), gf(2), 5, 2), 2)) == 1


@pytest.mark.parametrize("seed", range(25))
def test_subcode_matches_brute_force(seed):
    rng = random.Random(seed)
    F = gf(rng.choice([4, 8, 9, 16]))
    n = rng.randint(2, 5)
    C = random_code(rng, F, n, rng.randint(1, min(n, 3 if F.q < 16 else 2)))
    for m in range(1, F.e + 1):
        if F.e % m:
            continue
        words = brute_subcode(C, m)
        dim = subfield_subcode_dim(C, m)
        assert len(words) == tower(F, m).base.q ** dim
        if dim:
            assert set(enumerate_codewords(subfield_subcode(C, m))) == words
    e = essential_number(C)
    assert F.e % e == 0 and subfield_subcode_dim(C, e) == C.k


def test_independence_survives_extension():
    F = gf(2)
    for n in range(1, 5):
        vecs = list(itertools.product(range(2), repeat=n))
        for size in range(1, 4):
            for combo in itertools.combinations(vecs, size):
                a, b = independent_over_both(combo, F, 2)
                assert a == b


@pytest.mark.parametrize("seed", range(20))
def test_extension_keeps_dimension_and_b_distance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    C = random_code(rng, gf(2), n, rng.randint(1, min(n, 4)))
    E = extend_code(C, 2)
    assert E.k == C.k and E.field.q == 4
    for b in range(1, n + 1):
        rep = check_extension(C, 2, b)
        assert rep.path == "direct" and rep.holds


def test_trace_code_examples():
    F2, F4 = gf(2), gf(4)
    C = LinearCode.from_rows(F4, [[2, 1]])
    assert trace_code(C, F2) == LinearCode(FqMatrix.identity(F2, 2))
    B = random_code(random.Random(7), F2, 5, 2)
    T = trace_code(extend_code(B, 2), F2)
    words = set(enumerate_codewords(T))
    assert all(c in words for c in enumerate_codewords(B))
    brute = set()
    for c in enumerate_codewords(extend_code(B, 2)):
        brute.add(trace_vector(F4, F2, c))
    assert words == brute


@pytest.mark.parametrize("seed", range(10))
def test_trace_code_is_span_of_traces(seed):
    rng = random.Random(seed)
    F = gf(rng.choice([4, 9]))
    base = gf(F.p)
    C = random_code(rng, F, rng.randint(2, 4), 1)
    words = {trace_vector(F, base, c) for c in enumerate_codewords(C)}
    assert set(enumerate_codewords(trace_code(C, base))) == words


def test_reduction_report():
    C = extend_code(h_matrix_code(), 2)
    for b in range(1, C.n + 1):
        rep = check_reduction(C, b)
        assert rep.applicable and rep.holds and rep.path == "direct"
    rep = check_reduction(LinearCode.from_rows(gf(4), [[2, 1]]), 1)
    assert not rep.applicable and "not applicable" in str(rep)


def test_reduction_classical_distance():
    C = extend_code(h_matrix_code(), 2)
    assert check_reduction(C, 1).big == 4 == d_b(h_matrix_code(), 1)


def h_matrix_code():
    return LinearCode(h_matrix(gf(2), 3))
