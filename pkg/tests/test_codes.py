import pytest

from bsymbol import gf, limits
from bsymbol.codes import (
    LinearCode,
    ZeroCodeError,
    code_from_generator,
    dual,
    enumerate_codewords,
    enumerate_pg,
    format_code,
    gaussian_binomial,
    parse_code,
    projective_points,
)
from bsymbol.families import h_matrix, hamming_code
from bsymbol.linalg import FqMatrix, ParseError, Subspace
from conftest import code_set
from oracles import OracleField, full_space, gaussian_count, orth, span, subspaces


def test_code_from_generator_examples():
    F = gf(2)
    C = code_from_generator(FqMatrix.from_rows(F, [[1, 0, 1]]))
    assert (C.n, C.k) == (3, 1)
    I = code_from_generator(FqMatrix.identity(F, 4))
    assert I.k == 4
    D = code_from_generator(FqMatrix.from_rows(F, [[1, 1, 0], [1, 1, 0], [0, 1, 1]]))
    assert D.k == 2


def test_zero_code_rejected():
    with pytest.raises(ZeroCodeError, match="zero code"):
        code_from_generator(FqMatrix.zeros(gf(3), 2, 4))


def test_dual_examples():
    F = gf(2)
    C = LinearCode.from_rows(F, [[1, 0, 1]])
    assert dual(C) == LinearCode.from_rows(F, [[1, 0, 1], [0, 1, 0]])
    assert dual(dual(C)) == C
    with pytest.raises(ZeroCodeError, match="zero dual"):
        dual(LinearCode(FqMatrix.identity(F, 3)))


def test_hamming_dual_is_generated_by_parity_matrix():
    F = gf(2)
    C = hamming_code(F, 3)
    assert dual(C) == LinearCode(h_matrix(F, 3))
    G23 = [[1, 1, 1, 0, 0, 0, 0], [1, 0, 0, 1, 1, 0, 0], [1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 1, 0, 1, 0]]
    assert C == LinearCode.from_rows(F, G23)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 0, 5) == 1
    assert gaussian_binomial(2, 3, 2) == 0
    assert gaussian_binomial(2, 1, 3) == 7


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pg_counts_match_binomial_and_oracle(q, k):
    F = gf(q)
    O = OracleField(q, 1)
    for r in range(k + 1):
        pg = enumerate_pg(F, k, r)
        assert len(pg) == gaussian_binomial(q, r, k)
        assert len({V.key() for V in pg}) == len(pg)
        assert all(V.dim == r for V in pg)
        if q ** k <= 27:
            assert len(pg) == gaussian_count(O, r, k)


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_pg_order_and_complement_pairing(q, k):
    F = gf(q)
    for r in range(k + 1):
        pg = enumerate_pg(F, k, r)
        if 2 * r <= k:
            assert [V.key() for V in pg] == sorted(V.key() for V in pg)
        if 2 * r == k:
            continue
        comp = enumerate_pg(F, k, k - r)
        assert [V.orthogonal_complement() for V in comp] == pg


def test_pg_oracle_complement_sets():
    O = OracleField(2, 1)
    F = gf(2)
    for r in range(4):
        pg = enumerate_pg(F, 3, r)
        got = {frozenset(V.vectors()) for V in pg}
        expected = subspaces(O, full_space(O, 3), r, 3) if r else {frozenset({(0, 0, 0)})}
        assert got == expected
        for V in pg:
            assert frozenset(V.orthogonal_complement().vectors()) == orth(O, frozenset(V.vectors()), 3)


def test_pg_zero_and_bounds():
    F = gf(2)
    [Z] = enumerate_pg(F, 3, 0)
    assert Z.dim == 0
    with pytest.raises(ValueError):
        enumerate_pg(F, 3, 4)


def test_pg_cap():
    with limits.use_limits(subspaces=10):
        with pytest.raises(limits.EnumerationTooLarge, match="enumeration too large"):
            enumerate_pg(gf(2), 4, 2)


def test_projective_points_normalized_and_sorted():
    F = gf(3)
    pts = projective_points(F, 3)
    assert len(pts) == 13
    assert pts == sorted(pts)
    assert all(next(x for x in p if x) == 1 for p in pts)


def test_codeword_enumeration():
    F = gf(2)
    C = LinearCode.from_rows(F, [[1, 0, 1]])
    assert list(enumerate_codewords(C)) == [(0, 0, 0), (1, 0, 1)]
    H = hamming_code(F, 3)
    words = list(enumerate_codewords(H))
    assert len(words) == 16 and len(set(words)) == 16 and words[0] == (0,) * 7
    _, oracle = code_set(H)
    assert set(words) == oracle
    assert [H.codeword(i) for i in range(16)] == words


def test_codewords_satisfy_parity_checks():
    F = gf(3)
    C = LinearCode.from_rows(F, [[1, 2, 0, 1, 1], [0, 1, 1, 2, 0]])
    for c in enumerate_codewords(C):
        for h in C.H.data:
            assert sum(x * y for x, y in zip(c, h)) % 3 == 0
    assert C.H.nrows == 3


def test_codeword_cap():
    C = hamming_code(gf(2), 4)
    with limits.use_limits(codewords=2**10), pytest.raises(limits.EnumerationTooLarge):
        list(enumerate_codewords(C))


def test_generator_kept_when_independent():
    F = gf(2)
    rows = [[0, 1, 1], [1, 1, 0]]
    C = LinearCode.from_rows(F, rows)
    assert [list(r) for r in C.G.data] == rows
    assert C.canonical_generator.data == ((1, 0, 1), (0, 1, 1))


def test_code_file_round_trip():
    C = hamming_code(gf(3), 2)
    text = format_code(C)
    assert text.startswith("generator\n3 1 ")
    assert parse_code(text) == C
    assert parse_code(format_code(C, "parity")) == C


def test_code_file_errors():
    with pytest.raises(ParseError) as info:
        parse_code("gen\n2 1 1 1\n1\n")
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_code("generator\n2 1 1 2\n0 0\n")
    with pytest.raises(ParseError):
        parse_code("")
