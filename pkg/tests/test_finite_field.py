import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_inverse, brute_nullity, brute_residues
from phasepoint.errors import NotPrime, ZeroArgument, ZeroInverse
from phasepoint.finite_field import (
    FieldElem,
    check_odd_prime,
    det_mod,
    field_inv,
    inv_matrix_mod,
    inv_mod,
    is_prime,
    lemma2_witness,
    matmul_mod,
    nullity_mod,
    nullspace_mod,
    rank_mod,
    residue_intersection_count,
    residue_intersection_formula,
    residue_sets,
    sqrt_minus_one,
    sqrt_mod,
)

PRIMES = [3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("N,x,want", [(7, 3, 5), (5, 4, 4), (11, 2, 6)])
def test_inverse_examples(N, x, want):
    assert inv_mod(x, N) == want
    assert field_inv(FieldElem(x, N)) == FieldElem(want, N)


@pytest.mark.parametrize("N", PRIMES)
def test_inverse_matches_scan(N):
    for x in range(1, N):
        assert inv_mod(x, N) == brute_inverse(x, N)
        assert inv_mod(x - N, N) == brute_inverse(x, N)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        inv_mod(0, 7)
    with pytest.raises(ZeroInverse):
        field_inv(FieldElem(14, 7))


@pytest.mark.parametrize("n", [1, 2, 4, 9, 15, 21, -3])
def test_non_odd_primes_rejected(n):
    with pytest.raises(NotPrime):
        check_odd_prime(n)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "N,Q,Qbar", [(3, {1}, {2}), (5, {1, 4}, {2, 3}), (7, {1, 2, 4}, {3, 5, 6})]
)
def test_residue_set_examples(N, Q, Qbar):
    rs = residue_sets(N)
    assert rs.Q == Q and rs.Qbar == Qbar


@pytest.mark.parametrize("N", PRIMES)
def test_residue_sets_properties(N):
    rs = residue_sets(N)
    Q, Qb = brute_residues(N)
    assert rs.Q == Q and rs.Qbar == Qb
    assert len(Q) == len(Qb) == (N - 1) // 2
    assert ((N - 1) in Q) == (N % 4 == 1)
    prod = lambda A, B: {a * b % N for a in A for b in B}  # noqa: E731
    assert prod(Q, Q) == Q and prod(Qb, Qb) == Q and prod(Q, Qb) == Qb
    assert rs.nu == min(Qb)
    assert rs.is_residue(4) and rs.is_nonresidue(rs.nu)
    assert len({pow(rs.theta, k, N) for k in range(N - 1)}) == N - 1


@pytest.mark.parametrize("N", PRIMES)
def test_sqrt(N):
    Q, _ = brute_residues(N)
    for x in Q | {0}:
        r = sqrt_mod(x, N)
        assert r * r % N == x
        assert r <= N - r or r == 0
    i = sqrt_minus_one(N)
    if N % 4 == 1:
        assert i * i % N == N - 1
    else:
        assert i is None


@pytest.mark.parametrize("N,x,want", [(5, 1, 1), (5, 2, 0), (7, 1, 1)])
def test_intersection_examples(N, x, want):
    rs = residue_sets(N)
    assert residue_intersection_count(x, rs) == want
    assert residue_intersection_formula(x, rs) == want


def test_intersection_rejects_zero():
    with pytest.raises(ZeroArgument):
        residue_intersection_count(0, residue_sets(5))


@pytest.mark.parametrize("N", PRIMES)
def test_intersection_formula_brute(N):
    Q, Qb = brute_residues(N)
    for x in range(1, N):
        direct = len(Qb & {(y - x) % N for y in Qb})
        if N % 4 == 3:
            closed = (N - 3) // 4
        else:
            closed = (N - 1) // 4 if x in Q else (N - 5) // 4
        assert direct == closed == residue_intersection_count(x, residue_sets(N))


def test_witness_examples():
    assert lemma2_witness(1, 0, 5) == 0
    assert lemma2_witness(2, 1, 5) == 0
    q = lemma2_witness(3, 5, 7)
    assert q in {0, 1, 2, 4} and (3 * q + 5) % 7 in {0, 1, 2, 4}
    assert lemma2_witness(FieldElem(3, 7), FieldElem(5, 7)) == q
    with pytest.raises(ZeroArgument):
        lemma2_witness(0, 1, 7)


@pytest.mark.parametrize("N", PRIMES)
def test_witness_always_exists(N):
    sq = brute_residues(N)[0] | {0}
    for mu in range(1, N):
        for nu in range(N):
            q = lemma2_witness(mu, nu, N)
            assert q in sq and (mu * q + nu) % N in sq


@given(st.sampled_from(PRIMES), st.integers(-100, 100), st.integers(-100, 100))
def test_field_elem_arithmetic(N, a, b):
    x, y = FieldElem(a, N), FieldElem(b, N)
    assert (x + y).value == (a + b) % N
    assert (x - y).value == (a - b) % N
    assert (x * y).value == (a * b) % N
    assert (-x).value == (-a) % N
    if b % N:
        assert (x / y * y) == x


@pytest.mark.parametrize("N", [3, 5])
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_rank_nullity_against_enumeration(N, data):
    rows = data.draw(st.integers(1, 3))
    cols = data.draw(st.integers(1, 4))
    M = np.array(data.draw(st.lists(st.integers(0, N - 1), min_size=rows * cols, max_size=rows * cols))).reshape(rows, cols)
    k = nullity_mod(M, N)
    assert k == brute_nullity(M, N)
    assert rank_mod(M, N) + k == cols
    B = nullspace_mod(M, N)
    assert B.shape[0] == k
    if k:
        assert not matmul_mod(M, B.T, N).any()


@pytest.mark.parametrize("N", [5, 7])
def test_inverse_and_det(N):
    rng = np.random.default_rng(1)
    done = 0
    while done < 20:
        M = rng.integers(0, N, (4, 4))
        if det_mod(M, N) == 0:
            continue
        Mi = inv_matrix_mod(M, N)
        assert (matmul_mod(M, Mi, N) == np.eye(4, dtype=int)).all()
        assert det_mod(M, N) * det_mod(Mi, N) % N == 1
        assert det_mod(M, N) == round(np.linalg.det(M)) % N
        done += 1
