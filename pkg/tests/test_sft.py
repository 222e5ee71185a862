import random

import pytest

from ckbundle import (
    ConjugacyStatus,
    IntMatrix,
    SEWitness,
    bowen_franks,
    conjugacy_search,
    conjugate,
    det,
    is_isomorphic,
    k0,
    matmul,
    search_se_witness,
    se_obstruction,
    trace_sequence,
    unimodular_inverse,
    verify_elementary_sse,
    verify_se_witness,
)
from ckbundle.bundle import random_unimodular
from ckbundle.sft import elementary_generators, unimodular_words

from conftest import A2, A3, FIB, random_matrix, random_nonnegative
from oracles import matpow_naive


def test_verify_se_witness_trivial():
    w = SEWitness(r=A2, s=IntMatrix.identity(2), lag=1)
    assert verify_se_witness(A2, A2, w)


def test_verify_se_witness_failures():
    assert not verify_se_witness(A2, A2, SEWitness(IntMatrix.identity(2), IntMatrix.identity(2), 2))
    assert not verify_se_witness(A2, A2, SEWitness(A2, IntMatrix.identity(2), 0))
    assert not verify_se_witness(
        A2, A2, SEWitness(IntMatrix([[1, 0], [0, -1]]), IntMatrix.identity(2), 1)
    )
    with pytest.raises(ValueError):
        verify_se_witness(A2, A2, SEWitness(IntMatrix([[1, 0, 0], [0, 1, 0]]), A2, 1))


def test_verify_se_witness_random_identity_style():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.randint(1, 4)
        a = random_nonnegative(rng, n, 5)
        assert verify_se_witness(a, a, SEWitness(a, IntMatrix.identity(n), 1))


def test_search_se_witness_self():
    w = search_se_witness(A2, A2, max_lag=2, entry_bound=6)
    assert w is not None and verify_se_witness(A2, A2, w)
    # deterministic first hit: identity for r, the matrix itself for s
    assert w == SEWitness(IntMatrix.identity(2), A2, 1)


def test_search_se_witness_obstructed_pair():
    assert search_se_witness(A2, A3, max_lag=3, entry_bound=6) is None
    reason = se_obstruction(A2, A3)
    assert reason is not None and "Bowen-Franks" in reason
    assert se_obstruction(A2, A2) is None


def test_search_se_witness_conjugate_pair():
    # u a u^{-1} is again nonnegative here, and (a @ u^{-1}, u, 1) is a
    # small nonnegative witness, so the bounded search must succeed
    a = FIB
    u = IntMatrix([[1, 0], [1, 1]])
    b = conjugate(a, u)
    assert b == IntMatrix([[0, 1], [1, 1]])
    hand_built = SEWitness(matmul(a, unimodular_inverse(u)), u, 1)
    assert verify_se_witness(a, b, hand_built)
    w = search_se_witness(a, b, max_lag=2, entry_bound=3)
    assert w is not None and verify_se_witness(a, b, w)


def test_verify_elementary_sse_examples():
    a = IntMatrix([[2]])
    r = IntMatrix([[1, 1]])
    s = IntMatrix([[1], [1]])
    b = IntMatrix([[1, 1], [1, 1]])
    assert verify_elementary_sse(a, b, r, s)
    assert verify_elementary_sse(A2, A2, IntMatrix.identity(2), A2)
    assert not verify_elementary_sse(
        IntMatrix([[2]]), IntMatrix([[2]]), IntMatrix([[-2]]), IntMatrix([[-1]])
    )
    with pytest.raises(ValueError):
        verify_elementary_sse(a, b, s, r)


def test_elementary_sse_pairs_share_invariants():
    rng = random.Random(42)
    for _ in range(30):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        r = random_matrix(rng, m, n, 0, 4)
        s = random_matrix(rng, n, m, 0, 4)
        a, b = matmul(r, s), matmul(s, r)
        assert verify_elementary_sse(a, b, r, s)
        # (r, s, 1) is then a shift-equivalence witness as well
        assert verify_se_witness(a, b, SEWitness(r, s, 1))
        assert is_isomorphic(k0(a), k0(b))
        assert is_isomorphic(bowen_franks(a), bowen_franks(b))
        assert trace_sequence(a, 5) == trace_sequence(b, 5)


def test_trace_sequence_examples():
    assert trace_sequence(A2, 2) == [6, 34]
    assert trace_sequence(IntMatrix.identity(2), 3) == [2, 2, 2]
    lucas = [sum(matpow_naive(FIB.to_lists(), k)[i][i] for i in range(2)) for k in range(1, 5)]
    assert lucas == [1, 3, 4, 7]
    assert trace_sequence(FIB, 4) == lucas


def test_elementary_generators():
    gens = elementary_generators(3)
    assert len(gens) == 13  # 12 transvections + sign flip
    for g, g_inv in gens:
        assert matmul(g, g_inv) == IntMatrix.identity(3)
        assert det(g) in (1, -1)


def test_unimodular_words_deduplicated():
    words = list(unimodular_words(2, 2))
    mats = [w for w, _ in words]
    assert mats[0] == IntMatrix.identity(2)
    assert len(mats) == len(set(mats))
    for w, w_inv in words:
        assert matmul(w, w_inv) == IntMatrix.identity(2)


def test_conjugacy_search_self():
    result = conjugacy_search(A2, A2, search_depth=2)
    assert result.status is ConjugacyStatus.CONJUGATE
    assert result.conjugator == IntMatrix.identity(2)


def test_conjugacy_search_round_trip():
    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(2, 3)
        a = random_unimodular(n, rng.randint(1, 4), rng)
        u = random_unimodular(n, 3, rng)
        b = conjugate(a, u)
        result = conjugacy_search(a, b, search_depth=4)
        assert result.status is ConjugacyStatus.CONJUGATE
        v = result.conjugator
        assert det(v) in (1, -1)
        assert conjugate(a, v) == b


def test_conjugacy_search_definitive_obstruction():
    result = conjugacy_search(A2, A3, search_depth=3)
    assert result.status is ConjugacyStatus.NOT_CONJUGATE
    assert "K0" in result.obstruction
    # trace sequences and charpolys of A2 and A3 agree, so only K0 separates
    assert trace_sequence(A2, 2) == trace_sequence(A3, 2)


def test_conjugacy_search_validation():
    with pytest.raises(ValueError):
        conjugacy_search(A2, IntMatrix.identity(3))
    with pytest.raises(ValueError):
        conjugacy_search(IntMatrix([[2, 0], [0, 1]]), IntMatrix.identity(2))


def test_conjugates_pass_trace_prefilter():
    rng = random.Random(44)
    for _ in range(20):
        n = rng.randint(2, 3)
        a = random_unimodular(n, rng.randint(0, 4), rng)
        u = random_unimodular(n, rng.randint(0, 4), rng)
        b = conjugate(a, u)
        assert trace_sequence(a, n) == trace_sequence(b, n)


def test_unknown_result_is_not_a_proof():
    # charpoly t^2 - 12t + 1: both matrices share all checked invariants,
    # but a depth-0 search cannot find a conjugator for distinct matrices
    a = IntMatrix([[11, 2], [5, 1]])
    b = conjugate(a, IntMatrix([[1, 3], [0, 1]]))
    result = conjugacy_search(a, b, search_depth=0)
    assert result.status is ConjugacyStatus.UNKNOWN
    assert result.conjugator is None and result.obstruction is None
