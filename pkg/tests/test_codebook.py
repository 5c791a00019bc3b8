import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from grand_edge.codebook import encode, generate_rlc, is_codeword, recover_message
from grand_edge.gf2 import matmul, rank
from oracles import all_messages, naive_matvec


@given(st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1))),
       st.integers(0, 2**32 - 1))
def test_generator_parity_orthogonal(nk, seed):
    n, k = nk
    code = generate_rlc(n, k, seed)
    assert code.generator.shape == (k, n)
    assert code.parity_check.shape == (n - k, n)
    assert not matmul(code.generator, code.parity_check.T).any()
    assert rank(code.generator) == k
    assert rank(code.parity_check) == n - k


def test_tiny_code_orthogonal():
    code = generate_rlc(4, 2, seed=99)
    assert not matmul(code.generator, code.parity_check.T).any()


def test_deterministic_per_seed():
    a, b = generate_rlc(128, 105, 7), generate_rlc(128, 105, 7)
    assert np.array_equal(a.generator, b.generator)
    assert np.array_equal(a.parity_check, b.parity_check)
    assert not np.array_equal(a.generator, generate_rlc(128, 105, 8).generator)


@pytest.mark.parametrize("n,k", [(4, 0), (4, 4), (3, 5)])
def test_invalid_dimensions(n, k):
    with pytest.raises(ValueError):
        generate_rlc(n, k, 0)


def test_all_codewords_pass_membership(code16):
    for u in all_messages(code16.k):
        c = encode(code16, u)
        assert not naive_matvec(code16.parity_check, c).any()
        assert is_codeword(code16, c)


def test_encode_zero_and_unit_vectors(code16):
    assert not encode(code16, np.zeros(10, dtype=np.uint8)).any()
    for i in range(code16.k):
        e = np.zeros(code16.k, dtype=np.uint8)
        e[i] = 1
        assert np.array_equal(encode(code16, e), code16.generator[i])
        assert np.array_equal(recover_message(code16, code16.generator[i]), e)


def test_systematic_prefix(code16, rng):
    for _ in range(50):
        u = rng.integers(0, 2, code16.k, dtype=np.uint8)
        assert np.array_equal(encode(code16, u)[: code16.k], u)


def test_round_trip_exhaustive(code16):
    seen = set()
    for u in all_messages(code16.k):
        c = encode(code16, u)
        assert np.array_equal(recover_message(code16, c), u)
        seen.add(c.tobytes())
    assert len(seen) == 2**code16.k  # encode is injective


def test_single_flips_leave_code(code16):
    assert is_codeword(code16, np.zeros(16, dtype=np.uint8))
    for u in all_messages(code16.k)[::37]:
        c = encode(code16, u)
        for i in range(code16.n):
            r = c.copy()
            r[i] ^= 1
            assert not is_codeword(code16, r)


def test_length_checks(code16):
    with pytest.raises(ValueError):
        encode(code16, np.zeros(9, dtype=np.uint8))
    with pytest.raises(ValueError):
        is_codeword(code16, np.zeros(15, dtype=np.uint8))
