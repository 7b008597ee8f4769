import itertools
import random
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbgnc.bgn import Ciphertext, bgn_encrypt
from dbgnc.ec import INF, OpCounter, point_add, random_point, sample_point_of_order_n, scalar_mul
from dbgnc.errors import DecryptionError
from dbgnc.v2 import (
    DigitVector, MessageShare, V2Bundle, cost_dbgnc, cost_degecc, degecc_decrypt, degecc_encrypt,
    decode_point, digits_decompose, digits_recompose, eg_decrypt, eg_encrypt, eg_keygen,
    encode_limit, encode_point, naive_bgn_share_encrypt, naive_degecc_roundtrip, shamir_interpolate,
    shamir_split, v2_decrypt, v2_encrypt,
)


class FixedRng:
    def __init__(self, value):
        self.value = value

    def randrange(self, *args):
        return self.value


def poly_eval(coeffs, x, p):
    return sum(c * x**e for e, c in enumerate(coeffs)) % p


# -- Shamir --

def test_shamir_example():
    shares = shamir_split(5, 2, 3, 11, FixedRng(3))
    assert [s.value for s in shares] == [poly_eval([5, 3], i, 11) for i in (1, 2, 3)] == [8, 0, 3]
    assert shamir_interpolate(shares[:2], 11) == 5


def test_shamir_constant():
    assert all(s.value == 9 for s in shamir_split(9, 1, 4, 13, random.Random(0)))
    assert shamir_interpolate([MessageShare(3, 9)], 13) == 9


def test_shamir_subset_sweep():
    rng = random.Random(1)
    for _ in range(50):
        p = rng.choice([11, 97, 257, 65537])
        nshares = rng.randint(1, min(8, p - 1))
        k = rng.randint(1, nshares)
        M = rng.randrange(p)
        shares = shamir_split(M, k, nshares, p, rng)
        for S in itertools.combinations(shares, k):
            assert shamir_interpolate(list(S), p) == M


def test_shamir_secrecy_exhaustive():
    # With k = 2 over GF(11), one share is consistent with every secret.
    p = 11
    for x in range(1, p):
        for y in range(p):
            for M in range(p):
                assert any(poly_eval([M, a], x, p) == y for a in range(p))


def test_shamir_split_errors():
    with pytest.raises(ValueError):
        shamir_split(11, 2, 3, 11, random.Random(0))
    with pytest.raises(ValueError):
        shamir_split(1, 4, 3, 11, random.Random(0))
    with pytest.raises(ValueError):
        shamir_interpolate([MessageShare(1, 2), MessageShare(1, 3)], 11)


# -- digits --

@pytest.mark.parametrize("v, digits", [(12345, (45, 23, 1)), (0, (0,)), (99, (99,)), (100, (0, 1))])
def test_digit_examples(v, digits):
    dv = digits_decompose(v, 100)
    assert dv.digits == digits
    assert digits_recompose(dv) == v


@settings(max_examples=1000, deadline=None)
@given(st.integers(0, 10**30 - 1), st.integers(2, 1000))
def test_digits_roundtrip(v, base):
    dv = digits_decompose(v, base)
    assert all(0 <= d < base for d in dv.digits)
    assert digits_recompose(dv) == v


def test_digit_vector_validation():
    with pytest.raises(ValueError):
        DigitVector((100,))
    with pytest.raises(ValueError):
        DigitVector((3, 0))
    assert digits_recompose(DigitVector((0,))) == 0


# -- v2 BGN --

def test_v2_k1(digit_keys):
    pk, sk = digit_keys
    rng = random.Random(2)
    b = v2_encrypt(pk, 7, 1, 4, 97, rng)
    for i in b.shares:
        assert v2_decrypt(pk, sk, b, [i], rng) == 7
    zero = v2_encrypt(pk, 0, 1, 3, 97, rng)
    assert all(len(cts) == 1 for cts in zero.shares.values())


def test_v2_digit_counts(digit_keys):
    pk, _ = digit_keys
    # k = 1 so every share equals M
    b = v2_encrypt(pk, 12345, 1, 3, 65537, random.Random(3))
    assert all(len(cts) == 3 for cts in b.shares.values())


def test_v2_roundtrip_random(digit_keys):
    pk, sk = digit_keys
    rng = random.Random(4)
    for _ in range(100):
        M = rng.randrange(10007)
        b = v2_encrypt(pk, M, 3, 5, 10007, rng)
        assert v2_decrypt(pk, sk, b, rng.sample(range(1, 6), 3), rng) == M


def test_v2_all_subsets(digit_keys):
    pk, sk = digit_keys
    rng = random.Random(5)
    b = v2_encrypt(pk, 12345, 3, 5, 65537, rng)
    for S in itertools.combinations(range(1, 6), 3):
        assert v2_decrypt(pk, sk, b, S, rng) == 12345


def test_v2_rejects_small_T(toy_keys):
    pk, _ = toy_keys
    with pytest.raises(ValueError):
        v2_encrypt(pk, 5, 1, 2, 11, random.Random(0))


def corrupt(bundle, index, pos, C):
    shares = dict(bundle.shares)
    cts = list(shares[index])
    cts[pos] = Ciphertext(C)
    shares[index] = cts
    return V2Bundle(bundle.k, bundle.prime, bundle.base, shares)


def test_v2_corrupted_digit_detected(medium, medium_keys):
    pk, sk = medium_keys
    rng = random.Random(6)
    b = v2_encrypt(pk, 4321, 1, 2, 65537, rng)  # digits 21, 43
    gap = sk.q2 - sk.q1
    assert gap > 21
    C = b.shares[1][0].C
    # q1*g0 has log q1 = -gap (mod q2), so digit 21 moves outside [0, 99]
    with pytest.raises(DecryptionError):
        v2_decrypt(pk, sk, corrupt(b, 1, 0, point_add(C, pk.g0, medium)), [1], rng)
    with pytest.raises(DecryptionError):
        v2_decrypt(pk, sk, corrupt(b, 1, 0, point_add(C, (medium.pp - 1, 0), medium)), [1], rng)


def test_g0_perturbation_wraps_for_large_digits(medium, medium_keys):
    # Not detectable when the digit is at least q2 - q1: it lands back in range.
    pk, sk = medium_keys
    gap = sk.q2 - sk.q1
    ct = bgn_encrypt(pk, 99, random.Random(7))
    b = V2Bundle(1, 65537, 100, {1: [Ciphertext(point_add(ct.C, pk.g0, medium))]})
    assert v2_decrypt(pk, sk, b, [1]) == 99 - gap


def test_v2_digit_pushed_out_of_range(digit_params, digit_keys):
    pk, sk = digit_keys
    rng = random.Random(7)
    b = v2_encrypt(pk, 50, 1, 2, 97, rng)
    C = b.shares[1][0].C
    bumped = point_add(C, scalar_mul(51, pk.g, digit_params), digit_params)  # digit 101
    with pytest.raises(DecryptionError):
        v2_decrypt(pk, sk, corrupt(b, 1, 0, bumped), [1], rng)


# -- ElGamal --

@pytest.fixture(scope="module")
def eg(toy):
    G = sample_point_of_order_n(toy, random.Random(8))
    return toy, G


def test_eg_keygen_fixed(eg):
    params, G = eg
    q1G = scalar_mul(11, G, params)  # order 13
    kp = eg_keygen(q1G, 13, params, mode="fixed")
    assert kp.nB == 6
    assert kp.KB == scalar_mul(6, q1G, params)


def test_eg_keygen_random(eg):
    params, G = eg
    a = eg_keygen(G, 143, params, rng=random.Random(1))
    b = eg_keygen(G, 143, params, rng=random.Random(2))
    assert a.nB != b.nB
    assert 0 < a.nB < 143 and a.KB == scalar_mul(a.nB, G, params)
    with pytest.raises(ValueError):
        eg_keygen(G, 143, params, mode="other")


def test_eg_forced_r_zero(eg):
    params, G = eg
    kp = eg_keygen(G, 143, params, mode="fixed")
    P = random_point(params, random.Random(9))
    ct = eg_encrypt(kp, P, params, None, r=0)
    assert ct.c1 is INF and ct.c2 == P
    assert eg_decrypt(kp, ct, params) == P


def test_eg_roundtrip(eg):
    params, G = eg
    rng = random.Random(10)
    kp = eg_keygen(G, 143, params, rng=rng)
    for _ in range(100):
        P = random_point(params, rng)
        assert eg_decrypt(kp, eg_encrypt(kp, P, params, rng), params) == P
    for r in range(143):
        assert eg_decrypt(kp, eg_encrypt(kp, P, params, None, r=r), params) == P


def test_encode_exhaustive_toy(toy):
    assert encode_limit(toy) == 7
    for v in range(encode_limit(toy)):
        P = encode_point(v, toy)
        assert point_add(P, INF, toy) == P  # on the curve
        assert decode_point(P) == v
    assert encode_point(0, toy)[0] < 100
    with pytest.raises(ValueError):
        encode_point(encode_limit(toy), toy)


def test_encode_exhaustive_wide(medium):
    for v in range(10**4):
        assert decode_point(encode_point(v, medium)) == v


def test_decode_identity_rejected():
    with pytest.raises(ValueError):
        decode_point(INF)


def test_degecc_pipeline(medium):
    rng = random.Random(11)
    G = sample_point_of_order_n(medium, rng)
    kp = eg_keygen(G, medium.n, medium, rng=rng)
    for _ in range(20):
        M = rng.randrange(10007)
        b = degecc_encrypt(kp, M, 3, 5, 10007, medium, rng)
        for S in itertools.combinations(range(1, 6), 3):
            assert degecc_decrypt(kp, b, S, medium) == M


# -- cost models --

def test_cost_examples():
    assert cost_degecc(3, 10) == 18
    assert cost_degecc(0, 0) == 2
    assert cost_dbgnc(3, 10, 4) == (13, 2)
    assert cost_dbgnc(0, 0, 0) == (0, 0)
    assert cost_degecc(4, 10) - cost_degecc(3, 10) == 2
    assert cost_degecc(3, 11) - cost_degecc(3, 10) == 1
    with pytest.raises(ValueError):
        cost_degecc(-1, 0)


def test_naive_degecc_count_matches_model(eg):
    params, G = eg
    for nB in range(0, 51, 7):
        kp = replace(eg_keygen(G, 143, params, mode="fixed"), nB=nB, KB=scalar_mul(nB, G, params))
        P = encode_point(3, params)
        for r in range(0, 51, 5):
            c = OpCounter()
            out = naive_degecc_roundtrip(kp, P, r, params.counting(c))
            assert out == P
            assert c.additions == cost_degecc(r, nB)


def test_naive_bgn_count_matches_model(toy_keys, toy):
    pk, _ = toy_keys
    for Mi in range(0, 13):
        for r in range(0, 50, 7):
            c = OpCounter()
            counted = replace(pk, params=pk.params.counting(c))
            ct = naive_bgn_share_encrypt(counted, Mi, r)
            assert c.additions == cost_dbgnc(r, Mi, 1)[0]
            assert ct == bgn_encrypt(pk, Mi, None, r=r)
