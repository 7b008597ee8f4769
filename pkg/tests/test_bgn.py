import random

import pytest

from dbgnc.bgn import Ciphertext, bgn_decrypt, bgn_encrypt, bgn_keygen, ct_add
from dbgnc.ec import INF, point_add, scalar_mul
from dbgnc.errors import DecryptionError


def test_keygen_orders(toy, toy_keys):
    pk, sk = toy_keys
    assert scalar_mul(11, pk.h, toy) is INF
    assert scalar_mul(13, pk.g0, toy) is INF
    assert scalar_mul(143, pk.g, toy) is INF and scalar_mul(143, pk.u, toy) is INF
    assert pk.u not in (pk.g, (pk.g[0], -pk.g[1] % toy.pp))
    assert (sk.q1, sk.q2) == (11, 13)
    assert pk.params.q1 is None and pk.params.q2 is None


def test_keygen_rejects_large_T(toy):
    with pytest.raises(ValueError):
        bgn_keygen(toy, 100, random.Random(0))


def test_encrypt_forced_r(toy_keys):
    pk, _ = toy_keys
    assert bgn_encrypt(pk, 0, None, r=0).C is INF
    assert bgn_encrypt(pk, 1, None, r=0).C == pk.g


def test_encrypt_rejects_out_of_range(toy_keys):
    pk, _ = toy_keys
    with pytest.raises(ValueError):
        bgn_encrypt(pk, pk.T + 1, random.Random(0))
    with pytest.raises(ValueError):
        bgn_encrypt(pk, -1, random.Random(0))


def test_roundtrip_all_messages_all_r_toy(toy_keys):
    pk, sk = toy_keys
    for m in range(pk.T + 1):
        for r in range(0, pk.n, 7):
            assert bgn_decrypt(pk, sk, bgn_encrypt(pk, m, None, r=r)) == m


def test_correctness_identity(toy, toy_keys):
    # q1 * C == m * (q1 * g) exactly.
    pk, sk = toy_keys
    rng = random.Random(1)
    for _ in range(200):
        m, r = rng.randint(0, pk.T), rng.randrange(pk.n)
        C = bgn_encrypt(pk, m, None, r=r).C
        assert scalar_mul(sk.q1, C, toy) == scalar_mul(m, scalar_mul(sk.q1, pk.g, toy), toy)
        assert scalar_mul(pk.n, C, toy) is INF


def test_randomization(toy_keys):
    pk, _ = toy_keys
    for r1 in range(11):
        for r2 in range(11):
            if r1 != r2:
                assert bgn_encrypt(pk, 5, None, r=r1) != bgn_encrypt(pk, 5, None, r=r2)


def test_out_of_range_is_not_found(medium, medium_keys):
    pk, sk = medium_keys
    with pytest.raises(DecryptionError):
        bgn_decrypt(pk, sk, Ciphertext(scalar_mul(pk.T + 1, pk.g, medium)))


def test_toy_wraps_modulo_q2(toy, toy_keys):
    # T + 1 = q2 on the toy curve, so (T+1)*g is indistinguishable from 0.
    pk, sk = toy_keys
    assert bgn_decrypt(pk, sk, Ciphertext(scalar_mul(pk.T + 1, pk.g, toy))) == 0


def test_homomorphic_addition(medium_keys):
    pk, sk = medium_keys
    rng = random.Random(2)
    zero = ct_add(pk, bgn_encrypt(pk, 0, rng), bgn_encrypt(pk, 0, rng))
    assert bgn_decrypt(pk, sk, zero) == 0
    assert bgn_decrypt(pk, sk, ct_add(pk, bgn_encrypt(pk, 2, rng), bgn_encrypt(pk, 3, rng))) == 5
    with pytest.raises(DecryptionError):
        bgn_decrypt(pk, sk, ct_add(pk, bgn_encrypt(pk, pk.T, rng), bgn_encrypt(pk, 1, rng)))


def test_roundtrip_medium(medium_keys):
    pk, sk = medium_keys
    rng = random.Random(3)
    for _ in range(100):
        m = rng.randint(0, pk.T)
        assert bgn_decrypt(pk, sk, bgn_encrypt(pk, m, rng)) == m


def test_foreign_subgroup_ciphertext(medium, medium_keys):
    pk, sk = medium_keys
    two_torsion = (medium.pp - 1, 0)
    C = point_add(bgn_encrypt(pk, 3, random.Random(0)).C, two_torsion, medium)
    with pytest.raises(DecryptionError):
        bgn_decrypt(pk, sk, Ciphertext(C))
