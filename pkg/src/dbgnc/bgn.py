"""Boneh-Goh-Nissim encryption on the order-n subgroup of y^2 = x^3 + 1.

C = m*g + r*h with h = q2*u of order q1. Multiplying by q1 kills the
r*h term, so m is the log of q1*C to the base q1*g = g0 over [0, T].
"""

from dataclasses import dataclass

from .dlog import LogQuery, pollard_lambda
from .ec import CurveParams, Point, _check, point_add, point_neg, sample_point_of_order_n, scalar_mul
from .errors import DecryptionError


@dataclass(frozen=True)
class PublicKey:
    params: CurveParams
    g: Point
    u: Point
    h: Point
    g0: Point
    T: int

    @property
    def n(self):
        return self.params.n


@dataclass(frozen=True)
class PrivateKey:
    q1: int
    q2: int


@dataclass(frozen=True)
class Ciphertext:
    C: Point


def bgn_keygen(params, T, rng):
    """Sample independent generators g, u of the order-n subgroup.

    ``params`` must be the dealer's copy (with q1, q2). The returned public
    key holds only the public curve parameters.
    """
    if params.q1 is None:
        raise ValueError("key generation needs the factorization of n")
    q1, q2 = params.q1, params.q2
    if not 0 < T < q2:
        raise ValueError(f"message bound T={T} must satisfy 0 < T < q2")
    g = sample_point_of_order_n(params, rng)
    while True:
        u = sample_point_of_order_n(params, rng)
        if u != g and u != point_neg(g, params):
            break
    h = scalar_mul(q2, u, params)
    g0 = scalar_mul(q1, g, params)
    pk = PublicKey(params=params.public(), g=g, u=u, h=h, g0=g0, T=T)
    return pk, PrivateKey(q1=q1, q2=q2)


def bgn_encrypt(pk, m, rng, r=None):
    if not 0 <= m <= pk.T:
        raise ValueError(f"plaintext {m} outside [0, {pk.T}]")
    if r is None:
        r = rng.randrange(pk.n)
    params = pk.params
    return Ciphertext(point_add(scalar_mul(m, pk.g, params), scalar_mul(r, pk.h, params), params))


def bgn_decrypt(pk, sk, ct, rng=None):
    params = pk.params
    _check(ct.C, params)
    target = scalar_mul(sk.q1, ct.C, params)
    m = pollard_lambda(LogQuery(pk.g0, target, 0, pk.T), params, rng)
    if m is None:
        raise DecryptionError("ciphertext does not decrypt into [0, T]")
    return m


def ct_add(pk, c1, c2):
    return Ciphertext(point_add(c1.C, c2.C, pk.params))
