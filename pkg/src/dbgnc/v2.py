"""Message-sharing distribution of BGN and the distributed ElGamal baseline.

Both split the message M with Shamir over a prime field GF(p'), then
encrypt each share separately: BGN encrypts the base-100 digits of a share,
ElGamal encrypts a point encoding of it.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .bgn import Ciphertext, bgn_encrypt
from .dlog import LogQuery, pollard_lambda
from .ec import Point, _check, point_add, point_neg, point_sub, scalar_mul
from .errors import DecryptionError, RetryExhaustedError
from .primes import is_quadratic_residue, sqrt_mod

DIGIT_BASE = 100
KAPPA = 100


# -- Shamir over GF(p') ------------------------------------------------------

@dataclass(frozen=True)
class MessageShare:
    index: int
    value: int


def shamir_split(M, k, nshares, prime, rng):
    if not 1 <= k <= nshares:
        raise ValueError(f"need 1 <= k <= nshares, got k={k}, nshares={nshares}")
    if not prime > max(M, nshares):
        raise ValueError(f"prime {prime} must exceed max(M, nshares)")
    if M < 0:
        raise ValueError("message must be non-negative")
    coeffs = [M] + [rng.randrange(prime) for _ in range(k - 1)]
    return [MessageShare(i, _horner(coeffs, i) % prime) for i in range(1, nshares + 1)]


def _horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def shamir_interpolate(shares, prime):
    """f(0) by Lagrange interpolation modulo ``prime``."""
    xs = [s.index for s in shares]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate share index")
    total = 0
    for s in shares:
        num = den = 1
        for x in xs:
            if x != s.index:
                num = num * -x % prime
                den = den * (s.index - x) % prime
        total += s.value * num * pow(den, -1, prime)
    return total % prime


# -- digits ------------------------------------------------------------------

@dataclass(frozen=True)
class DigitVector:
    digits: Tuple[int, ...]
    base: int = DIGIT_BASE

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if not self.digits:
            raise ValueError("empty digit vector")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digit out of range for base {self.base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("trailing zero digit")


def digits_decompose(v, base=DIGIT_BASE):
    """Little-endian digits of v >= 0."""
    if v < 0:
        raise ValueError("negative value")
    if base < 2:
        raise ValueError("base must be at least 2")
    out = []
    while True:
        v, d = divmod(v, base)
        out.append(d)
        if v == 0:
            return DigitVector(tuple(out), base)


def digits_recompose(dv):
    return sum(d * dv.base**i for i, d in enumerate(dv.digits))


# -- BGN over shares ----------------------------------------------------------

@dataclass(frozen=True)
class V2Bundle:
    """Digit ciphertexts for every share, little-endian per share."""

    k: int
    prime: int
    base: int
    shares: Dict[int, List[Ciphertext]]


def v2_encrypt(pk, M, k, nshares, prime, rng, base=DIGIT_BASE):
    if pk.T < base - 1:
        raise ValueError(f"T={pk.T} cannot decrypt base-{base} digits")
    out = {}
    for share in shamir_split(M, k, nshares, prime, rng):
        dv = digits_decompose(share.value, base)
        out[share.index] = [bgn_encrypt(pk, d, rng) for d in dv.digits]
    return V2Bundle(k=k, prime=prime, base=base, shares=out)


def _decrypt_digit(pk, sk, ct, base, rng):
    # Same as bgn_decrypt but over the digit range [0, base-1].
    params = pk.params
    target = scalar_mul(sk.q1, ct.C, params)
    d = pollard_lambda(LogQuery(pk.g0, target, 0, base - 1), params, rng)
    if d is None:
        raise DecryptionError("digit ciphertext does not decrypt into the digit range")
    return d


def v2_decrypt_share(pk, sk, cts, base=DIGIT_BASE, rng=None):
    digits = [_decrypt_digit(pk, sk, ct, base, rng) for ct in cts]
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    return digits_recompose(DigitVector(tuple(digits), base))


def v2_decrypt(pk, sk, bundle, subset, rng=None):
    subset = list(subset)
    if len(subset) < bundle.k:
        raise ValueError(f"need at least {bundle.k} shares, got {len(subset)}")
    missing = [i for i in subset if i not in bundle.shares]
    if missing:
        raise ValueError(f"no such share index: {missing}")
    shares = [MessageShare(i, v2_decrypt_share(pk, sk, bundle.shares[i], bundle.base, rng)) for i in subset]
    return shamir_interpolate(shares, bundle.prime)


# -- ElGamal baseline ----------------------------------------------------------

@dataclass(frozen=True)
class EgKeyPair:
    nB: int
    KB: Point
    G: Point
    q: int


@dataclass(frozen=True)
class EgCiphertext:
    c1: Point
    c2: Point


def eg_keygen(G, q, params, mode="random", rng=None):
    """``mode='fixed'`` uses nB = floor(q/2) as in the timing comparison."""
    if mode == "fixed":
        nB = q // 2
    elif mode == "random":
        nB = (rng or random).randrange(1, q)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return EgKeyPair(nB=nB, KB=scalar_mul(nB, G, params), G=G, q=q)


def eg_encrypt(kp, P, params, rng, r=None):
    _check(P, params)
    if r is None:
        r = rng.randrange(1, kp.q)
    return EgCiphertext(scalar_mul(r, kp.G, params), point_add(P, scalar_mul(r, kp.KB, params), params))


def eg_decrypt(kp, ct, params):
    return point_sub(ct.c2, scalar_mul(kp.nB, ct.c1, params), params)


def encode_limit(params, kappa=KAPPA):
    """Exclusive upper bound on encodable values."""
    return (params.pp - kappa) // kappa


def encode_point(v, params, kappa=KAPPA):
    """Koblitz-style embedding: x = v*kappa + j for the first j making
    x^3 + 1 a square; y is the smaller root."""
    if not 0 <= v < encode_limit(params, kappa):
        raise ValueError(f"value {v} outside the encodable range")
    p = params.pp
    for j in range(kappa):
        x = v * kappa + j
        rhs = (x * x * x + 1) % p
        if is_quadratic_residue(rhs, p):
            y = sqrt_mod(rhs, p)
            return x, min(y, p - y)
    raise RetryExhaustedError(f"no encodable x for {v}")


def decode_point(P, kappa=KAPPA):
    if P is None:
        raise ValueError("the identity does not encode a value")
    return P[0] // kappa


@dataclass(frozen=True)
class EgBundle:
    k: int
    prime: int
    shares: Dict[int, EgCiphertext]


def degecc_encrypt(kp, M, k, nshares, prime, params, rng):
    out = {}
    for share in shamir_split(M, k, nshares, prime, rng):
        out[share.index] = eg_encrypt(kp, encode_point(share.value, params), params, rng)
    return EgBundle(k=k, prime=prime, shares=out)


def degecc_decrypt(kp, bundle, subset, params):
    subset = list(subset)
    if len(subset) < bundle.k:
        raise ValueError(f"need at least {bundle.k} shares, got {len(subset)}")
    shares = [MessageShare(i, decode_point(eg_decrypt(kp, bundle.shares[i], params))) for i in subset]
    return shamir_interpolate(shares, bundle.prime)


# -- cost models -----------------------------------------------------------

def cost_degecc(r, nB):
    """Point additions to encrypt and decrypt one point with naive scalar
    multiplication: r + r + 1 + nB + 1."""
    if r < 0 or nB < 0:
        raise ValueError("negative input")
    return 2 * r + 2 + nB


def cost_dbgnc(r, Mi, s):
    """(point additions, expected kangaroo runs) for one share."""
    if min(r, Mi, s) < 0:
        raise ValueError("negative input")
    return r + Mi, Fraction(s, 2)


def naive_mul(k, P, params):
    """k*P as k successive additions starting from the identity."""
    R = None
    for _ in range(k):
        R = point_add(R, P, params)
    return R


def naive_degecc_roundtrip(kp, P, r, params):
    """Encrypt then decrypt one point with repeated addition throughout.
    Counts exactly cost_degecc(r, nB) additions on an instrumented params."""
    c1 = naive_mul(r, kp.G, params)
    c2 = point_add(P, naive_mul(r, kp.KB, params), params)
    mask = naive_mul(kp.nB, c1, params)
    return point_add(c2, point_neg(mask, params), params)


def naive_bgn_share_encrypt(pk, Mi, r):
    """C_i = Mi*g + r*h built on one accumulator by repeated addition,
    r + Mi additions."""
    params = pk.params
    acc = None
    for _ in range(Mi):
        acc = point_add(acc, pk.g, params)
    for _ in range(r):
        acc = point_add(acc, pk.h, params)
    return Ciphertext(acc)

