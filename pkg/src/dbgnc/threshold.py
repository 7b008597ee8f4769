"""Threshold BGN decryption: the dealer Shamir-shares q1 over Z_n.

Server i holds d_i = f(i) mod n, split by the dealer as d_i = q1*alpha_i + beta_i.
Its decryption share is c_i = log_{g0}((d_i - beta_i) * C), which satisfies
c_i*g0 + beta_i*C = d_i*C. Interpolating those points with integer Lagrange
weights scaled by D = l! gives A = m*B with B = sum mu_j * (d_j*g).
"""

from dataclasses import dataclass
from math import factorial, gcd, prod
from typing import Tuple

from .dlog import LogQuery, pollard_lambda
from .ec import Point, _check, multi_add, point_add, scalar_mul
from .errors import DecryptionError, DegenerateError, InsufficientSharesError
from .zkp import ZkChallenge, ZkResponse, ZkSession, zk_challenge, zk_respond, zk_verify


@dataclass(frozen=True)
class ShareKey:
    index: int
    d: int
    beta: int
    l: int
    t: int
    log_hi: int  # dealer-computed upper end of the share-log interval


@dataclass(frozen=True)
class VerificationKey:
    index: int
    gi: Point
    l: int
    t: int


@dataclass(frozen=True)
class Proof:
    challenge: ZkChallenge
    session: ZkSession
    response: ZkResponse


@dataclass(frozen=True)
class DecryptionShare:
    index: int
    c: int
    beta: int
    proof: Proof


@dataclass(frozen=True)
class LagrangeContext:
    S: Tuple[int, ...]
    l: int

    def __post_init__(self):
        if len(set(self.S)) != len(self.S):
            raise ValueError("duplicate index in S")
        if not all(1 <= j <= self.l for j in self.S):
            raise ValueError("indices must lie in 1..l")

    @property
    def D(self):
        return factorial(self.l)


def lagrange_mu(ctx, i, j):
    """D * prod_{j' != j} (i - j') / (j - j'), exact in the integers."""
    if j not in ctx.S:
        raise ValueError(f"{j} is not in S")
    others = [k for k in ctx.S if k != j]
    num = ctx.D * prod(i - k for k in others)
    den = prod(j - k for k in others)
    if num % den:
        raise ArithmeticError(f"mu_{i},{j} is not an integer; D={ctx.D} is wrong for S={ctx.S}")
    return num // den


def share_log_bound(d, q1, q2, T):
    """Tightest interval end known to contain c_i.

    c_i = alpha_i*m (mod q2) with m <= T, so alpha_i*T bounds it when
    that is below q2.
    """
    return min((d // q1) * T, q2 - 1)


def deal(pk, sk, l, t, rng, coeff_bound=None):
    """Shamir-share q1 among ``l`` servers with threshold ``t``.

    Coefficients are uniform in Z_n unless ``coeff_bound`` restricts them to
    [0, coeff_bound); small coefficients keep the share logs small enough to
    compute at realistic key sizes.
    """
    if not 1 <= t < l:
        raise ValueError(f"need 1 <= t < l, got t={t}, l={l}")
    n, q1, q2 = pk.n, sk.q1, sk.q2
    if gcd(factorial(l), n) != 1:
        raise ValueError("l! must be coprime to n (q1, q2 > l)")
    upper = n if coeff_bound is None else coeff_bound
    while True:
        coeffs = [q1] + [rng.randrange(upper) for _ in range(t)]
        ds = [sum(c * i**e for e, c in enumerate(coeffs)) % n for i in range(1, l + 1)]
        if not any(d in (0, q1, q2) for d in ds):
            break
    params = pk.params
    shares, vks = [], []
    for i, d in enumerate(ds, start=1):
        shares.append(ShareKey(i, d, d % q1, l, t, share_log_bound(d, q1, q2, pk.T)))
        vks.append(VerificationKey(i, scalar_mul(d, pk.g, params), l, t))
    return shares, vks


def issue_challenge(pk, vk, rng):
    """Verifier side: a fresh proof challenge for server ``vk.index``."""
    return zk_challenge(vk.gi, pk.g, pk.n, pk.params, rng)


def share_decrypt(share, pk, ct, vk, rng, challenge=None, proof_secret=None):
    """Server i's decryption share with its validity proof.

    ``challenge`` is a (ZkChallenge, ZkSession) pair from the verifier;
    one is drawn here when absent. ``proof_secret`` overrides d_i in the
    prover (used to model a cheating server).
    """
    params = pk.params
    _check(ct.C, params)
    target = scalar_mul(share.d - share.beta, ct.C, params)
    c = pollard_lambda(LogQuery(pk.g0, target, 0, share.log_hi), params, rng)
    if c is None:
        raise DecryptionError(f"server {share.index}: share log not found; malformed ciphertext?")
    if challenge is None:
        challenge = issue_challenge(pk, vk, rng)
    ch, session = challenge
    secret = share.d if proof_secret is None else proof_secret
    response = zk_respond(secret, ch, params)
    return DecryptionShare(share.index, c, share.beta, Proof(ch, session, response))


def share_point(pk, ct, share):
    """c_j*g0 + beta_j*C, which equals d_j*C for an honest share."""
    params = pk.params
    return point_add(scalar_mul(share.c, pk.g0, params), scalar_mul(share.beta, ct.C, params), params)


def valid_shares(shares, vks, sessions=None):
    """Shares whose proofs verify. ``sessions`` maps index -> ZkSession the
    verifier retained; without it the session embedded in the share is used."""
    known = {vk.index for vk in vks}
    out = []
    for s in shares:
        if s.index not in known:
            continue
        session = s.proof.session if sessions is None else sessions.get(s.index)
        if session is not None and zk_verify(session, s.proof.response):
            out.append(s)
    return out


def combine(pk, ct, shares, vks, rng=None, sessions=None):
    """Recover m from at least t+1 verified shares (lowest indices used)."""
    if not vks:
        raise InsufficientSharesError("no verification keys")
    l, t = vks[0].l, vks[0].t
    good = sorted(valid_shares(shares, vks, sessions), key=lambda s: s.index)
    dedup = {}
    for s in good:
        dedup.setdefault(s.index, s)
    good = list(dedup.values())
    if len(good) < t + 1:
        raise InsufficientSharesError(f"{len(good)} valid shares, need {t + 1}")
    chosen = good[: t + 1]
    ctx = LagrangeContext(tuple(s.index for s in chosen), l)
    by_index = {vk.index: vk for vk in vks}
    params = pk.params
    mus = [lagrange_mu(ctx, 0, s.index) for s in chosen]
    B = multi_add((scalar_mul(mu, by_index[s.index].gi, params) for mu, s in zip(mus, chosen)), params)
    if B is None:
        raise DegenerateError("interpolated base B is the identity")
    A = multi_add((scalar_mul(mu, share_point(pk, ct, s), params) for mu, s in zip(mus, chosen)), params)
    m = pollard_lambda(LogQuery(B, A, 0, pk.T), params, rng)
    if m is None:
        raise DecryptionError("combined value is outside [0, T]")
    return m
