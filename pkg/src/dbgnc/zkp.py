"""Interactive proof that a prover knows s behind a public point vk = s*g.

The verifier sends (a*g, t1, t2) where t = coords(a*vk) * coords(b*g)
componentwise; only a holder of s can strip coords(s*a*g) = coords(a*vk)
and hand back coords(b*g).
"""

from dataclasses import dataclass
from math import gcd

from .ec import Point, _check, scalar_mul
from .errors import DegenerateError, RetryExhaustedError
from .primes import inverse_mod

CHALLENGE_RETRIES = 256


@dataclass(frozen=True)
class ZkChallenge:
    aG: Point
    t1: int
    t2: int


@dataclass(frozen=True)
class ZkSession:
    """What the verifier keeps: the coordinates of b*g."""

    b1: int
    b2: int


@dataclass(frozen=True)
class ZkResponse:
    z1: int
    z2: int


def _usable(P):
    return P is not None and P[0] != 0 and P[1] != 0


def zk_challenge(vk, g, order, params, rng, retries=CHALLENGE_RETRIES):
    """Draw a, b in [1, order-1] and build the challenge for ``vk``.

    ``order`` is the order of ``g`` (n for the BGN generator). An ``a``
    sharing a factor with ``order`` is redrawn: a*g would then live in a
    proper subgroup and any s' congruent to s modulo its order would pass.
    """
    _check(vk, params)
    if vk is None:
        raise ValueError("verification point must not be the identity")
    p = params.pp
    for _ in range(retries):
        a = rng.randrange(1, order)
        b = rng.randrange(1, order)
        if gcd(a, order) != 1:
            continue
        avk = scalar_mul(a, vk, params)
        bg = scalar_mul(b, g, params)
        ag = scalar_mul(a, g, params)
        if _usable(avk) and _usable(bg) and _usable(ag):
            challenge = ZkChallenge(aG=ag, t1=avk[0] * bg[0] % p, t2=avk[1] * bg[1] % p)
            return challenge, ZkSession(b1=bg[0], b2=bg[1])
    raise RetryExhaustedError("could not draw a non-degenerate challenge")


def zk_respond(s, challenge, params):
    r = scalar_mul(s, challenge.aG, params)
    if not _usable(r):
        raise DegenerateError("s*aG is degenerate; ask for a fresh challenge")
    p = params.pp
    return ZkResponse(
        z1=challenge.t1 * inverse_mod(r[0], p) % p,
        z2=challenge.t2 * inverse_mod(r[1], p) % p,
    )


def zk_verify(session, response):
    return (response.z1, response.z2) == (session.b1, session.b2)
