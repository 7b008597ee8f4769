"""Arithmetic on the supersingular curve y^2 = x^3 + 1 over GF(pp).

Points are affine ``(x, y)`` tuples of ints; the point at infinity is
``None`` (exported as ``INF``). All group operations take a
:class:`CurveParams`, which may carry an :class:`OpCounter` used by the
benchmark to count group additions.
"""

from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from .errors import NotOnCurveError, RetryExhaustedError
from .primes import cube_root_mod, inverse_mod, is_probable_prime, next_prime

Point = Optional[Tuple[int, int]]
INF: Point = None

SAMPLE_RETRIES = 256


@dataclass
class OpCounter:
    """Mutable tally of group additions and discrete-log work."""

    additions: int = 0
    lambda_calls: int = 0
    lambda_steps: int = 0

    def reset(self):
        self.additions = self.lambda_calls = self.lambda_steps = 0


@dataclass(frozen=True)
class CurveParams:
    """Curve y^2 = x^3 + 1 over GF(pp) with pp + 1 = cofactor * n.

    ``q1``/``q2`` (the factorization of n) are only present on the dealer's
    copy; :meth:`public` strips them.
    """

    pp: int
    n: int
    cofactor: int
    q1: Optional[int] = None
    q2: Optional[int] = None
    counter: Optional[OpCounter] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.pp % 3 != 2:
            raise ValueError("pp must be 2 modulo 3")
        if self.pp + 1 != self.cofactor * self.n:
            raise ValueError("pp + 1 must equal cofactor * n")
        if (self.q1 is None) != (self.q2 is None):
            raise ValueError("q1 and q2 must be given together")
        if self.q1 is not None and (self.q1 * self.q2 != self.n or self.q1 == self.q2):
            raise ValueError("n must be the product of two distinct primes q1, q2")

    @property
    def group_order(self):
        return self.pp + 1

    def public(self):
        return replace(self, q1=None, q2=None)

    def counting(self, counter):
        """A copy of these params whose operations tally into ``counter``."""
        return replace(self, counter=counter)

    def validate(self):
        """Full primality check (expensive; not run on construction)."""
        if not is_probable_prime(self.pp):
            raise ValueError("pp is not prime")
        if self.q1 is not None:
            if not (is_probable_prime(self.q1) and is_probable_prime(self.q2)):
                raise ValueError("q1 and q2 must be prime")
        return self


def _count(params, k):
    if params.counter is not None:
        params.counter.additions += k


def is_on_curve(P, params):
    if P is None:
        return True
    x, y = P
    p = params.pp
    if not (0 <= x < p and 0 <= y < p):
        return False
    return (y * y - x * x * x - 1) % p == 0


def _check(P, params):
    if not is_on_curve(P, params):
        raise NotOnCurveError(f"point {P} is not on y^2 = x^3 + 1 over GF({params.pp})")


def _add(P, Q, p):
    # Unchecked, uncounted chord-tangent law.
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = 3 * x1 * x1 * inverse_mod(2 * y1, p) % p
    else:
        lam = (y2 - y1) * inverse_mod(x2 - x1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def point_neg(P, params):
    if P is None:
        return None
    x, y = P
    return x, (-y) % params.pp


def point_add(P, Q, params):
    _check(P, params)
    _check(Q, params)
    _count(params, 1)
    return _add(P, Q, params.pp)


def point_sub(P, Q, params):
    return point_add(P, point_neg(Q, params), params)


def _mul(k, P, p):
    # Left-to-right double-and-add for k >= 0; returns (k*P, additions used).
    if k == 0 or P is None:
        return None, 0
    R = P
    ops = 0
    for bit in bin(k)[3:]:
        R = _add(R, R, p)
        ops += 1
        if bit == "1":
            R = _add(R, P, p)
            ops += 1
    return R, ops


def scalar_mul(k, P, params):
    """k*P by double-and-add; negative k multiplies -P by |k|."""
    _check(P, params)
    if k < 0:
        k, P = -k, point_neg(P, params)
    R, ops = _mul(k, P, params.pp)
    _count(params, ops)
    return R


def multi_add(points, params):
    """Sum of an iterable of points."""
    acc = None
    for P in points:
        acc = point_add(acc, P, params)
    return acc


def enumerate_points(params):
    """Every point of the curve, by brute force (tiny fields only)."""
    p = params.pp
    squares = {}
    for y in range(p):
        squares.setdefault(y * y % p, []).append(y)
    points = [None]
    for x in range(p):
        for y in squares.get((x * x * x + 1) % p, []):
            points.append((x, y))
    return points


def random_point(params, rng):
    """Uniform random finite point.

    Since pp = 2 mod 3, cubing is a bijection of GF(pp), so every y gives
    exactly one x = cbrt(y^2 - 1).
    """
    p = params.pp
    y = rng.randrange(p)
    return cube_root_mod(y * y - 1, p), y


def generate_parameters(q1_seed):
    """Chained next_prime for q1 < q2, then the smallest cofactor l with
    l*n - 1 prime and not 1 mod 3."""
    q1 = next_prime(q1_seed)
    q2 = next_prime(q1)
    if q1 == q2:  # pragma: no cover - next_prime is strictly increasing
        raise ValueError("q1 and q2 coincide")
    n = q1 * q2
    cofactor = 1
    pp = n - 1
    while not is_probable_prime(pp) or pp % 3 == 1:
        cofactor += 1
        pp = cofactor * n - 1
    return CurveParams(pp=pp, n=n, cofactor=cofactor, q1=q1, q2=q2)


def random_parameters(q1_bits, rng):
    """Parameters whose q1 has exactly ``q1_bits`` bits (seed drawn from rng)."""
    if q1_bits < 3:
        raise ValueError("q1_bits must be at least 3")
    seed = rng.getrandbits(q1_bits - 1) | (1 << (q1_bits - 1))
    seed = min(seed, (1 << q1_bits) - (1 << (q1_bits // 2)))
    return generate_parameters(seed)


def sample_point_of_order_n(params, rng, retries=SAMPLE_RETRIES):
    """A point of exact order n = q1*q2 via cofactor clearing.

    Needs the factorization, so this runs on the dealer's params.
    """
    if params.q1 is None:
        raise ValueError("sampling a point of order n needs q1 and q2")
    p = params.pp
    for _ in range(retries):
        R = random_point(params, rng)
        Q, ops = _mul(params.cofactor, R, p)
        _count(params, ops)
        if Q is None:
            continue
        a, ops1 = _mul(params.q1, Q, p)
        b, ops2 = _mul(params.q2, Q, p)
        _count(params, ops1 + ops2)
        if a is not None and b is not None:
            return Q
    raise RetryExhaustedError(f"no point of order n after {retries} draws")


def render_point(P):
    return "INF" if P is None else f"{P[0]},{P[1]}"


def parse_point(text):
    text = text.strip()
    if text == "INF":
        return None
    x, y = text.split(",")
    return int(x), int(y)
