"""Integer helpers: primality, next_prime and modular roots."""

import random

try:
    from gmpy2 import invert as _gmpy_invert
except ImportError:  # pragma: no cover
    _gmpy_invert = None

MR_ROUNDS = 64

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, int(p**0.5) + 1))]


def inverse_mod(a, p):
    """Inverse of ``a`` modulo ``p``. Raises ZeroDivisionError when not invertible."""
    if _gmpy_invert is not None:
        return int(_gmpy_invert(a, p))
    try:
        return pow(a, -1, p)
    except ValueError:
        raise ZeroDivisionError(f"{a} is not invertible modulo {p}") from None


def is_probable_prime(n, rounds=MR_ROUNDS):
    """Trial division by the primes below 1000, then Miller-Rabin.

    Witnesses come from an RNG seeded with ``n`` so the answer is
    reproducible for a given input.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(x):
    """Smallest prime strictly greater than ``x``."""
    if x < 2:
        return 2
    c = x + 1
    if c > 2 and c % 2 == 0:
        c += 1
    while not is_probable_prime(c):
        c += 2
    return c


def is_quadratic_residue(a, p):
    a %= p
    return a == 0 or pow(a, (p - 1) // 2, p) == 1


def sqrt_mod(a, p):
    """A square root of ``a`` modulo the odd prime ``p`` (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def cube_root_mod(a, p):
    """The unique cube root of ``a`` modulo a prime ``p`` with p = 2 (mod 3)."""
    if p % 3 != 2:
        raise ValueError("cube roots are unique only when p = 2 (mod 3)")
    return pow(a % p, (2 * p - 1) // 3, p)
