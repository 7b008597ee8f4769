"""Interval discrete logarithms: baby-step giant-step and Pollard's kangaroos.

Both solve ``k * base = target`` for ``lo <= k <= hi`` and return ``None``
when the interval holds no solution.
"""

import random
from dataclasses import dataclass
from math import isqrt

from .ec import Point, _add, _check, _count, _mul, point_neg
from .errors import RangeTooLargeError, RetryExhaustedError

BSGS_MAX_WIDTH = 1 << 32
N_JUMPS = 16
MAX_WALKS = 8
# Tame trap sits this many squared mean jumps beyond hi; a walk misses
# with probability about exp(-TRAP_MARGIN).
TRAP_MARGIN = 2


@dataclass(frozen=True)
class LogQuery:
    base: Point
    target: Point
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval: lo > hi")
        if self.base is None:
            raise ValueError("base must not be the identity")


def _smul(k, P, params):
    R, ops = _mul(abs(k), P if k >= 0 else point_neg(P, params), params.pp)
    return R, ops


def _validate(q, params):
    _check(q.base, params)
    _check(q.target, params)


def bsgs(q, params):
    """Smallest k in [lo, hi] with k*base = target, or None."""
    _validate(q, params)
    width = q.hi - q.lo
    if width > BSGS_MAX_WIDTH:
        raise RangeTooLargeError(f"bsgs width {width} exceeds {BSGS_MAX_WIDTH}")
    p = params.pp
    m = isqrt(width) + 1
    ops = 0

    table = {}
    R = None
    for j in range(m):
        table.setdefault(R, j)
        R = _add(R, q.base, p)
        ops += 1

    # gamma_i = target - (lo + i*m)*base
    lo_pt, c1 = _smul(q.lo, q.base, params)
    step, c2 = _mul(m, point_neg(q.base, params), p)
    gamma = _add(q.target, point_neg(lo_pt, params), p)
    ops += c1 + c2 + 1
    found = None
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            k = q.lo + i * m + j
            if k <= q.hi:
                found = k
            break
        gamma = _add(gamma, step, p)
        ops += 1
    _count(params, ops)
    return found


def _jump_table(width, rng, base, p):
    top = max(1, isqrt(width))
    sizes = [rng.randint(1, top) for _ in range(N_JUMPS)]
    points = []
    ops = 0
    for s in sizes:
        pt, c = _mul(s, base, p)
        points.append(pt)
        ops += c
    return sizes, points, ops


def _slot(P):
    return 0 if P is None else P[0] % N_JUMPS


def _walk(q, p, sizes, points, tame_start):
    """One tame/wild pair. Returns (candidate k or None, steps taken)."""
    mean = sum(sizes) / len(sizes)
    mid = (q.lo + q.hi + 1) // 2
    tame_goal = (q.hi - mid) + TRAP_MARGIN * mean * mean

    tame, dist_t, steps = tame_start, 0, 0
    while dist_t <= tame_goal:
        s = _slot(tame)
        dist_t += sizes[s]
        tame = _add(tame, points[s], p)
        steps += 1
    trap_pos = mid + dist_t

    wild, dist_w = q.target, 0
    limit = trap_pos - q.lo
    while dist_w <= limit:
        if wild == tame:
            return trap_pos - dist_w, steps
        s = _slot(wild)
        dist_w += sizes[s]
        wild = _add(wild, points[s], p)
        steps += 1
    return None, steps


def pollard_lambda(q, params, rng=None, max_walks=MAX_WALKS):
    """Kangaroo search for k in [lo, hi] with k*base = target.

    Failed walks are retried with a fresh jump table; after ``max_walks``
    failures the query falls back to :func:`bsgs` when the interval is small
    enough, and raises :class:`RetryExhaustedError` otherwise.
    """
    _validate(q, params)
    counter = params.counter
    if counter is not None:
        counter.lambda_calls += 1
    if rng is None:
        rng = random.Random(0)
    p = params.pp
    width = q.hi - q.lo

    def verify(k):
        R, c = _smul(k, q.base, params)
        _count(params, c)
        return R == q.target

    # Cheap endpoint check keeps k=lo canonical (e.g. log of O is 0).
    if verify(q.lo):
        return q.lo
    if width == 0:
        return None

    mid = (q.lo + q.hi + 1) // 2
    tame_start, c = _smul(mid, q.base, params)
    _count(params, c)
    for _ in range(max_walks):
        sizes, points, c = _jump_table(width, rng, q.base, p)
        _count(params, c)
        k, steps = _walk(q, p, sizes, points, tame_start)
        _count(params, steps)
        if counter is not None:
            counter.lambda_steps += steps
        if k is not None and q.lo <= k <= q.hi and verify(k):
            return k

    if width <= BSGS_MAX_WIDTH:
        k = bsgs(q, params)
        assert k is None or verify(k)
        return k
    raise RetryExhaustedError(f"{max_walks} kangaroo walks failed on a width-{width} interval")
