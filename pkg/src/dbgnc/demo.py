"""Reproduce the published numerical example end to end."""

import random
import re
import time
from dataclasses import dataclass
from typing import List

from .bgn import bgn_decrypt, bgn_encrypt, bgn_keygen
from .ec import generate_parameters
from .threshold import combine, deal, share_decrypt

Q1_SEED = 10**17
EXPECTED_Q1 = 100000000000000003
EXPECTED_Q2 = 100000000000000013
# As printed (the typesetting splits it over two lines).
PRINTED_ORDER = "96000000000000001536000000000" "00003744"
L, T_SHARES, MESSAGE, T_BOUND = 20, 8, 10, 100


@dataclass
class DemoReport:
    q1: int
    q2: int
    cofactor: int
    group_order: int
    share_logs: List[int]
    plaintext: int
    direct_plaintext: int
    seconds: float


def digit_signature(s):
    """Non-zero digit runs of a decimal string; insensitive to how many
    zeros the typesetting kept between them."""
    return re.findall(r"[1-9]+", s)


def matches_printed_order(order, printed=PRINTED_ORDER):
    s = str(order)
    return (
        s.startswith(printed[:2])
        and s.endswith(printed[-4:])
        and digit_signature(s) == digit_signature(printed)
    )


def demo_published_example(out=print, seed=0):
    start = time.perf_counter()
    params = generate_parameters(Q1_SEED).validate()
    out(f"q1 = {params.q1}")
    out(f"q2 = {params.q2}")
    if (params.q1, params.q2) != (EXPECTED_Q1, EXPECTED_Q2):
        raise AssertionError("prime generation does not match the published primes")
    order = params.group_order
    out(f"cofactor = {params.cofactor}, pp = {params.pp}")
    out(f"group order = {order}")
    if order != params.cofactor * params.n or order % params.n:
        raise AssertionError("group order is not cofactor * n")
    if not matches_printed_order(order):
        raise AssertionError(f"group order {order} does not match printed {PRINTED_ORDER}")
    out(f"printed order {PRINTED_ORDER}: digit groups {digit_signature(PRINTED_ORDER)} match")

    rng = random.Random(seed)
    pk, sk = bgn_keygen(params, T_BOUND, rng)
    out(f"g = {pk.g}")
    out(f"h = {pk.h}")
    shares, vks = deal(pk, sk, L, T_SHARES, rng, coeff_bound=params.q1)
    out(f"dealt l={L} shares with threshold t={T_SHARES}")
    ct = bgn_encrypt(pk, MESSAGE, rng)
    out(f"C = {ct.C}")

    # The combiner needs t+1 shares; the first t+1 servers answer.
    responders = shares[: T_SHARES + 1]
    dshares = [share_decrypt(s, pk, ct, vks[s.index - 1], rng) for s in responders]
    logs = [d.c for d in dshares]
    out(f"share logs = {logs}")
    m = combine(pk, ct, dshares, vks, rng)
    direct = bgn_decrypt(pk, sk, ct, rng)
    out(f"combined plaintext = {m} (direct decryption {direct})")
    if m != MESSAGE or direct != MESSAGE:
        raise AssertionError(f"recovered {m}/{direct}, expected {MESSAGE}")
    elapsed = time.perf_counter() - start
    out(f"ok in {elapsed:.1f}s")
    return DemoReport(params.q1, params.q2, params.cofactor, order, logs, m, direct, elapsed)
