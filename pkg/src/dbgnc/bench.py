"""Encrypt+decrypt timing of the message-sharing BGN scheme against
distributed ElGamal on freshly generated curves."""

import csv
import logging
import random
import statistics
import time
from dataclasses import dataclass, field, replace
from typing import Tuple

from .bgn import bgn_keygen
from .ec import OpCounter, random_parameters
from .v2 import (
    DIGIT_BASE, cost_dbgnc, cost_degecc, degecc_decrypt, degecc_encrypt, digits_decompose,
    eg_keygen, shamir_split, v2_decrypt, v2_encrypt,
)

log = logging.getLogger(__name__)

SCHEMES = ("dbgnc_v2", "degecc")
RECORD_HEADER = ["scheme", "q1_bits", "run", "encrypt_ns", "decrypt_ns", "point_additions", "lambda_calls"]
SUMMARY_HEADER = [
    "scheme", "q1_bits", "mean_encrypt_ns", "sd_encrypt_ns", "mean_decrypt_ns", "sd_decrypt_ns",
    "mean_point_additions", "mean_lambda_calls",
]


@dataclass(frozen=True)
class BenchConfig:
    sizes: Tuple[int, ...] = (80, 96, 128)
    runs: int = 100
    seed: int = 0
    T: int = 100
    k: int = 3
    nshares: int = 5
    # Shares stay below one base-100 digit; see README for larger primes.
    pprime: int = 97
    messages: Tuple[int, ...] = (10, 42, 96)

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if not self.sizes:
            raise ValueError("sizes must be non-empty")
        if any(not 0 <= m < self.pprime for m in self.messages):
            raise ValueError("messages must lie in [0, pprime)")


@dataclass(frozen=True)
class BenchRecord:
    scheme: str
    q1_bits: int
    run: int
    encrypt_ns: int
    decrypt_ns: int
    point_additions: int
    lambda_calls: int
    # Closed-form count under naive repeated addition, with r at its mean.
    model_additions: int = field(default=0, compare=False)

    def row(self):
        return [getattr(self, h) for h in RECORD_HEADER]


@dataclass
class _Setup:
    bits: int
    pk: object
    sk: object
    kp: object


def _setup(bits, cfg):
    rng = random.Random(f"{cfg.seed}:params:{bits}")
    params = random_parameters(bits, rng)
    pk, sk = bgn_keygen(params, cfg.T, rng)
    kp = eg_keygen(pk.g, pk.n, pk.params, mode="fixed")
    return _Setup(bits, pk, sk, kp)


def _counted(setup, counter):
    params = setup.pk.params.counting(counter)
    return replace(setup.pk, params=params), params


def _run_dbgnc(setup, cfg, M, rng, counter):
    pk, _ = _counted(setup, counter)
    t0 = time.perf_counter_ns()
    bundle = v2_encrypt(pk, M, cfg.k, cfg.nshares, cfg.pprime, rng)
    t1 = time.perf_counter_ns()
    out = v2_decrypt(pk, setup.sk, bundle, sorted(bundle.shares), rng)
    t2 = time.perf_counter_ns()
    if out != M:
        raise AssertionError(f"dbgnc_v2 round trip failed: {out} != {M}")
    return t1 - t0, t2 - t1


def _run_degecc(setup, cfg, M, rng, counter):
    _, params = _counted(setup, counter)
    kp = setup.kp
    t0 = time.perf_counter_ns()
    bundle = degecc_encrypt(kp, M, cfg.k, cfg.nshares, cfg.pprime, params, rng)
    t1 = time.perf_counter_ns()
    out = degecc_decrypt(kp, bundle, sorted(bundle.shares), params)
    t2 = time.perf_counter_ns()
    if out != M:
        raise AssertionError(f"degecc round trip failed: {out} != {M}")
    return t1 - t0, t2 - t1


_RUNNERS = {"dbgnc_v2": _run_dbgnc, "degecc": _run_degecc}


def _model_additions(scheme, setup, cfg, M, seed_tag):
    # The split is replayed from the same seed, so the model sees the real shares.
    shares = shamir_split(M, cfg.k, cfg.nshares, cfg.pprime, random.Random(seed_tag))
    if scheme == "degecc":
        q = setup.kp.q
        return sum(cost_degecc(q // 2, setup.kp.nB) for _ in shares)
    r_mean = setup.pk.n // 2
    return sum(cost_dbgnc(r_mean, s.value, len(digits_decompose(s.value, DIGIT_BASE).digits))[0] for s in shares)


def run_bench(cfg):
    records = []
    for bits in cfg.sizes:
        try:
            setup = _setup(bits, cfg)
        except Exception:
            log.exception("parameter generation failed at q1_bits=%d; size skipped", bits)
            continue
        for scheme in SCHEMES:
            _RUNNERS[scheme](setup, cfg, cfg.messages[0], random.Random("warmup"), OpCounter())
        for run in range(cfg.runs):
            M = cfg.messages[run % len(cfg.messages)]
            for scheme in SCHEMES:
                tag = f"{cfg.seed}:{scheme}:{bits}:{run}"
                counter = OpCounter()
                enc, dec = _RUNNERS[scheme](setup, cfg, M, random.Random(tag), counter)
                records.append(BenchRecord(
                    scheme, bits, run, enc, dec, counter.additions, counter.lambda_calls,
                    _model_additions(scheme, setup, cfg, M, tag),
                ))
    return records


def summarize(records):
    if not records:
        raise ValueError("no records to summarize")
    groups = {}
    for r in records:
        groups.setdefault((r.scheme, r.q1_bits), []).append(r)
    rows = []
    for (scheme, bits), rs in sorted(groups.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        enc = [r.encrypt_ns for r in rs]
        dec = [r.decrypt_ns for r in rs]
        rows.append({
            "scheme": scheme,
            "q1_bits": bits,
            "mean_encrypt_ns": statistics.fmean(enc),
            "sd_encrypt_ns": statistics.pstdev(enc),
            "mean_decrypt_ns": statistics.fmean(dec),
            "sd_decrypt_ns": statistics.pstdev(dec),
            "mean_point_additions": statistics.fmean(r.point_additions for r in rs),
            "mean_lambda_calls": statistics.fmean(r.lambda_calls for r in rs),
            "mean_model_additions": statistics.fmean(r.model_additions for r in rs),
        })
    return rows


def write_records_csv(records, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(RECORD_HEADER)
    for r in records:
        w.writerow(r.row())


def write_summary_csv(rows, fh):
    w = csv.DictWriter(fh, fieldnames=SUMMARY_HEADER, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
