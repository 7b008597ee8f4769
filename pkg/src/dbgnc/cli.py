"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 on cryptographic failure.
"""

import argparse
import logging
import random
import sys
from pathlib import Path

from . import keyfile
from .bench import BenchConfig, run_bench, summarize, write_records_csv, write_summary_csv
from .bgn import bgn_decrypt, bgn_encrypt, bgn_keygen
from .demo import demo_published_example
from .ec import generate_parameters, random_parameters
from .errors import DBGNCError
from .parties import SessionConfig, simulate_session
from .threshold import combine, deal, share_decrypt
from .v2 import v2_decrypt, v2_encrypt

EXIT_OK, EXIT_USAGE, EXIT_CRYPTO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def cmd_keygen(a):
    if (a.q1_bits is None) == (a.q1_seed is None):
        raise UsageError("give exactly one of --q1-bits and --q1-seed")
    rng = random.Random(a.seed)
    params = generate_parameters(a.q1_seed) if a.q1_seed is not None else random_parameters(a.q1_bits, rng)
    pk, sk = bgn_keygen(params, a.T, rng)
    _write(a.out_pk, keyfile.render_public_key(pk))
    _write(a.out_sk, keyfile.render_private_key(sk))
    print(f"n = {pk.n}, pp = {pk.params.pp}")


def cmd_deal(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    sk = keyfile.parse_private_key(_read(a.sk))
    shares, vks = deal(pk, sk, a.l, a.t, random.Random(a.seed), coeff_bound=a.coeff_bound)
    out = Path(a.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for s, vk in zip(shares, vks):
        _write(out / f"share_{s.index}.txt", keyfile.render_share(s))
        _write(out / f"vk_{vk.index}.txt", keyfile.render_vk(vk))
    print(f"wrote {len(shares)} shares to {out}")


def cmd_encrypt(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    _write(a.out, keyfile.render_ciphertext(bgn_encrypt(pk, a.m, random.Random(a.seed))))


def cmd_decrypt(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    sk = keyfile.parse_private_key(_read(a.sk))
    print(bgn_decrypt(pk, sk, keyfile.parse_ciphertext(_read(a.ct))))


def cmd_share_decrypt(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    share = keyfile.parse_share(_read(a.share))
    vk = keyfile.parse_vk(_read(a.vk))
    ct = keyfile.parse_ciphertext(_read(a.ct))
    ds = share_decrypt(share, pk, ct, vk, random.Random(a.seed))
    _write(a.out, keyfile.render_decryption_share(ds))


def cmd_combine(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    ct = keyfile.parse_ciphertext(_read(a.ct))
    shares = [keyfile.parse_decryption_share(_read(f)) for f in a.share_files]
    vks = [keyfile.parse_vk(_read(f)) for f in a.vk_files]
    print(combine(pk, ct, shares, vks))


def cmd_v2_encrypt(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    bundle = v2_encrypt(pk, a.m, a.k, a.n, a.pprime, random.Random(a.seed))
    _write(a.out, keyfile.render_v2_bundle(bundle))


def cmd_v2_decrypt(a):
    pk = keyfile.parse_public_key(_read(a.pk))
    sk = keyfile.parse_private_key(_read(a.sk))
    bundle = keyfile.parse_v2_bundle(_read(a.inp))
    print(v2_decrypt(pk, sk, bundle, _ints(a.subset)))


def cmd_simulate(a):
    cfg = SessionConfig(
        l=a.l, t=a.t, message=a.m, corrupt=frozenset(_ints(a.corrupt)),
        corruption_mode=a.mode, seed=a.seed,
    )
    tr = simulate_session(cfg)
    sys.stdout.write(tr.render())
    if not tr.ok:
        print(f"FAILURE {tr.failure}")
        return EXIT_CRYPTO
    print(f"PLAINTEXT {tr.plaintext}")


def cmd_bench(a):
    cfg = BenchConfig(sizes=tuple(_ints(a.sizes)), runs=a.runs, seed=a.seed, pprime=a.pprime)
    records = run_bench(cfg)
    with open(a.out, "w", encoding="utf-8", newline="") as fh:
        write_records_csv(records, fh)
    rows = summarize(records)
    if a.summary:
        with open(a.summary, "w", encoding="utf-8", newline="") as fh:
            write_summary_csv(rows, fh)
    for r in rows:
        total_ms = (r["mean_encrypt_ns"] + r["mean_decrypt_ns"]) / 1e6
        print(f"{r['scheme']:9s} q1_bits={r['q1_bits']:4d} enc+dec={total_ms:9.3f} ms "
              f"adds={r['mean_point_additions']:.0f} model_adds={r['mean_model_additions']:.3g} "
              f"lambda={r['mean_lambda_calls']:.1f}")


def cmd_demo(a):
    demo_published_example(seed=a.seed)


def build_parser():
    p = _Parser(prog="dbgnc", description="Threshold Boneh-Goh-Nissim toolkit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("keygen", help="generate curve parameters and a BGN key pair")
    s.add_argument("--q1-bits", type=int)
    s.add_argument("--q1-seed", type=int)
    s.add_argument("--T", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out-pk", required=True)
    s.add_argument("--out-sk", required=True)
    s.set_defaults(func=cmd_keygen)

    s = sub.add_parser("deal", help="Shamir-share the private key")
    s.add_argument("--pk", required=True)
    s.add_argument("--sk", required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--coeff-bound", type=int, help="draw coefficients from [0, B) instead of Z_n")
    s.add_argument("--out-dir", required=True)
    s.set_defaults(func=cmd_deal)

    s = sub.add_parser("encrypt")
    s.add_argument("--pk", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_encrypt)

    s = sub.add_parser("decrypt")
    s.add_argument("--pk", required=True)
    s.add_argument("--sk", required=True)
    s.add_argument("--ct", required=True)
    s.set_defaults(func=cmd_decrypt)

    s = sub.add_parser("share-decrypt")
    s.add_argument("--pk", required=True)
    s.add_argument("--share", required=True)
    s.add_argument("--vk", required=True)
    s.add_argument("--ct", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_share_decrypt)

    s = sub.add_parser("combine")
    s.add_argument("--pk", required=True)
    s.add_argument("--ct", required=True)
    s.add_argument("--share-files", nargs="+", required=True)
    s.add_argument("--vk-files", nargs="+", required=True)
    s.set_defaults(func=cmd_combine)

    s = sub.add_parser("v2-encrypt")
    s.add_argument("--pk", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--pprime", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_v2_encrypt)

    s = sub.add_parser("v2-decrypt")
    s.add_argument("--pk", required=True)
    s.add_argument("--sk", required=True)
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--subset", required=True)
    s.set_defaults(func=cmd_v2_decrypt)

    s = sub.add_parser("simulate")
    s.add_argument("--l", type=int, default=5)
    s.add_argument("--t", type=int, default=2)
    s.add_argument("--m", type=int, default=7)
    s.add_argument("--corrupt", default="")
    s.add_argument("--mode", choices=["bad_share_value", "bad_proof", "silent"], default="bad_proof")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("bench")
    s.add_argument("--sizes", default="80,96,128")
    s.add_argument("--runs", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--pprime", type=int, default=BenchConfig.pprime)
    s.add_argument("--out", required=True)
    s.add_argument("--summary")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("demo", help="rerun the published numerical example")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_demo)
    return p


def run_command(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args) or EXIT_OK
    except UsageError as exc:
        print(f"dbgnc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DBGNCError, AssertionError) as exc:
        print(f"dbgnc: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CRYPTO
    except (ValueError, OSError) as exc:
        print(f"dbgnc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
