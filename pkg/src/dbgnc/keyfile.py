"""Line-oriented ``key: value`` files for keys, shares and ciphertexts.

Integers are decimal and points are ``x,y`` or ``INF``. Every file starts
with a ``format:`` line naming its record type.
"""

from .bgn import Ciphertext, PrivateKey, PublicKey
from .ec import CurveParams, parse_point, render_point
from .threshold import DecryptionShare, Proof, ShareKey, VerificationKey
from .v2 import V2Bundle
from .zkp import ZkChallenge, ZkResponse, ZkSession

PK_FORMAT = "dbgnc-pk-v1"
SK_FORMAT = "dbgnc-sk-v1"
SHARE_FORMAT = "dbgnc-share-v1"
VK_FORMAT = "dbgnc-vk-v1"
CT_FORMAT = "dbgnc-ct-v1"
DSHARE_FORMAT = "dbgnc-dshare-v1"
V2_FORMAT = "dbgnc-v2-v1"


class FormatError(ValueError):
    pass


def _render(fmt, items):
    lines = [f"format: {fmt}"] + [f"{k}: {v}" for k, v in items]
    return "\n".join(lines) + "\n"


def _parse(text, fmt):
    fields = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        if key in fields:
            raise FormatError(f"duplicate key {key!r}")
        fields[key] = value.strip()
    if fields.get("format") != fmt:
        raise FormatError(f"expected format {fmt}, got {fields.get('format')!r}")
    return fields


def _get(fields, key, conv=int):
    try:
        return conv(fields[key])
    except KeyError:
        raise FormatError(f"missing field {key!r}") from None
    except ValueError as exc:
        raise FormatError(f"bad value for {key!r}: {exc}") from None


def render_public_key(pk):
    p = pk.params
    return _render(PK_FORMAT, [
        ("pp", p.pp), ("n", p.n), ("cofactor", p.cofactor), ("T", pk.T),
        ("g", render_point(pk.g)), ("u", render_point(pk.u)),
        ("h", render_point(pk.h)), ("g0", render_point(pk.g0)),
    ])


def parse_public_key(text):
    f = _parse(text, PK_FORMAT)
    params = CurveParams(pp=_get(f, "pp"), n=_get(f, "n"), cofactor=_get(f, "cofactor"))
    return PublicKey(
        params=params, T=_get(f, "T"),
        g=_get(f, "g", parse_point), u=_get(f, "u", parse_point),
        h=_get(f, "h", parse_point), g0=_get(f, "g0", parse_point),
    )


def render_private_key(sk):
    return _render(SK_FORMAT, [("q1", sk.q1), ("q2", sk.q2)])


def parse_private_key(text):
    f = _parse(text, SK_FORMAT)
    return PrivateKey(q1=_get(f, "q1"), q2=_get(f, "q2"))


def render_share(s):
    return _render(SHARE_FORMAT, [
        ("i", s.index), ("d", s.d), ("beta", s.beta), ("l", s.l), ("t", s.t), ("log_hi", s.log_hi),
    ])


def parse_share(text):
    f = _parse(text, SHARE_FORMAT)
    return ShareKey(_get(f, "i"), _get(f, "d"), _get(f, "beta"), _get(f, "l"), _get(f, "t"), _get(f, "log_hi"))


def render_vk(vk):
    return _render(VK_FORMAT, [("i", vk.index), ("gi", render_point(vk.gi)), ("l", vk.l), ("t", vk.t)])


def parse_vk(text):
    f = _parse(text, VK_FORMAT)
    return VerificationKey(_get(f, "i"), _get(f, "gi", parse_point), _get(f, "l"), _get(f, "t"))


def render_ciphertext(ct):
    return _render(CT_FORMAT, [("C", render_point(ct.C))])


def parse_ciphertext(text):
    return Ciphertext(_get(_parse(text, CT_FORMAT), "C", parse_point))


def render_decryption_share(ds):
    pr = ds.proof
    return _render(DSHARE_FORMAT, [
        ("i", ds.index), ("c", ds.c), ("beta", ds.beta),
        ("zk_aG", render_point(pr.challenge.aG)), ("zk_t1", pr.challenge.t1), ("zk_t2", pr.challenge.t2),
        ("zk_b1", pr.session.b1), ("zk_b2", pr.session.b2),
        ("zk_z1", pr.response.z1), ("zk_z2", pr.response.z2),
    ])


def parse_decryption_share(text):
    f = _parse(text, DSHARE_FORMAT)
    proof = Proof(
        ZkChallenge(_get(f, "zk_aG", parse_point), _get(f, "zk_t1"), _get(f, "zk_t2")),
        ZkSession(_get(f, "zk_b1"), _get(f, "zk_b2")),
        ZkResponse(_get(f, "zk_z1"), _get(f, "zk_z2")),
    )
    return DecryptionShare(_get(f, "i"), _get(f, "c"), _get(f, "beta"), proof)


def render_v2_bundle(b):
    items = [("k", b.k), ("pprime", b.prime), ("base", b.base)]
    for i in sorted(b.shares):
        items.append((f"share{i}", ";".join(render_point(ct.C) for ct in b.shares[i])))
    return _render(V2_FORMAT, items)


def parse_v2_bundle(text):
    f = _parse(text, V2_FORMAT)
    shares = {}
    for key, value in f.items():
        if key.startswith("share"):
            try:
                idx = int(key[len("share"):])
                shares[idx] = [Ciphertext(parse_point(p)) for p in value.split(";")]
            except ValueError as exc:
                raise FormatError(f"bad share line {key!r}: {exc}") from None
    return V2Bundle(k=_get(f, "k"), prime=_get(f, "pprime"), base=_get(f, "base"), shares=shares)
