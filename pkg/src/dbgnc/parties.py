"""In-process simulation of dealer, servers, combiner and user.

Parties exchange messages over a FIFO bus drained in order, so a given
config always yields the same transcript.
"""

import enum
import hashlib
import random
from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

from .bgn import bgn_encrypt, bgn_keygen
from .ec import generate_parameters
from .errors import DBGNCError
from .threshold import DecryptionShare, Proof, deal, issue_challenge, share_decrypt, valid_shares, combine
from .zkp import ZkResponse

TOY_Q1_SEED = 10  # q1 = 11, q2 = 13


class CorruptionMode(str, enum.Enum):
    BAD_SHARE_VALUE = "bad_share_value"
    BAD_PROOF = "bad_proof"
    SILENT = "silent"


@dataclass(frozen=True)
class SessionConfig:
    l: int
    t: int
    message: int
    corrupt: FrozenSet[int] = frozenset()
    corruption_mode: CorruptionMode = CorruptionMode.BAD_PROOF
    seed: int = 0
    q1_seed: int = TOY_Q1_SEED
    T: Optional[int] = None  # defaults to q2 - 1

    def __post_init__(self):
        object.__setattr__(self, "corrupt", frozenset(self.corrupt))
        object.__setattr__(self, "corruption_mode", CorruptionMode(self.corruption_mode))
        if not self.corrupt <= set(range(1, self.l + 1)):
            raise ValueError("corrupt servers must be indices in 1..l")


@dataclass(frozen=True)
class Event:
    step: int
    sender: str
    receiver: str
    kind: str
    payload: object

    def render(self):
        digest = hashlib.sha256(repr(self.payload).encode()).hexdigest()[:16]
        return f"STEP {self.step} {self.sender}->{self.receiver} {self.kind} {digest}"


@dataclass
class Transcript:
    events: List[Event] = field(default_factory=list)
    plaintext: Optional[int] = None
    failure: Optional[str] = None
    accepted: List[int] = field(default_factory=list)
    rejected: List[int] = field(default_factory=list)
    used: List[int] = field(default_factory=list)

    @property
    def ok(self):
        return self.failure is None

    def render(self):
        return "\n".join(e.render() for e in self.events) + "\n"


class _Bus:
    def __init__(self, transcript):
        self.queue = deque()
        self.transcript = transcript

    def send(self, sender, receiver, kind, payload):
        ev = Event(len(self.transcript.events) + 1, sender, receiver, kind, payload)
        self.transcript.events.append(ev)
        self.queue.append(ev)


def _server(i):
    return f"server{i}"


def simulate_session(cfg):
    """Run keygen, dealing, encryption, share decryption and combining."""
    rng = random.Random(f"session:{cfg.seed}")
    tr = Transcript()
    bus = _Bus(tr)

    params = generate_parameters(cfg.q1_seed)
    T = params.q2 - 1 if cfg.T is None else cfg.T
    if not 0 <= cfg.message <= T:
        raise ValueError(f"message must lie in [0, {T}]")
    pk, sk = bgn_keygen(params, T, rng)
    shares, vks = deal(pk, sk, cfg.l, cfg.t, rng)

    for s in shares:
        bus.send("dealer", _server(s.index), "share", (s.index, s.d, s.beta))
    bus.send("dealer", "combiner", "vks", tuple(vk.gi for vk in vks))
    ct = bgn_encrypt(pk, cfg.message, rng)
    for i in range(1, cfg.l + 1):
        bus.send("user", _server(i), "ciphertext", ct.C)

    sessions = {}
    collected = []
    # Round-robin delivery: each event is handled once, in send order.
    while bus.queue:
        ev = bus.queue.popleft()
        if ev.receiver.startswith("server") and ev.kind == "ciphertext":
            i = int(ev.receiver[len("server"):])
            challenge = issue_challenge(pk, vks[i - 1], rng)
            sessions[i] = challenge[1]
            bus.send("combiner", ev.receiver, "challenge", challenge[0])
        elif ev.receiver.startswith("server") and ev.kind == "challenge":
            i = int(ev.receiver[len("server"):])
            share = _server_reply(cfg, shares[i - 1], pk, ct, vks[i - 1], ev.payload, sessions[i], rng)
            if share is not None:
                bus.send(ev.receiver, "combiner", "decryption_share", share)
        elif ev.receiver == "combiner" and ev.kind == "decryption_share":
            collected.append(ev.payload)

    good = {s.index for s in valid_shares(collected, vks, sessions)}
    for s in sorted(collected, key=lambda s: s.index):
        verdict = "accept" if s.index in good else "reject"
        (tr.accepted if verdict == "accept" else tr.rejected).append(s.index)
        bus.send("combiner", "combiner", f"verdict_{verdict}", s.index)

    try:
        tr.plaintext = combine(pk, ct, collected, vks, rng, sessions=sessions)
        tr.used = sorted(good)[: cfg.t + 1]
        bus.send("combiner", "user", "plaintext", tr.plaintext)
    except DBGNCError as exc:
        tr.failure = str(exc)
        bus.send("combiner", "user", "failure", tr.failure)
    return tr


def _server_reply(cfg, share, pk, ct, vk, challenge, session, rng):
    corrupt = share.index in cfg.corrupt
    mode = cfg.corruption_mode
    if corrupt and mode is CorruptionMode.SILENT:
        return None
    if corrupt and mode is CorruptionMode.BAD_SHARE_VALUE:
        honest = share_decrypt(share, pk, ct, vk, rng, (challenge, session), proof_secret=share.d + 1)
        return DecryptionShare(honest.index, honest.c + 1, honest.beta, honest.proof)
    ds = share_decrypt(share, pk, ct, vk, rng, (challenge, session))
    if corrupt and mode is CorruptionMode.BAD_PROOF:
        p = pk.params.pp
        resp = ZkResponse((ds.proof.response.z1 + 1) % p, ds.proof.response.z2)
        ds = DecryptionShare(ds.index, ds.c, ds.beta, Proof(ds.proof.challenge, ds.proof.session, resp))
    return ds
