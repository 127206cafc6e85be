"""Block codes: distances, nearest-codeword decoding, the repetition code,
codes built from block designs, the sphere-packing test, and a seeded
binary symmetric channel.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import AmbiguousDecoding, CodeError, LimitExceeded, MismatchError

MAX_DESIGN_CODE_LENGTH = 16
GENERATOR = "numpy.random.PCG64"


def parse_word(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s or not s.isdigit():
        raise CodeError(f"words are strings of digits, got {text!r}")
    return tuple(int(c) for c in s)


def format_word(w) -> str:
    return "".join(map(str, w))


@dataclass(frozen=True)
class Code:
    length: int
    alphabet_size: int
    codewords: tuple[tuple[int, ...], ...]
    message_map: tuple[tuple[str, tuple[int, ...]], ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        words = tuple(sorted({tuple(w) for w in self.codewords}))
        if len(words) != len(self.codewords):
            raise CodeError("duplicate codewords")
        if not words:
            raise CodeError("a code needs at least one codeword")
        if self.alphabet_size < 2:
            raise CodeError("alphabet needs at least 2 symbols")
        for w in words:
            if len(w) != self.length or any(not 0 <= s < self.alphabet_size for s in w):
                raise CodeError(f"codeword {format_word(w)} is not a length-{self.length} "
                                f"word over [0, {self.alphabet_size})")
        object.__setattr__(self, "codewords", words)
        if self.message_map is not None:
            mm = tuple(sorted((str(m), tuple(w)) for m, w in self.message_map))
            targets = [w for _, w in mm]
            if len(set(targets)) != len(targets) or any(w not in words for w in targets):
                raise CodeError("message map must be injective into the codewords")
            object.__setattr__(self, "message_map", mm)

    def __len__(self):
        return len(self.codewords)

    def encode(self, message: str) -> tuple[int, ...]:
        if self.message_map is None:
            raise CodeError("code has no message map")
        return dict(self.message_map)[message]

    def message_of(self, word) -> str:
        if self.message_map is None:
            raise CodeError("code has no message map")
        for m, w in self.message_map:
            if w == tuple(word):
                return m
        raise CodeError(f"{format_word(word)} encodes no message")

    def to_dict(self) -> dict:
        d = {"length": self.length, "alphabet_size": self.alphabet_size,
             "codewords": [format_word(w) for w in self.codewords]}
        if self.message_map is not None:
            d["message_map"] = {m: format_word(w) for m, w in self.message_map}
        return d

    @classmethod
    def from_dict(cls, d) -> Code:
        mm = d.get("message_map")
        return cls(d["length"], d["alphabet_size"],
                   tuple(parse_word(w) for w in d["codewords"]),
                   None if mm is None else tuple((m, parse_word(w)) for m, w in mm.items()))


def hamming_distance(u, v) -> int:
    if len(u) != len(v):
        raise MismatchError(f"words have lengths {len(u)} and {len(v)}")
    return sum(a != b for a, b in zip(u, v))


class Distance(NamedTuple):
    d: int
    detect: int
    correct: int


def min_distance(c: Code) -> Distance:
    if len(c) < 2:
        raise CodeError("minimum distance needs at least two codewords")
    d = min(hamming_distance(u, v) for u, v in itertools.combinations(c.codewords, 2))
    return Distance(d, d - 1, (d - 1) // 2)


def nearest_decode(c: Code, w) -> tuple[int, ...]:
    """The unique closest codeword; raises AmbiguousDecoding on a tie."""
    w = tuple(w)
    if len(w) != c.length or any(not 0 <= s < c.alphabet_size for s in w):
        raise CodeError(f"{format_word(w)} is not a length-{c.length} word "
                        f"over [0, {c.alphabet_size})")
    dists = [hamming_distance(u, w) for u in c.codewords]
    best = min(dists)
    tied = [u for u, dd in zip(c.codewords, dists) if dd == best]
    if len(tied) > 1:
        raise AmbiguousDecoding(w, tied)
    return tied[0]


def decode_message(c: Code, received: str) -> str:
    """Decode whitespace-separated letters and concatenate their messages."""
    return "".join(c.message_of(nearest_decode(c, parse_word(letter)))
                   for letter in received.split())


def repetition_code(r: int) -> Code:
    if r < 1:
        raise CodeError(f"repeat count must be >= 1, got {r}")
    zero, one = (0,) * r, (1,) * r
    return Code(r, 2, (zero, one), (("0", zero), ("1", one)), name=f"rep{r}")


def code_from_design(d, extended: bool = False) -> Code:
    """Binary code of block incidence vectors.

    ``extended`` adds every complement plus the all-zero and all-one words;
    on the Fano plane this gives the 16-word perfect code of length 7.
    """
    v = d.v
    if v > MAX_DESIGN_CODE_LENGTH:
        raise LimitExceeded(f"design codes limited to length {MAX_DESIGN_CODE_LENGTH}")
    words = {tuple(1 if x in blk else 0 for x in range(v)) for blk in d.blocks}
    if extended:
        words |= {tuple(1 - s for s in w) for w in words}
        words |= {(0,) * v, (1,) * v}
    return Code(v, 2, tuple(sorted(words)))


def sphere_volume(n: int, q: int, radius: int) -> int:
    return sum(math.comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def is_perfect(c: Code) -> bool:
    """|C| * V(n, t) == q**n with t the correction radius (integers only)."""
    t = min_distance(c).correct
    return len(c) * sphere_volume(c.length, c.alphabet_size, t) == c.alphabet_size ** c.length


@dataclass(frozen=True)
class ChannelReport:
    trials: int
    successes: int
    per_letter_success_rate: float
    seed: int
    flip_probability: float
    generator: str = GENERATOR

    def to_dict(self) -> dict:
        return {"trials": self.trials, "successes": self.successes,
                "per_letter_success_rate": self.per_letter_success_rate,
                "seed": self.seed, "flip_probability": self.flip_probability,
                "generator": self.generator}

    @classmethod
    def from_dict(cls, d) -> ChannelReport:
        return cls(**d)


def channel_simulate(c: Code, flip_probability: float, trials: int, seed: int) -> ChannelReport:
    """Send uniformly random letters through a binary symmetric channel.

    One PCG64 stream drives everything, drawn in a fixed order: all the
    message choices first, then the flip pattern.  A tied decoding counts
    as a failure.
    """
    if c.message_map is None:
        raise CodeError("channel simulation needs a code with a message map")
    if c.alphabet_size != 2:
        raise CodeError("channel simulation is for binary codes")
    if not 0.0 <= flip_probability <= 1.0:
        raise CodeError(f"flip probability {flip_probability} not in [0, 1]")
    if trials < 1:
        raise CodeError("need at least one trial")
    rng = np.random.Generator(np.random.PCG64(seed))
    sent_words = np.array([w for _, w in c.message_map], dtype=np.int8)
    codebook = np.array(c.codewords, dtype=np.int8)
    sent_idx = rng.integers(0, len(sent_words), size=trials)
    flips = (rng.random((trials, c.length)) < flip_probability).astype(np.int8)
    received = sent_words[sent_idx] ^ flips
    dist = (received[:, None, :] != codebook[None, :, :]).sum(axis=2)
    best = dist.min(axis=1)
    unique = (dist == best[:, None]).sum(axis=1) == 1
    decoded = codebook[dist.argmin(axis=1)]
    correct = unique & (decoded == sent_words[sent_idx]).all(axis=1)
    successes = int(correct.sum())
    return ChannelReport(trials, successes, successes / trials, seed, float(flip_probability))
