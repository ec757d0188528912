"""Cyclic balancing of a cyclic code, with error correction and streaming.

Given an [n-1, k, d] cyclic code, a codeword is balanced by cyclically
shifting it until complementing the first half lands the weight in
{m-1, m}, then appending one bit.  Because shifts of codewords are
codewords, every output lives in a fixed coset of the code, so the
distinct outputs C* form a balanced codebook with minimum distance
2*ceil(d/2).  The shift index tau is transmitted on
ceil(log2 |Gamma(c)|) bits, where Gamma(c) is always a contiguous range
{0..size-1} read off the cyclic running sum of c.

Streaming chains the prefixes: frame t's shift index rides at the head
of frame t+1's packet, so decoding runs back to front.  The final
frame's own prefix has no successor to ride, so the encoder flushes it
into zero-filled pad frames until the tail frame is self-decodable (its
shift index is the unique candidate whose decoded packet ends in the
known zero fill).  A small container header records the block length,
the number of payload-bearing frames, and how many filler zeros the
last payload frame absorbed.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import lru_cache
from math import comb, log2
from fractions import Fraction
from typing import List, Tuple

from .cyclic_code import CyclicCode, codewords, contains, encode_systematic
from .errors import AmbiguousBlockError, CodingError, DecodeError, StreamError
from .scheme_a import EncodeResult, rank_width
from .words import BitWord, cyclic_running_sum, cyclic_shift, flip_prefix, weight

_FLUSH_CAP = 64


def _half(length: int) -> int:
    if length % 2 == 0:
        raise ValueError(f"length {length} is even; cyclic balancing needs 2m-1")
    return (length + 1) // 2


def flip_c(x: BitWord) -> BitWord:
    """Complement the first half (m of 2m-1 bits); involutive."""
    return flip_prefix(x, _half(x.length))


def t_c(x: BitWord) -> List[int]:
    """Shifts j for which flip_c(shift(x, j)) has weight m-1 or m."""
    m = _half(x.length)
    targets = (m - 1, m)
    return [
        j
        for j in range(x.length + 1)
        if weight(flip_c(cyclic_shift(x, j))) in targets
    ]


def gamma_size_c(c: BitWord) -> int:
    """|Gamma(c)|: index of the first zero in CR_1..CR_{m-1}, else m."""
    m = _half(c.length)
    if weight(c) not in (m - 1, m):
        raise ValueError(f"weight {weight(c)} not in {{{m - 1}, {m}}}")
    cr = cyclic_running_sum(c)
    for i in range(1, m):
        if cr[i] == 0:
            return i
    return m


def gamma_set_c(c: BitWord) -> List[int]:
    """The receivable shift set; always the contiguous range {0..size-1}."""
    return list(range(gamma_size_c(c)))


def encode_c(code: CyclicCode, x: BitWord) -> EncodeResult:
    if x.length != code.n:
        raise ValueError(f"word length {x.length} != code length {code.n}")
    if not contains(code, x):
        raise ValueError(f"{x} is not a codeword")
    m = _half(code.n)
    tau = t_c(x)[0]
    c = flip_c(cyclic_shift(x, tau))
    appended = 1 if weight(c) == m - 1 else 0
    cprime = c.concat(BitWord(appended, 1))
    r = rank_width(gamma_size_c(c))
    prefix = BitWord.from_str(format(tau, f"0{r}b") if r else "")
    return EncodeResult(codeword=cprime, prefix=prefix, classification=None, tau=tau)


def decode_c(code: CyclicCode, cprime: BitWord, p: BitWord) -> BitWord:
    if cprime.length != code.n + 1:
        raise ValueError(f"block length {cprime.length} != {code.n + 1}")
    m = _half(code.n)
    c = cprime.prefix(code.n)
    wt = weight(c)
    if wt not in (m - 1, m):
        raise DecodeError(f"stripped block weight {wt} outside {{{m - 1}, {m}}}")
    if cprime.bit(code.n + 1) != (1 if wt == m - 1 else 0):
        raise DecodeError("appended balance bit inconsistent with block weight")
    size = gamma_size_c(c)
    r = rank_width(size)
    if p.length != r:
        raise DecodeError(f"prefix length {p.length} != expected {r}")
    tau = p.value
    if tau >= size:
        raise DecodeError(f"shift index {tau} out of range for |Gamma|={size}")
    x = cyclic_shift(flip_c(c), -tau)
    if not contains(code, x):
        raise DecodeError("recovered word is not a codeword")
    return x


@lru_cache(maxsize=None)
def build_balanced_code(code: CyclicCode) -> Tuple[BitWord, ...]:
    """C*: the distinct balanced blocks the encoder can emit, sorted."""
    book = {encode_c(code, x).codeword for x in codewords(code)}
    return tuple(sorted(book, key=lambda w: w.value))


def correct_block(code: CyclicCode, received: BitWord) -> BitWord:
    """Nearest word of C* (complete decoding, lexicographic scan order).

    Raises AmbiguousBlockError when two codebook words are equally near;
    within radius floor((d'-1)/2) the nearest word is always unique.
    """
    book = build_balanced_code(code)
    if received.length != code.n + 1:
        raise ValueError(f"block length {received.length} != {code.n + 1}")
    best = None
    best_dist = received.length + 1
    ties = 0
    for cw in book:
        dist = (cw.value ^ received.value).bit_count()
        if dist < best_dist:
            best, best_dist, ties = cw, dist, 1
        elif dist == best_dist:
            ties += 1
    if ties > 1:
        raise AmbiguousBlockError(
            f"{ties} codebook words at distance {best_dist} from {received}"
        )
    return best


# ---------------------------------------------------------------------------
# Full-space distribution (no code constraint)


def gamma_count_fullspace(i: int, n: int) -> int:
    """Number of length-(n-1) target-weight words with |Gamma| = i."""
    if n % 2:
        raise ValueError(f"block length {n} must be even")
    m = n // 2
    if not 1 <= i <= m:
        raise ValueError(f"i={i} out of range 1..{m}")
    return 2 * (comb(2 * i - 2, i - 1) // i) * comb(2 * m - 2 * i, m - i)


def rho_c_fullspace(n: int) -> float:
    """Average redundancy over all of {0,1}^(n-1): 1 + mean log2 |Gamma|."""
    if n % 2:
        raise ValueError(f"block length {n} must be even")
    m = n // 2
    total = 0.0
    for i in range(2, m + 1):
        total += (
            2.0
            * log2(i)
            * float(Fraction(comb(2 * i - 2, i - 1) * comb(2 * m - 2 * i, m - i), 1 << (n - 1)))
        )
    return 1.0 + total


# ---------------------------------------------------------------------------
# Prefix-chained stream codec


@dataclass(frozen=True)
class StreamFrame:
    """One transmitted block: fresh payload consumed, block, carried prefix."""

    payload: BitWord
    codeword: BitWord
    prefix: BitWord


@dataclass(frozen=True)
class StreamEncoding:
    """Frames plus the header fields needed to terminate decoding."""

    frames: Tuple[StreamFrame, ...]
    payload_frames: int
    final_pad: int
    n: int


def _packet_of(code: CyclicCode, c: BitWord, tau: int) -> BitWord:
    return cyclic_shift(flip_c(c), -tau).prefix(code.k)


def _tail_zero_candidates(code: CyclicCode, c: BitWord, fill: int) -> List[int]:
    out = []
    for tau in range(gamma_size_c(c)):
        packet = _packet_of(code, c, tau)
        if fill == 0 or packet.suffix(fill).value == 0:
            out.append(tau)
    return out


def stream_encode(code: CyclicCode, payload: BitWord) -> StreamEncoding:
    """Chop payload into prefix-chained balanced blocks.

    Each frame's packet is [carried prefix][fresh payload bits], zero
    filled at the stream tail.  Pad frames are appended until the last
    frame's shift index is recoverable without a successor.
    """
    k = code.k
    n = code.n + 1
    if rank_width(_half(code.n)) > k:
        raise CodingError(f"prefix can exceed packet size for k={k}; code too small")
    bits = str(payload)
    frames: List[StreamFrame] = []
    carry = ""
    pos = 0
    final_pad = 0
    while pos < len(bits):
        room = k - len(carry)
        take = bits[pos : pos + room]
        pos += len(take)
        fill = room - len(take)
        packet = BitWord.from_str(carry + take + "0" * fill)
        res = encode_c(code, encode_systematic(code, packet))
        frames.append(
            StreamFrame(payload=BitWord.from_str(take), codeword=res.codeword, prefix=res.prefix)
        )
        carry = str(res.prefix)
        if pos >= len(bits):
            final_pad = fill
    payload_frames = len(frames)

    # Flush: the dangling prefix rides zero-filled pad frames until the
    # tail frame decodes on its own (unique zero-tail candidate).
    for _ in range(_FLUSH_CAP):
        if not frames or not carry:
            break
        fill = k - len(carry)
        packet = BitWord.from_str(carry + "0" * fill)
        res = encode_c(code, encode_systematic(code, packet))
        frames.append(StreamFrame(payload=BitWord(0, 0), codeword=res.codeword, prefix=res.prefix))
        carry = str(res.prefix)
        c = res.codeword.prefix(code.n)
        if len(_tail_zero_candidates(code, c, fill)) == 1:
            carry = ""  # tail frame self-decodes; its own prefix is dropped
            break
    if carry:
        raise CodingError(f"stream flush did not converge within {_FLUSH_CAP} pad frames")
    return StreamEncoding(frames=tuple(frames), payload_frames=payload_frames, final_pad=final_pad, n=n)


def stream_decode(code: CyclicCode, enc: StreamEncoding) -> BitWord:
    """Invert stream_encode, correcting each block against C* first."""
    if not enc.frames:
        return BitWord(0, 0)
    book = set(build_balanced_code(code))
    blocks = []
    for frame in enc.frames:
        cw = frame.codeword
        if cw not in book:
            cw = correct_block(code, cw)
        blocks.append(cw)
    k = code.k
    total = len(blocks)
    if enc.payload_frames > total or enc.payload_frames < 1:
        raise StreamError("payload frame count inconsistent with container")

    stripped = [cw.prefix(code.n) for cw in blocks]
    sizes = [gamma_size_c(c) for c in stripped]
    widths = [rank_width(s) for s in sizes]

    packets: List[BitWord] = [None] * total  # type: ignore[list-item]
    last = total - 1
    if total == enc.payload_frames:
        if widths[last] != 0:
            raise StreamError("terminal frame carries an unrecoverable prefix")
        tau = 0
    else:
        fill = k - widths[last - 1]
        cands = _tail_zero_candidates(code, stripped[last], fill)
        if len(cands) != 1:
            raise StreamError(f"terminal frame is ambiguous ({len(cands)} candidates)")
        tau = cands[0]
    packets[last] = _packet_of(code, stripped[last], tau)

    for t in range(last - 1, -1, -1):
        head = str(packets[t + 1])[: widths[t]]
        tau = int(head, 2) if head else 0
        if tau >= sizes[t]:
            raise StreamError(f"frame {t}: shift index {tau} out of range")
        packets[t] = _packet_of(code, stripped[t], tau)

    out = str(packets[0])
    for t in range(1, enc.payload_frames):
        out += str(packets[t])[widths[t - 1] :]
    if enc.final_pad:
        body, pad = out[: len(out) - enc.final_pad], out[len(out) - enc.final_pad :]
        if pad.strip("0"):
            raise StreamError("payload fill bits are not zero")
        out = body
    return BitWord.from_str(out)


# ---------------------------------------------------------------------------
# Binary container

_MAGIC = b"QBS1"


def pack_stream(enc: StreamEncoding) -> bytes:
    """Header (magic, n, payload frames, final pad) + length-prefixed blocks."""
    out = [_MAGIC, struct.pack(">HIH", enc.n, enc.payload_frames, enc.final_pad)]
    for frame in enc.frames:
        nbits = frame.codeword.length
        nbytes = (nbits + 7) // 8
        out.append(struct.pack(">H", nbits))
        out.append((frame.codeword.value << (8 * nbytes - nbits)).to_bytes(nbytes, "big"))
    return b"".join(out)


def unpack_stream(blob: bytes) -> StreamEncoding:
    if blob[:4] != _MAGIC:
        raise StreamError("bad container magic")
    if len(blob) < 12:
        raise StreamError("truncated container header")
    n, payload_frames, final_pad = struct.unpack(">HIH", blob[4:12])
    pos = 12
    frames = []
    while pos < len(blob):
        if pos + 2 > len(blob):
            raise StreamError("truncated frame length")
        (nbits,) = struct.unpack(">H", blob[pos : pos + 2])
        pos += 2
        nbytes = (nbits + 7) // 8
        if pos + nbytes > len(blob):
            raise StreamError("truncated frame body")
        value = int.from_bytes(blob[pos : pos + nbytes], "big") >> (8 * nbytes - nbits)
        pos += nbytes
        frames.append(
            StreamFrame(payload=BitWord(0, 0), codeword=BitWord(value, nbits), prefix=BitWord(0, 0))
        )
    return StreamEncoding(frames=tuple(frames), payload_frames=payload_frames, final_pad=final_pad, n=n)
