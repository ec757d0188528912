"""Scheme A: length-n messages to q-balanced length-n codewords.

A message is classified by whether it, or its complement, has any
q-balancing index; words with neither ("bad" words) have their last 2q
bits replaced by a constant run, which always restores an index.  The
minimal index tau is transmitted as its rank inside the receiver-side
index set Gamma(c), so the prefix width is ceil(log2 |Gamma(c)|) bits
instead of log2 n.

Prefix layout, bit-exact:

    good word:  [flag 0][type bit i][z]
    bad word:   [flag 1][type bit i][z][last 2q message bits]
    q = 0:      [z]                      (every word is Type-1-good)

where z is the rank of tau in Gamma(c).  The analytical machinery
(Gamma-size distribution, bad-word census, redundancy bound) runs on the
exact lattice-path counts from .lattice; the trigonometric closed-form
census is kept only as a floating cross-check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional

from .errors import DecodeError
from .lattice import PathBand, count_banded, count_banded_trig
from .words import BitWord, balancing_indices, complement, flip_prefix, running_sum, weight


class Classification(enum.Enum):
    TYPE1_GOOD = "type-1-good"
    TYPE0_GOOD = "type-0-good"
    TYPE1_BAD = "type-1-bad"
    TYPE0_BAD = "type-0-bad"

    @property
    def is_bad(self) -> bool:
        return self in (Classification.TYPE1_BAD, Classification.TYPE0_BAD)

    @property
    def type_bit(self) -> int:
        return 1 if self in (Classification.TYPE1_GOOD, Classification.TYPE1_BAD) else 0


@dataclass(frozen=True)
class EncodeResult:
    """Codeword plus the variable-length prefix that inverts it."""

    codeword: BitWord
    prefix: BitWord
    classification: Optional[Classification]
    tau: int


def rank_width(size: int) -> int:
    """Bits needed to address `size` ranks: ceil(log2 size), 0 when size == 1."""
    return (size - 1).bit_length()


def _encode_rank(rank: int, size: int) -> str:
    r = rank_width(size)
    return format(rank, f"0{r}b") if r else ""


def _check_params(n: int, q: int) -> None:
    if n % 2:
        raise ValueError(f"block length {n} must be even")
    if not 0 <= q <= n // 2:
        raise ValueError(f"imbalance parameter q={q} out of range 0..{n // 2}")


def classify(x: BitWord, q: int) -> Classification:
    """Good/bad typing of a message for imbalance parameter q."""
    n = x.length
    _check_params(n, q)
    if balancing_indices(x, q):
        return Classification.TYPE1_GOOD
    if balancing_indices(complement(x), q):
        return Classification.TYPE0_GOOD
    # Replacing the last 2q bits by i^2q restores an index; i follows the
    # truncated weight so the replacement is provably Type-1-good.
    if weight(x.prefix(n - 2 * q)) <= n // 2 - q:
        return Classification.TYPE0_BAD
    return Classification.TYPE1_BAD


def _run(bit: int, length: int) -> BitWord:
    return BitWord((1 << length) - 1 if bit else 0, length)


def _substitute(x: BitWord, cls: Classification, q: int) -> BitWord:
    if cls is Classification.TYPE1_GOOD:
        return x
    if cls is Classification.TYPE0_GOOD:
        return complement(x)
    return x.prefix(x.length - 2 * q).concat(_run(cls.type_bit, 2 * q))


def gamma_set_a(c: BitWord, q: int) -> List[int]:
    """Indices whose running-sum value is new, ascending; the receivable taus."""
    n = c.length
    _check_params(n, q)
    if weight(c) != n // 2 + q:
        raise ValueError(f"weight {weight(c)} != target {n // 2 + q}")
    seen = set()
    out = []
    for i, v in enumerate(running_sum(c)):
        if v not in seen:
            seen.add(v)
            out.append(i)
    return out


def encode_a(x: BitWord, q: int) -> EncodeResult:
    n = x.length
    _check_params(n, q)
    cls = classify(x, q)
    xh = _substitute(x, cls, q)
    t_set = balancing_indices(xh, q)
    tau = t_set[0]
    c = flip_prefix(xh, tau)
    gamma = gamma_set_a(c, q)
    z = _encode_rank(gamma.index(tau), len(gamma))
    if q == 0:
        bits = z
    elif not cls.is_bad:
        bits = f"0{cls.type_bit}{z}"
    else:
        bits = f"1{cls.type_bit}{z}{x.suffix(2 * q)}"
    return EncodeResult(codeword=c, prefix=BitWord.from_str(bits), classification=cls, tau=tau)


def decode_a(c: BitWord, p: BitWord, n: int, q: int) -> BitWord:
    """Invert encode_a; raises DecodeError on any malformed prefix."""
    _check_params(n, q)
    if c.length != n:
        raise ValueError(f"codeword length {c.length} != {n}")
    gamma = gamma_set_a(c, q)
    r = rank_width(len(gamma))
    bits = str(p)

    def take(k: int) -> str:
        nonlocal bits
        if len(bits) < k:
            raise DecodeError("prefix too short")
        head, bits = bits[:k], bits[k:]
        return head

    if q == 0:
        rank = int(take(r), 2) if r else 0
        if rank >= len(gamma):
            raise DecodeError(f"rank {rank} out of range for |Gamma|={len(gamma)}")
        if bits:
            raise DecodeError("trailing bits after rank")
        return flip_prefix(c, gamma[rank])

    flag = take(1)
    type_bit = int(take(1))
    rank = int(take(r), 2) if r else 0
    if rank >= len(gamma):
        raise DecodeError(f"rank {rank} out of range for |Gamma|={len(gamma)}")
    xh = flip_prefix(c, gamma[rank])
    if flag == "0":
        if bits:
            raise DecodeError("trailing bits after good-word prefix")
        return xh if type_bit else complement(xh)
    tail = take(2 * q)
    if bits:
        raise DecodeError("trailing bits after bad-word suffix")
    return xh.prefix(n - 2 * q).concat(BitWord.from_str(tail))


# ---------------------------------------------------------------------------
# Census and redundancy analysis


def count_bad(n: int, q: int) -> int:
    """Exact number of length-n words with no index for x or its complement.

    Bad words are the paths confined strictly between Y = X + q and
    Y = X - q, i.e. weakly inside the band [1-q, q-1], summed over all
    feasible start heights.
    """
    _check_params(n, q)
    if q <= 1:
        return 0
    m = n // 2
    band = PathBand(1 - q, q - 1)
    return sum(count_banded((0, y), (m + y, m), band) for y in range(1 - q, q))


def count_bad_trig(n: int, q: int) -> float:
    """Trigonometric form of the bad-word census; cross-check only."""
    _check_params(n, q)
    if q <= 1:
        return 0.0
    m = n // 2
    band = PathBand(1 - q, q - 1)
    return sum(count_banded_trig((0, y), (m + y, m), band) for y in range(1 - q, q))


@lru_cache(maxsize=64)
def gamma_counts_a(n: int, q: int) -> tuple:
    """gamma[i] = number of q-balanced length-n words with |Gamma| = i, i <= n+1."""
    _check_params(n, q)
    m = n // 2
    start = (0, q)
    end = (m + q, m)
    cache: Dict[tuple, int] = {}

    def g(j: int, t: int) -> int:
        # Band of height j+2 whose upper line has offset t-q.
        if j < 0:
            return 0
        key = (j, t)
        if key not in cache:
            upper = t - q
            cache[key] = count_banded(start, end, PathBand(upper - j, upper))
        return cache[key]

    out = [0] * (n + 2)
    for i in range(1, m + q + 2):
        total = 0
        for t in range(i):
            total += g(i - 1, t) - g(i - 2, t) - g(i - 2, t - 1) + g(i - 3, t - 1)
        out[i] = total
    return tuple(out)


def gamma_count_a(i: int, n: int, q: int) -> int:
    if not 1 <= i <= n + 1:
        raise ValueError(f"i={i} out of range 1..{n + 1}")
    return gamma_counts_a(n, q)[i]


def _ratio(num: int, log2_den: int) -> float:
    return float(Fraction(num, 1 << log2_den))


def rho_a_parts(n: int, q: int, operational: bool = False) -> Dict[str, float]:
    """Decomposed redundancy bound: flag bits + good-word term + bad-word term.

    Analytical convention uses real-valued log2 throughout (the tables'
    convention); operational=True switches to ceil(log2 .) bit widths.
    """
    gamma = gamma_counts_a(n, q)
    m = n // 2
    top = m + q + 1

    def logw(i: int) -> float:
        return float(rank_width(i)) if operational else math.log2(i)

    good = 0.0
    for i in range(2, top + 1):
        if gamma[i]:
            good += i * logw(i) * _ratio(gamma[i], n)
    if q == 0:
        return {"flag": 0.0, "good": good, "bad": 0.0}
    bad_words = count_bad(n, q)
    log_n = float(rank_width(n)) if operational else math.log2(n)
    bad = _ratio(bad_words, n) * (2 * q + log_n)
    return {"flag": 2.0, "good": good, "bad": bad}


def rho_a_bound(n: int, q: int, operational: bool = False) -> float:
    """Upper bound on the scheme's average redundancy in bits."""
    return sum(rho_a_parts(n, q, operational).values())


def optimal_redundancy(n: int, q: int = 0) -> float:
    """Information-theoretic floor: n - log2 C(n, n/2 + q)."""
    _check_params(n, q)
    return n - math.log2(math.comb(n, n // 2 + q))
