"""Scheme B: length-(n-1) messages to q-balanced length-n codewords.

The message is first driven to weight m+q-1 or m+q by a minimal prefix
flip (two admissible targets instead of one), then a single bit is
appended to land exactly on weight m+q.  The receiver-side index set
splits by the codeword weight: only fresh nonnegative running-sum values
can be minimal indices at weight m+q-1, only fresh nonpositive ones at
weight m+q.  That sign split is what makes the size distribution a plain
difference of binomials, which in turn makes the average redundancy
asymptotically 0.5*log2(n) + 0.526 (q = 0) analyzable.

Bad words (possible only for q >= 2) are handled like Scheme A but with
a replacement run of r_bad = 2q-2 bits: a length-(n-1) word whose
truncation has weight <= m-q stays Type-1-good after appending zeros
(its path ends at offset >= q-1), and one with truncation weight
>= m-q+1 reaches weight >= m+q-1 after appending ones.  r_bad is kept as
a parameter so nearby constants can be A/B tested; the default is the
one proved safe above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .errors import DecodeError
from .lattice import PathBand, count_banded
from .scheme_a import Classification, EncodeResult, _encode_rank, rank_width
from .words import BitWord, complement, flip_prefix, running_sum, weight

EULER_MASCHERONI = 0.5772156649015329

# Limit constant of the good-word average: (2 - ln4 - euler_gamma)/ln4 - 1/2.
BETA = (2.0 - math.log(4.0) - EULER_MASCHERONI) / math.log(4.0) - 0.5


@dataclass(frozen=True)
class SchemeBParams:
    """Block length, imbalance, and the bad-word replacement run length."""

    n: int
    q: int
    r_bad: int = field(default=-1)

    def __post_init__(self):
        if self.n % 2:
            raise ValueError(f"block length {self.n} must be even")
        if not 0 <= self.q <= self.n // 2:
            raise ValueError(f"q={self.q} out of range")
        if self.r_bad < 0:
            object.__setattr__(self, "r_bad", default_r_bad(self.q))
        if self.r_bad > self.n - 1:
            raise ValueError("replacement run longer than the message")

    @property
    def m(self) -> int:
        return self.n // 2


def default_r_bad(q: int) -> int:
    return max(0, 2 * q - 2)


def t_b(x: BitWord, q: int) -> List[int]:
    """All j with weight(flip_prefix(x, j)) in {m+q-1, m+q}, ascending."""
    n = x.length + 1
    if n % 2:
        raise ValueError(f"message length {x.length} must be odd (n-1)")
    targets = {n // 2 + q - 1, n // 2 + q}
    out = []
    wt = weight(x)
    if wt in targets:
        out.append(0)
    for j, b in enumerate(x, start=1):
        wt += -1 if b else 1
        if wt in targets:
            out.append(j)
    return out


def classify_b(x: BitWord, q: int, r_bad: Optional[int] = None) -> Classification:
    if t_b(x, q):
        return Classification.TYPE1_GOOD
    if t_b(complement(x), q):
        return Classification.TYPE0_GOOD
    r = default_r_bad(q) if r_bad is None else r_bad
    m = (x.length + 1) // 2
    if weight(x.prefix(x.length - r)) <= m - q:
        return Classification.TYPE0_BAD
    return Classification.TYPE1_BAD


def _substitute_b(x: BitWord, cls: Classification, r_bad: int) -> BitWord:
    if cls is Classification.TYPE1_GOOD:
        return x
    if cls is Classification.TYPE0_GOOD:
        return complement(x)
    run = (1 << r_bad) - 1 if cls.type_bit else 0
    return x.prefix(x.length - r_bad).concat(BitWord(run, r_bad))


def gamma_set_b(c: BitWord, q: int) -> List[int]:
    """Fresh running-sum indices restricted to the weight-determined sign."""
    n = c.length + 1
    if n % 2:
        raise ValueError(f"codeword length {c.length} must be odd (n-1)")
    m = n // 2
    wt = weight(c)
    if wt == m + q - 1:
        keep = lambda v: v >= 0
    elif wt == m + q:
        keep = lambda v: v <= 0
    else:
        raise ValueError(f"weight {wt} not in target pair {{{m + q - 1}, {m + q}}}")
    seen = set()
    out = []
    for i, v in enumerate(running_sum(c)):
        if v not in seen:
            seen.add(v)
            if keep(v):
                out.append(i)
    return out


def encode_b(x: BitWord, q: int, r_bad: Optional[int] = None) -> EncodeResult:
    n = x.length + 1
    params = SchemeBParams(n, q, default_r_bad(q) if r_bad is None else r_bad)
    m = params.m
    cls = classify_b(x, q, params.r_bad)
    xh = _substitute_b(x, cls, params.r_bad)
    t_set = t_b(xh, q)
    if not t_set:
        raise ValueError(f"replacement run r_bad={params.r_bad} left the word bad")
    tau = t_set[0]
    c = flip_prefix(xh, tau)
    gamma = gamma_set_b(c, q)
    z = _encode_rank(gamma.index(tau), len(gamma))
    appended = 1 if weight(c) == m + q - 1 else 0
    cprime = c.concat(BitWord(appended, 1))
    if q == 0:
        bits = z
    elif not cls.is_bad:
        bits = f"0{cls.type_bit}{z}"
    else:
        bits = f"1{cls.type_bit}{z}{x.suffix(params.r_bad)}"
    return EncodeResult(codeword=cprime, prefix=BitWord.from_str(bits), classification=cls, tau=tau)


def decode_b(cprime: BitWord, p: BitWord, n: int, q: int, r_bad: Optional[int] = None) -> BitWord:
    params = SchemeBParams(n, q, default_r_bad(q) if r_bad is None else r_bad)
    m = params.m
    if cprime.length != n:
        raise ValueError(f"codeword length {cprime.length} != {n}")
    c = cprime.prefix(n - 1)
    wt = weight(c)
    if wt not in (m + q - 1, m + q):
        raise DecodeError(f"stripped codeword weight {wt} outside target pair")
    if cprime.bit(n) != (1 if wt == m + q - 1 else 0):
        raise DecodeError("appended balance bit inconsistent with codeword weight")
    gamma = gamma_set_b(c, q)
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
    tail = take(params.r_bad)
    if bits:
        raise DecodeError("trailing bits after bad-word suffix")
    return xh.prefix(xh.length - params.r_bad).concat(BitWord.from_str(tail))


# ---------------------------------------------------------------------------
# Census and redundancy analysis


def gamma_count_b(i: int, n: int, q: int) -> int:
    """Exact size-i count over both target weights (three-branch closed form).

    The weight-(m+q-1) branch contributes for 2q <= i <= m+q, the
    weight-(m+q) branch for 1 <= i <= m-q; the printed statement's outer
    branches are swapped relative to its own proof, and the oracle
    histogram confirms this orientation.
    """
    if n % 2:
        raise ValueError(f"block length {n} must be even")
    m = n // 2
    if not 1 <= i <= m + q:
        raise ValueError(f"i={i} out of range 1..{m + q}")
    total = 0
    if max(1, 2 * q) <= i <= m + q:
        total += math.comb(n - 1, m + i - q - 1) - math.comb(n - 1, m + i - q)
    if i <= m - q:
        total += math.comb(n - 1, m + i + q - 1) - math.comb(n - 1, m + i + q)
    return total


def count_bad_b(n: int, q: int) -> int:
    """Exact number of bad length-(n-1) messages.

    A message is bad iff its path stays strictly below Y = X + (q-1) and
    weakly above Y = X - (q-1); odd length makes the band asymmetric,
    [1-q, q-2], unlike the even-length census of Scheme A.  Verified
    against the exhaustive census (first nonzero value is 2, at q = 2).
    """
    if n % 2:
        raise ValueError(f"block length {n} must be even")
    if q <= 1:
        return 0
    m = n // 2
    band = PathBand(1 - q, q - 2)
    return sum(count_banded((0, y), (m + y, m - 1), band) for y in range(1 - q, q - 1))


def _ln_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _good_sum_b(n: int, q: int, method: str, operational: bool = False) -> float:
    """(1/2^(n-1)) * sum_i i * gamma(i) * log2(i) over both branches."""
    m = n // 2

    def logw(i: int) -> float:
        return float(rank_width(i)) if operational else math.log2(i)

    if method == "exact":
        total = 0.0
        for i in range(2, m + q + 1):
            g = gamma_count_b(i, n, q)
            if g:
                total += i * logw(i) * float(Fraction(g, 1 << (n - 1)))
        return total
    ln2 = math.log(2.0)
    total = 0.0
    for i in range(2, m + q + 1):
        w = i * logw(i)
        if max(1, 2 * q) <= i <= m + q:
            # gamma_low = C(n-1, m+i-q-1) * (2i-2q)/(m+i-q)
            ln_g = _ln_comb(n - 1, m + i - q - 1) + math.log(2 * i - 2 * q) - math.log(m + i - q)
            total += w * math.exp(ln_g - (n - 1) * ln2)
        if i <= m - q:
            ln_g = _ln_comb(n - 1, m + i + q - 1) + math.log(2 * i + 2 * q) - math.log(m + i + q)
            total += w * math.exp(ln_g - (n - 1) * ln2)
    return total


def rho_b_parts(n: int, q: int, method: str = "auto", operational: bool = False) -> Dict[str, float]:
    """Decomposition of the redundancy bound: constant + good term + bad term.

    The constant is 1 appended balance bit, plus 2 flag/type bits when
    q > 0.  method "exact" uses big-integer binomials, "logspace" uses
    lgamma (needed past n ~ 2^12 to stay fast); "auto" picks by size.
    operational=True swaps real log2 widths for the ceil widths sent on
    the wire.
    """
    if method == "auto":
        method = "exact" if n <= 4096 else "logspace"
    if method not in ("exact", "logspace"):
        raise ValueError(f"unknown method {method!r}")
    good = _good_sum_b(n, q, method, operational)
    if q == 0:
        return {"flag": 1.0, "good": good, "bad": 0.0}
    bad_words = count_bad_b(n, q)
    log_n = float(rank_width(n)) if operational else math.log2(n)
    bad = float(Fraction(bad_words, 1 << (n - 1))) * (2 * q - 2 + log_n)
    return {"flag": 3.0, "good": good, "bad": bad}


def rho_b(n: int, q: int, method: str = "auto", operational: bool = False) -> float:
    return sum(rho_b_parts(n, q, method, operational).values())


def rho_b_asymptote(n: int, q: int) -> float:
    """Limit line 0.5*log2 n + 0.526 (q=0) or + 2.526 (q>0)."""
    constant = (1.0 if q == 0 else 3.0) + BETA
    return 0.5 * math.log2(n) + constant
