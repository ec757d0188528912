"""Brute-force ground truth for every closed formula at small sizes.

Nothing here knows about lattice paths, running-sum characterizations,
or trellises: sets are computed from their definitions (minimum over all
preimages), redundancy by encoding every message, and path counts by
walking every path.  Formula modules are tested against these results,
never the other way round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import scheme_a, scheme_b, scheme_c
from .cyclic_code import CyclicCode, codewords
from .errors import CapacityError
from .lattice import LatticePoint, PathBand
from .words import BitWord, all_words, balancing_indices, complement, flip_prefix, weight

MESSAGE_SPACE_GUARD = 1 << 22


@dataclass
class RedundancyReport:
    """Per-scheme redundancy summary; means are over the full message space."""

    scheme: str
    n: int
    q: int
    gamma: Dict[int, int]  # |Gamma| histogram over distinct receivable codewords
    analytical: float  # mean redundancy with real log2 index widths
    operational: float  # mean redundancy with the ceil bit widths actually sent
    bad_words: int
    decomposition: Dict[str, float] = field(default_factory=dict)
    optimal: float = 0.0


def _guard(k: int) -> None:
    if 1 << k > MESSAGE_SPACE_GUARD:
        raise CapacityError(f"message space 2^{k} exceeds guard 2^22")


def exhaustive_redundancy(
    scheme: str, n: int, q: int = 0, code: Optional[CyclicCode] = None
) -> RedundancyReport:
    """Encode every message and tabulate redundancy exactly.

    scheme: "a", "b", "c-fullspace", or "c-code" (requires code).
    Analytical counts log2 |Gamma| per codeword plus the scheme's
    constant bits; operational counts the emitted prefix lengths.
    """
    if scheme == "a":
        return _exhaustive_a(n, q)
    if scheme == "b":
        return _exhaustive_b(n, q)
    if scheme == "c-fullspace":
        from .cyclic_code import full_space

        return _exhaustive_c(n, full_space(n - 1), label="c-fullspace")
    if scheme == "c-code":
        if code is None:
            raise ValueError("scheme 'c-code' needs a code")
        return _exhaustive_c(code.n + 1, code, label="c-code")
    raise ValueError(f"unknown scheme {scheme!r}")


def _exhaustive_a(n: int, q: int) -> RedundancyReport:
    _guard(n)
    gamma_by_cw: Dict[BitWord, int] = {}
    op_total = 0
    an_total = 0.0
    bad = 0
    for x in all_words(n):
        res = scheme_a.encode_a(x, q)
        size = len(scheme_a.gamma_set_a(res.codeword, q))
        gamma_by_cw[res.codeword] = size
        op_total += res.prefix.length
        an = math.log2(size)
        if q > 0:
            an += 2.0
            if res.classification.is_bad:
                an += 2 * q
                bad += 1
        an_total += an
    hist: Dict[int, int] = {}
    for size in gamma_by_cw.values():
        hist[size] = hist.get(size, 0) + 1
    return RedundancyReport(
        scheme="a",
        n=n,
        q=q,
        gamma=dict(sorted(hist.items())),
        analytical=an_total / (1 << n),
        operational=op_total / (1 << n),
        bad_words=bad,
        decomposition=scheme_a.rho_a_parts(n, q),
        optimal=scheme_a.optimal_redundancy(n, q),
    )


def _exhaustive_b(n: int, q: int) -> RedundancyReport:
    _guard(n - 1)
    gamma_by_cw: Dict[BitWord, int] = {}
    op_total = 0
    an_total = 0.0
    bad = 0
    for x in all_words(n - 1):
        res = scheme_b.encode_b(x, q)
        c = res.codeword.prefix(n - 1)
        size = len(scheme_b.gamma_set_b(c, q))
        gamma_by_cw[c] = size
        op_total += 1 + res.prefix.length
        an = 1.0 + math.log2(size)
        if q > 0:
            an += 2.0
            if res.classification.is_bad:
                an += scheme_b.default_r_bad(q)
                bad += 1
        an_total += an
    hist: Dict[int, int] = {}
    for size in gamma_by_cw.values():
        hist[size] = hist.get(size, 0) + 1
    return RedundancyReport(
        scheme="b",
        n=n,
        q=q,
        gamma=dict(sorted(hist.items())),
        analytical=an_total / (1 << (n - 1)),
        operational=op_total / (1 << (n - 1)),
        bad_words=bad,
        decomposition=scheme_b.rho_b_parts(n, q),
        optimal=scheme_a.optimal_redundancy(n, q),
    )


def _exhaustive_c(n: int, code: CyclicCode, label: str) -> RedundancyReport:
    _guard(code.k)
    gamma_by_cw: Dict[BitWord, int] = {}
    op_total = 0
    an_total = 0.0
    for x in codewords(code):
        res = scheme_c.encode_c(code, x)
        c = res.codeword.prefix(n - 1)
        size = scheme_c.gamma_size_c(c)
        gamma_by_cw[c] = size
        op_total += 1 + res.prefix.length
        an_total += 1.0 + math.log2(size)
    hist: Dict[int, int] = {}
    for size in gamma_by_cw.values():
        hist[size] = hist.get(size, 0) + 1
    good = an_total / (1 << code.k) - 1.0
    return RedundancyReport(
        scheme=label,
        n=n,
        q=0,
        gamma=dict(sorted(hist.items())),
        analytical=an_total / (1 << code.k),
        operational=op_total / (1 << code.k),
        bad_words=0,
        decomposition={"flag": 1.0, "good": good, "bad": 0.0},
        optimal=scheme_a.optimal_redundancy(n, 0),
    )


def definitional_gamma(
    scheme: str, c: BitWord, q: int = 0, code: Optional[CyclicCode] = None
) -> List[int]:
    """Gamma(c) straight from its definition: which indices are minimal
    for some preimage, bypassing all running-sum characterizations."""
    if scheme == "a":
        out = []
        for j in range(c.length + 1):
            t = balancing_indices(flip_prefix(c, j), q)
            if t and t[0] == j:
                out.append(j)
        return out
    if scheme == "b":
        out = []
        for j in range(c.length + 1):
            t = scheme_b.t_b(flip_prefix(c, j), q)
            if t and t[0] == j:
                out.append(j)
        return out
    if scheme == "c":
        from .cyclic_code import contains, full_space
        from .words import cyclic_shift

        code = code if code is not None else full_space(c.length)
        out = []
        for j in range(c.length):
            x = cyclic_shift(scheme_c.flip_c(c), -j)
            if not contains(code, x):
                continue
            t = scheme_c.t_c(x)
            if t and t[0] == j:
                out.append(j)
        return out
    raise ValueError(f"unknown scheme {scheme!r}")


def roundtrip_all(
    scheme: str, n: int, q: int = 0, code: Optional[CyclicCode] = None
) -> Tuple[bool, Optional[BitWord]]:
    """decode(encode(x)) == x plus the weight invariant, every message.

    Returns (True, None) or (False, first failing message).
    """
    if scheme == "a":
        _guard(n)
        for x in all_words(n):
            res = scheme_a.encode_a(x, q)
            if weight(res.codeword) != n // 2 + q:
                return False, x
            if scheme_a.decode_a(res.codeword, res.prefix, n, q) != x:
                return False, x
        return True, None
    if scheme == "b":
        _guard(n - 1)
        for x in all_words(n - 1):
            res = scheme_b.encode_b(x, q)
            if weight(res.codeword) != n // 2 + q:
                return False, x
            if scheme_b.decode_b(res.codeword, res.prefix, n, q) != x:
                return False, x
        return True, None
    if scheme == "c":
        if code is None:
            raise ValueError("scheme 'c' needs a code")
        _guard(code.k)
        m = (code.n + 1) // 2
        for x in codewords(code):
            res = scheme_c.encode_c(code, x)
            if weight(res.codeword) != m:
                return False, x
            if scheme_c.decode_c(code, res.codeword, res.prefix) != x:
                return False, x
        return True, None
    raise ValueError(f"unknown scheme {scheme!r}")


def count_paths_brute(
    start: LatticePoint,
    end: LatticePoint,
    band: Optional[PathBand] = None,
    above_diagonal: bool = False,
) -> int:
    """Count monotone paths by explicit depth-first walking (exponential)."""

    def ok(p: LatticePoint) -> bool:
        if band is not None and not band.s <= p[1] - p[0] <= band.t:
            return False
        if above_diagonal and p[0] > p[1]:
            return False
        return True

    if not (ok(start) and ok(end)):
        return 0

    def walk(p: LatticePoint) -> int:
        if p == end:
            return 1
        total = 0
        right = (p[0] + 1, p[1])
        up = (p[0], p[1] + 1)
        if right[0] <= end[0] and ok(right):
            total += walk(right)
        if up[1] <= end[1] and ok(up):
            total += walk(up)
        return total

    return walk(start)


def census_bad_a(n: int, q: int) -> int:
    """Bad-word count by testing every word's index sets directly."""
    _guard(n)
    return sum(
        1
        for w in all_words(n)
        if not balancing_indices(w, q)
        and not balancing_indices(complement(w), q)
    )


def census_bad_b(n: int, q: int) -> int:
    _guard(n - 1)
    return sum(
        1
        for w in all_words(n - 1)
        if not scheme_b.t_b(w, q) and not scheme_b.t_b(complement(w), q)
    )


def verify_scheme(scheme: str, n: int, q: int = 0) -> Dict[str, object]:
    """Round-trip + formula-vs-census cross-checks; CLI `oracle verify`."""
    ok, witness = roundtrip_all(scheme, n, q)
    out: Dict[str, object] = {
        "scheme": scheme,
        "n": n,
        "q": q,
        "roundtrip": ok,
        "counterexample": str(witness) if witness is not None else None,
    }
    report = exhaustive_redundancy(scheme, n, q)
    if scheme == "a":
        formula = {
            i: scheme_a.gamma_count_a(i, n, q)
            for i in range(1, n + 2)
            if scheme_a.gamma_count_a(i, n, q)
        }
        out["gamma_match"] = formula == report.gamma
        out["bad_match"] = report.bad_words == scheme_a.count_bad(n, q)
    elif scheme == "b":
        formula = {
            i: scheme_b.gamma_count_b(i, n, q)
            for i in range(1, n // 2 + q + 1)
            if scheme_b.gamma_count_b(i, n, q)
        }
        out["gamma_match"] = formula == report.gamma
        out["bad_match"] = report.bad_words == scheme_b.count_bad_b(n, q)
    else:
        raise ValueError("oracle verify covers schemes 'a' and 'b'")
    out["ok"] = bool(ok and out["gamma_match"] and out["bad_match"])
    return out
