"""Shift-set distribution of cyclic balancing via a syndrome trellis.

Counts, for an [n-1, k, d] cyclic code, how many receivable blocks c
have each shift-set size |Gamma(c)| = j, without enumerating the 2^k
codewords.  Levels 1..m-1 consume the bit pair (c_i, c_{i+m}); the last
level consumes c_m alone.  A state tracks (weight, syndrome-of-flipped-
word, first-zero index), the count being the number of label paths that
reach it.  The cyclic running sum needs no slot of its own: after level
i it always equals 2*(weight - i), which is also why the paired running
sum decides |Gamma| the way it does.

The index slot is 0 while no zero of the running sum has occurred
(covering both the root and the not-yet-determined marker), frozen to the
level at the first zero, and resolves to m at the final level if still
unset.  Acceptance requires weight in {m-1, m} and zero syndrome; the
final running sum is weight-determined and carries no information.

Memory is governed by the 2^(n-k) syndrome slices, so builds are
guarded to n-k <= 20; beyond that use exhaustive enumeration.
"""

from __future__ import annotations

from fractions import Fraction
from math import log2
from typing import Dict, Tuple

from .cyclic_code import CyclicCode
from .errors import CapacityError

SYNDROME_GUARD = 20

FinalState = Tuple[int, int]  # (weight, index)


def _check(code: CyclicCode) -> int:
    if code.n % 2 == 0:
        raise ValueError(f"code length {code.n} must be odd (2m-1)")
    if code.r > SYNDROME_GUARD:
        raise CapacityError(
            f"n-k={code.r} exceeds trellis guard {SYNDROME_GUARD}; "
            "use exhaustive enumeration instead"
        )
    return (code.n + 1) // 2


def _forward(code: CyclicCode):
    m = _check(code)
    h = code.parity_cols
    # state key: (weight, syndrome, index); index 0 = not yet fixed
    states: Dict[Tuple[int, int, int], int] = {(0, 0, 0): 1}
    total_states = 1
    for level in range(1, m):
        h_lo = h[level - 1]
        h_hi = h[level + m - 1]
        # (c_i, c_{i+m}) -> (weight gain, syndrome mask); first half is flipped
        edges = (
            (0, h_lo),
            (1, h_lo ^ h_hi),
            (1, 0),
            (2, h_hi),
        )
        nxt: Dict[Tuple[int, int, int], int] = {}
        slack = 2 * (m - 1 - level) + 1  # weight still collectable after this level
        for (wt, syn, idx), cnt in states.items():
            for gain, mask in edges:
                nwt = wt + gain
                if nwt > m or nwt + slack < m - 1:
                    continue
                nidx = idx if idx else (level if nwt == level else 0)
                key = (nwt, syn ^ mask, nidx)
                if key in nxt:
                    nxt[key] += cnt
                else:
                    nxt[key] = cnt
        states = nxt
        total_states += len(states)

    h_m = h[m - 1]
    final: Dict[FinalState, int] = {}
    for (wt, syn, idx), cnt in states.items():
        for c_m in (0, 1):
            nwt = wt + c_m
            if nwt not in (m - 1, m):
                continue
            if syn ^ (h_m if c_m == 0 else 0):
                continue
            key = (nwt, idx if idx else m)
            if key in final:
                final[key] += cnt
            else:
                final[key] = cnt
    total_states += len(final)
    return final, total_states


def build_and_count(code: CyclicCode) -> Dict[FinalState, int]:
    """Map (final weight, shift-set size) -> exact path count."""
    return _forward(code)[0]


def state_count(code: CyclicCode) -> int:
    """Number of materialized (reachable, weight-feasible) states."""
    return _forward(code)[1]


def gamma_counts(code: CyclicCode) -> Dict[int, int]:
    """gamma[j] = number of receivable blocks with |Gamma| = j."""
    out: Dict[int, int] = {}
    for (wt, idx), cnt in build_and_count(code).items():
        out[idx] = out.get(idx, 0) + cnt
    return dict(sorted(out.items()))


def codebook_size(code: CyclicCode) -> int:
    """|C*| = total receivable blocks = sum of the gamma counts."""
    return sum(gamma_counts(code).values())


def rho_c(code: CyclicCode) -> float:
    """Average redundancy 1 + 2^-k * sum_j j*gamma[j]*log2(j)."""
    total = 0.0
    for j, g in gamma_counts(code).items():
        if j > 1:
            total += j * log2(j) * float(Fraction(g, 1 << code.k))
    return 1.0 + total
