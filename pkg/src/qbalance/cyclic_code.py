"""Binary cyclic codes over GF(2) at desk scale.

Polynomials are plain ints with bit i holding the coefficient of X**i,
so addition is XOR and divisibility is long division with shifts.  Word
position i (1-based, leftmost in the textual form) carries the
coefficient of X**(i-1); under this convention the [7,3] simplex code
generated by 1 + X^2 + X^3 + X^4 contains 1011100, read left to right.

The parity-check matrix defaults to the standard circulant arrangement:
row j holds the reversed check polynomial shifted j places.  An explicit
row override is accepted (and validated against the code) because the
shift-tracking trellis depends on the exact column order of H.

Enumeration, minimum distance, and nearest-codeword work are guarded to
k <= 24; larger codes still construct and encode fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import CapacityError
from .words import BitWord, weight

ENUMERATION_MAX_K = 24

Gf2Poly = int  # bit i = coefficient of X**i


def poly_deg(p: Gf2Poly) -> int:
    if p == 0:
        raise ValueError("zero polynomial has no degree")
    return p.bit_length() - 1


def poly_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_divmod(a: Gf2Poly, b: Gf2Poly) -> Tuple[Gf2Poly, Gf2Poly]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = poly_deg(b)
    quo = 0
    while a and poly_deg(a) >= db:
        shift = poly_deg(a) - db
        quo |= 1 << shift
        a ^= b << shift
    return quo, a


def poly_from_coeffs(coeffs: Sequence[int]) -> Gf2Poly:
    """Coefficients c_0, c_1, ... of X^0, X^1, ..."""
    p = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ValueError(f"coefficient {c} is not a bit")
        p |= c << i
    return p


def poly_coeffs(p: Gf2Poly, length: int) -> List[int]:
    return [(p >> i) & 1 for i in range(length)]


@dataclass(frozen=True)
class CyclicCode:
    """[n, k] binary cyclic code with fixed parity-check columns.

    parity_cols[i] is column h_{i+1} of H packed as an int, bit r = row r.
    gen_rows are the systematic generator rows in word form (first k
    positions form the identity), so encoding is a handful of XORs.
    """

    n: int
    k: int
    generator: Gf2Poly
    parity_cols: Tuple[int, ...]
    gen_rows: Tuple[int, ...]

    @property
    def r(self) -> int:
        return self.n - self.k


def _word_int_from_poly(p: Gf2Poly, n: int) -> int:
    """Poly -> word-convention int (position 1 = MSB = coeff of X^0)."""
    v = 0
    for i in range(n):
        if (p >> i) & 1:
            v |= 1 << (n - 1 - i)
    return v


def _default_parity_rows(n: int, k: int, h: Gf2Poly) -> List[List[int]]:
    hrev = poly_from_coeffs(list(reversed(poly_coeffs(h, k + 1))))
    rows = []
    for j in range(n - k):
        shifted = poly_coeffs(hrev << j, n)
        rows.append(shifted)
    return rows


def from_generator(
    n: int, g: Gf2Poly, parity_rows: Optional[Sequence[Sequence[int]]] = None
) -> CyclicCode:
    """Build the [n, n - deg g] cyclic code generated by g.

    Fails unless g divides X^n - 1.  parity_rows, when given, replaces
    the derived H row-by-row; it must still annihilate the code.
    """
    if g <= 0:
        raise ValueError("generator must be a nonzero polynomial")
    if poly_deg(g) >= n:
        raise ValueError(f"deg(g)={poly_deg(g)} must be < n={n}")
    xn1 = (1 << n) | 1  # X^n - 1 == X^n + 1 over GF(2)
    h, rem = poly_divmod(xn1, g)
    if rem:
        raise ValueError(f"generator {bin(g)} does not divide X^{n} - 1")
    k = n - poly_deg(g)

    rows = (
        [list(r) for r in parity_rows]
        if parity_rows is not None
        else _default_parity_rows(n, k, h)
    )
    if len(rows) != n - k or any(len(r) != n for r in rows):
        raise ValueError(f"parity check must be {n - k} rows of length {n}")
    cols = tuple(
        sum((rows[j][i] & 1) << j for j in range(n - k)) for i in range(n)
    )

    # Row-reduce the polynomial generator matrix to systematic form.
    raw = [_word_int_from_poly(g << j, n) for j in range(k)]
    for col in range(k):
        pivot_bit = 1 << (n - 1 - col)
        pivot = next((r for r in range(col, k) if raw[r] & pivot_bit), None)
        if pivot is None:
            raise ValueError("generator matrix is not systematic-reducible")
        raw[col], raw[pivot] = raw[pivot], raw[col]
        for r in range(k):
            if r != col and raw[r] & pivot_bit:
                raw[r] ^= raw[col]

    code = CyclicCode(n=n, k=k, generator=g, parity_cols=cols, gen_rows=tuple(raw))
    for row in raw:
        if _syndrome_int(code, row):
            raise ValueError("parity-check rows do not annihilate the code")
    return code


def full_space(n: int) -> CyclicCode:
    """The degenerate [n, n] code: every word is a codeword."""
    return from_generator(n, 1)


def encode_systematic(code: CyclicCode, msg: BitWord) -> BitWord:
    """Codeword whose first k positions equal msg."""
    if msg.length != code.k:
        raise ValueError(f"message length {msg.length} != k={code.k}")
    v = 0
    for j in range(code.k):
        if msg.value >> (code.k - 1 - j) & 1:
            v ^= code.gen_rows[j]
    return BitWord(v, code.n)


def _syndrome_int(code: CyclicCode, value: int) -> int:
    syn = 0
    v = value
    n = code.n
    while v:
        low = v & -v
        pos = n - low.bit_length()  # 0-based column index
        syn ^= code.parity_cols[pos]
        v ^= low
    return syn


def syndrome(code: CyclicCode, w: BitWord) -> int:
    if w.length != code.n:
        raise ValueError(f"word length {w.length} != n={code.n}")
    return _syndrome_int(code, w.value)


def contains(code: CyclicCode, w: BitWord) -> bool:
    return syndrome(code, w) == 0


def codewords(code: CyclicCode) -> Iterator[BitWord]:
    if code.k > ENUMERATION_MAX_K:
        raise CapacityError(f"k={code.k} exceeds enumeration guard {ENUMERATION_MAX_K}")
    for v in range(1 << code.k):
        yield encode_systematic(code, BitWord(v, code.k))


@lru_cache(maxsize=None)
def min_distance(code: CyclicCode) -> int:
    """Exhaustive minimum nonzero codeword weight."""
    best = code.n + 1
    for cw in codewords(code):
        if cw.value and weight(cw) < best:
            best = weight(cw)
    if best > code.n:
        raise ValueError("code has no nonzero codeword")
    return best


def parse_code_file(text: str) -> CyclicCode:
    """Code-spec format: `key = value` lines.

    Required: n, generator (comma-separated coefficients g0..g_{n-k}).
    Optional: k (validated), parity_row_1 .. parity_row_{n-k} (all rows
    or none).  '#' starts a comment.
    """
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, val = (part.strip() for part in line.split("=", 1))
        fields[key] = val
    if "n" not in fields or "generator" not in fields:
        raise ValueError("code spec needs at least 'n' and 'generator'")
    n = int(fields.pop("n"))
    g = poly_from_coeffs([int(c) for c in fields.pop("generator").split(",")])
    k_declared = int(fields.pop("k")) if "k" in fields else None

    row_keys = sorted(key for key in fields if key.startswith("parity_row_"))
    parity = None
    if row_keys:
        k = n - poly_deg(g)
        expect = [f"parity_row_{j}" for j in range(1, n - k + 1)]
        if row_keys != expect:
            raise ValueError(f"need all of {expect}, got {row_keys}")
        parity = [[int(c) for c in fields.pop(key).split(",")] for key in expect]
    if fields:
        raise ValueError(f"unknown keys in code spec: {sorted(fields)}")

    code = from_generator(n, g, parity)
    if k_declared is not None and k_declared != code.k:
        raise ValueError(f"declared k={k_declared} but generator implies k={code.k}")
    return code
