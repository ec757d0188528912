"""Binary-word arithmetic: weights, prefix flips, rotations, running sums.

Words are finite bit strings with 1-based positions; position 1 is the
leftmost character of the textual form "01101...".  Length is explicit so
leading zeros are significant.  A word of even length n = 2m has weight
target m + q when it is "q-balanced", i.e. its imbalance 2*(wt - m)
equals 2q.

Everything here is pure and allocation-light: a word is an (int, length)
pair where the textual string is read as a binary numeral.
"""

from __future__ import annotations

from typing import Iterator, List


class BitWord:
    """Immutable binary word; position 1 = leftmost bit of str(word)."""

    __slots__ = ("value", "length")

    def __init__(self, value: int, length: int):
        if length < 0:
            raise ValueError("length must be nonnegative")
        if value < 0 or value >> length:
            raise ValueError(f"value {value} does not fit in {length} bits")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "length", length)

    def __setattr__(self, name, val):
        raise AttributeError("BitWord is immutable")

    @classmethod
    def from_str(cls, text: str) -> "BitWord":
        text = text.replace(" ", "")
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(int(text, 2) if text else 0, len(text))

    @classmethod
    def from_bits(cls, bits) -> "BitWord":
        value = 0
        n = 0
        for b in bits:
            value = (value << 1) | (b & 1)
            n += 1
        return cls(value, n)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitWord)
            and self.length == other.length
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.value, self.length))

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BitWord('{self}')"

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length - 1, -1, -1):
            yield (self.value >> i) & 1

    def bit(self, i: int) -> int:
        """Bit at 1-based position i (leftmost = 1)."""
        if not 1 <= i <= self.length:
            raise ValueError(f"position {i} out of range 1..{self.length}")
        return (self.value >> (self.length - i)) & 1

    def prefix(self, j: int) -> "BitWord":
        """First j bits."""
        if not 0 <= j <= self.length:
            raise ValueError(f"prefix length {j} out of range")
        return BitWord(self.value >> (self.length - j), j)

    def suffix(self, j: int) -> "BitWord":
        """Last j bits."""
        if not 0 <= j <= self.length:
            raise ValueError(f"suffix length {j} out of range")
        return BitWord(self.value & ((1 << j) - 1), j)

    def concat(self, other: "BitWord") -> "BitWord":
        return BitWord((self.value << other.length) | other.value, self.length + other.length)


def all_words(n: int) -> Iterator[BitWord]:
    """Every length-n word, in numeral order (0...0 first)."""
    for v in range(1 << n):
        yield BitWord(v, n)


def weight(w: BitWord) -> int:
    """Number of 1 symbols."""
    return w.value.bit_count()


def imbalance(w: BitWord) -> int:
    """(#ones - #zeros), signed."""
    return 2 * weight(w) - w.length


def flip_prefix(w: BitWord, j: int) -> BitWord:
    """Complement the first j bits; involutive for fixed j."""
    if not 0 <= j <= w.length:
        raise ValueError(f"flip length {j} out of range 0..{w.length}")
    mask = ((1 << j) - 1) << (w.length - j)
    return BitWord(w.value ^ mask, w.length)


def complement(w: BitWord) -> BitWord:
    return BitWord(w.value ^ ((1 << w.length) - 1), w.length)


def cyclic_shift(w: BitWord, i: int) -> BitWord:
    """Rotate right by i positions (mod length); negative i rotates left."""
    n = w.length
    if n == 0:
        return w
    i %= n
    if i == 0:
        return w
    return BitWord(((w.value >> i) | (w.value << (n - i))) & ((1 << n) - 1), n)


def running_sum(w: BitWord) -> List[int]:
    """R_0 = 0, R_i = R_{i-1} +/- 1 per bit i (1 -> +1); final entry = imbalance."""
    out = [0] * (w.length + 1)
    r = 0
    for i, b in enumerate(w, start=1):
        r += 1 if b else -1
        out[i] = r
    return out


def cyclic_running_sum(w: BitWord) -> List[int]:
    """Paired running sum of an odd-length word, indexed 0..m-1.

    For length 2m-1, entry i adds the +/-1 contributions of positions i
    and i+m to entry i-1.  Entry 0 is 0 and position m itself is never
    consumed, so the vector has m entries.
    """
    if w.length % 2 == 0:
        raise ValueError(f"length {w.length} is even; need odd length 2m-1")
    m = (w.length + 1) // 2
    out = [0] * m
    r = 0
    for i in range(1, m):
        r += 1 if w.bit(i) else -1
        r += 1 if w.bit(i + m) else -1
        out[i] = r
    return out


def balancing_indices(w: BitWord, q: int) -> List[int]:
    """All j in 0..n with weight(flip_prefix(w, j)) == n/2 + q, ascending.

    May be empty for q > 0; for q = 0 it never is (Knuth's observation).
    """
    n = w.length
    if n % 2:
        raise ValueError(f"length {n} is odd; balancing needs even length")
    target = n // 2 + q
    out = []
    wt = weight(w)
    if wt == target:
        out.append(0)
    for j, b in enumerate(w, start=1):
        wt += -1 if b else 1
        if wt == target:
            out.append(j)
    return out
