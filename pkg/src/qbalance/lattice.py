"""Exact enumeration of monotone lattice paths and the word-to-path map.

A simple path takes unit steps -> and ^ in the positive quadrant
directions.  Three counts are provided:

  * free paths between two points (a binomial);
  * paths confined weakly between the lines Y = X + s and Y = X + t
    (touching either line is allowed), via the alternating reflection
    sum, plus a trigonometric closed form used only as a cross-check;
  * paths weakly above the diagonal Y = X (the ballot/Catalan count).

Counts are exact Python integers; binomial path counts overflow 64 bits
long before the sizes used here, so nothing is ever done in floating
point on the counting side.  The cosine closed form amplifies rounding
at large exponents and is documented as unstable past ~64 steps.

A length-n binary word maps to a path by reading 0 as ^ and 1 as ->,
starting from (0, wt - m) for a reference half-length m.  The "width" of
a path is the spread max(Y-X) - min(Y-X); it is the statistic that
controls prefix lengths in the balancing schemes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .words import BitWord

LatticePoint = Tuple[int, int]

# Counts are arbitrary-precision ints; exact for any n we can enumerate.
BigCount = int


@dataclass(frozen=True)
class PathBand:
    """Weak band between the lines Y = X + s (below) and Y = X + t (above)."""

    s: int
    t: int

    def __post_init__(self):
        if self.s > self.t:
            raise ValueError(f"band requires s <= t, got s={self.s}, t={self.t}")

    @property
    def height(self) -> int:
        return self.t - self.s + 2


@lru_cache(maxsize=None)
def _binom_row(n: int) -> Tuple[int, ...]:
    return tuple(math.comb(n, j) for j in range(n + 1))


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return _binom_row(n)[k]


def count_free(start: LatticePoint, end: LatticePoint) -> BigCount:
    """Number of simple paths from start to end."""
    dx = end[0] - start[0]
    dy = end[1] - start[1]
    if dx < 0 or dy < 0:
        raise ValueError(f"negative displacement {start} -> {end}")
    return math.comb(dx + dy, dx)


def _in_band(p: LatticePoint, band: PathBand) -> bool:
    return band.s <= p[1] - p[0] <= band.t


def count_banded(start: LatticePoint, end: LatticePoint, band: PathBand) -> BigCount:
    """Paths from start to end staying weakly between Y=X+s and Y=X+t.

    Endpoints outside the band yield 0 rather than an error so that
    inclusion-exclusion callers need no case analysis.
    """
    a, b = start
    c, d = end
    dx, dy = c - a, d - b
    if dx < 0 or dy < 0:
        raise ValueError(f"negative displacement {start} -> {end}")
    if not (_in_band(start, band) and _in_band(end, band)):
        return 0
    n = dx + dy
    dh = band.height
    total = 0
    kmax = n // dh + 2
    for k in range(-kmax, kmax + 1):
        total += _binom(n, dx - k * dh) - _binom(n, c - b - k * dh + band.t + 1)
    return total


def count_banded_trig(start: LatticePoint, end: LatticePoint, band: PathBand) -> float:
    """Cosine/sine closed form of count_banded; cross-check only.

    Relative agreement with the exact count is ~1e-9 up to about 64
    steps; beyond that cos**n magnifies rounding and the value is
    unreliable.
    """
    a, b = start
    c, d = end
    dx, dy = c - a, d - b
    if dx < 0 or dy < 0:
        raise ValueError(f"negative displacement {start} -> {end}")
    if not (_in_band(start, band) and _in_band(end, band)):
        return 0.0
    n = dx + dy
    if n == 0:
        return 1.0
    dh = band.height
    total = 0.0
    for k in range(1, (dh - 1) // 2 + 1):
        total += (
            (4.0 / dh)
            * (2.0 * math.cos(math.pi * k / dh)) ** n
            * math.sin(math.pi * k * (a - b + band.t + 1) / dh)
            * math.sin(math.pi * k * (c - d + band.t + 1) / dh)
        )
    return total


def count_above_diagonal(start: LatticePoint, end: LatticePoint) -> BigCount:
    """Paths from start to end staying weakly above Y = X."""
    a, b = start
    c, d = end
    if a > b or c > d:
        raise ValueError(f"endpoints must satisfy x <= y: {start} -> {end}")
    dx, dy = c - a, d - b
    if dx < 0 or dy < 0:
        raise ValueError(f"negative displacement {start} -> {end}")
    n = dx + dy
    return _binom(n, dx) - _binom(n, d - a + 1)


def path_of_word(w: BitWord, m: int) -> List[LatticePoint]:
    """Path of w relative to half-length m: start (0, wt-m), 0 steps ^, 1 steps ->."""
    from .words import weight

    x, y = 0, weight(w) - m
    points = [(x, y)]
    for bit in w:
        if bit:
            x += 1
        else:
            y += 1
        points.append((x, y))
    return points


def width(path: List[LatticePoint]) -> int:
    """Spread of Y - X along the path."""
    if not path:
        raise ValueError("width of an empty path is undefined")
    offsets = [y - x for x, y in path]
    return max(offsets) - min(offsets)
