"""Binary covering codes and the hypercube optimal-pegging bounds built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graphs import GraphError
from .surd import PHI, SQRT5, Surd


@dataclass(frozen=True)
class BinaryCode:
    length: int
    codewords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.codewords)) != len(self.codewords):
            raise ValueError("codewords must be distinct")
        if any(not 0 <= w < 1 << self.length for w in self.codewords):
            raise ValueError("codeword longer than the code length")

    @property
    def radius(self) -> int:
        return covering_radius(self)

    def __len__(self) -> int:
        return len(self.codewords)


def _popcounts(m: int) -> np.ndarray:
    words = np.arange(1 << m, dtype=np.int64)
    counts = np.zeros(1 << m, dtype=np.int64)
    for b in range(m):
        counts += (words >> b) & 1
    return counts


def covering_radius(code: BinaryCode) -> int:
    """Largest Hamming distance from a word of ``Q_m`` to its nearest codeword."""
    if not code.codewords:
        raise ValueError("covering radius of an empty code is undefined")
    words = np.arange(1 << code.length, dtype=np.int64)
    pop = _popcounts(code.length)
    nearest = np.full(1 << code.length, code.length + 1, dtype=np.int64)
    for c in code.codewords:
        np.minimum(nearest, pop[words ^ c], out=nearest)
    return int(nearest.max())


def _ball_offsets(m: int, r: int) -> np.ndarray:
    offsets = [sum(1 << b for b in bits) for k in range(min(r, m) + 1) for bits in combinations(range(m), k)]
    return np.array(sorted(offsets), dtype=np.int64)


def greedy_covering_code(m: int, r: int) -> BinaryCode:
    """Greedy code of length ``m`` with covering radius at most ``r``.

    Each step adds the word whose radius-``r`` ball covers the most
    still-uncovered words, the numerically smallest on ties.
    """
    if not 1 <= m <= 16:
        raise ValueError("code length must be between 1 and 16")
    if not 0 <= r <= m:
        raise ValueError("radius must be between 0 and the length")
    words = np.arange(1 << m, dtype=np.int64)
    offsets = _ball_offsets(m, r)
    uncovered = np.ones(1 << m, dtype=bool)
    chosen: list[int] = []
    while uncovered.any():
        gain = np.zeros(1 << m, dtype=np.int64)
        for e in offsets:
            gain += uncovered[words ^ e]
        best = int(gain.argmax())  # argmax returns the first, i.e. smallest, maximiser
        chosen.append(best)
        uncovered[best ^ offsets] = False
    code = BinaryCode(m, tuple(chosen))
    assert covering_radius(code) <= r
    return code


def free_radius(n: int) -> int:
    """``ceil(n / (phi + 2))``, exactly."""
    return (Surd(n) / (PHI + 2)).ceil()


def cube_code_distribution(n: int) -> list[int]:
    """All-reaching distribution ``Q_r x C`` on ``Q_n``.

    ``r = ceil(n / (phi + 2))`` free leading coordinates, the remaining
    ``m = n - r`` coordinates range over a greedy covering code of radius ``r``.
    """
    if not 2 <= n <= 6:
        raise GraphError("cube_code_distribution supports 2 <= n <= 6")
    r = free_radius(n)
    m = n - r
    codewords = greedy_covering_code(m, r).codewords if m > 0 else (0,)
    return sorted((free << m) | c for free in range(1 << r) for c in codewords)


def hypercube_weight_lower_bound(n: int) -> int:
    """``ceil((sqrt5 - 1) ** n)``, a lower bound on the optimal pegging number of ``Q_n``."""
    if n < 1:
        raise ValueError("dimension must be positive")
    return ((SQRT5 - 1) ** n).ceil()


def hypercube_upper_envelope(n: int) -> float:
    """``(2n) ** 1.5 * (sqrt5 - 1) ** n`` evaluated in floating point."""
    return (2 * n) ** 1.5 * (math.sqrt(5) - 1) ** n


def binary_entropy(x: float) -> float:
    if x <= 0 or x >= 1:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entropy_dimension_bound(m: int, r: int) -> float:
    """Dimension bound ``m (1 - H(r/m)) + 1.5 lg m + 1`` for linear covering codes.

    Informational only; never used in a certificate.
    """
    if m < 1 or not 0 <= r <= m:
        raise ValueError("need m >= 1 and 0 <= r <= m")
    return m * (1 - binary_entropy(r / m)) + 1.5 * math.log2(m) + 1
