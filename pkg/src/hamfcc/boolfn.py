"""Boolean functions on GF(2)^n, their Walsh spectra, bentness and Krawtchouk values.

A point x of GF(2)^n is identified with the integer whose most significant
bit is x1.  The truth table lists f(0), f(1), ..., f(2^n - 1); dropping f(0)
gives the punctured table, whose position i is the point x = i + 1.  That is
the same ordering as the Hamming parity-check columns, so u.v for a punctured
table u and a codeword v is a character evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from .errors import ConsistencyError, DimensionError, DomainError
from .gf2 import BitVector

MAX_BENT_N = 8


@dataclass(frozen=True)
class BooleanFunction:
    n: int
    table: BitVector

    def __post_init__(self):
        if self.table.length != 1 << self.n:
            raise DimensionError(f"table of length {self.table.length} for n={self.n}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], int]) -> BooleanFunction:
        return cls(n, BitVector.from_bits([fn(x) & 1 for x in range(1 << n)]))

    @classmethod
    def from_values(cls, values) -> BooleanFunction:
        values = list(values)
        n = len(values).bit_length() - 1
        if 1 << n != len(values):
            raise DimensionError(f"truth table length {len(values)} is not a power of two")
        return cls(n, BitVector.from_bits(values))

    @classmethod
    def from_punctured(cls, u: BitVector) -> BooleanFunction:
        """The function with f(0) = 0 whose punctured table is ``u``."""
        n = (u.length + 1).bit_length() - 1
        if (1 << n) - 1 != u.length:
            raise DimensionError(f"punctured length {u.length} is not 2^n - 1")
        # f(0) = 0 is the leading bit, so the value is unchanged
        return cls(n, BitVector(1 << n, u.value))

    def values(self) -> np.ndarray:
        return np.array([self.table[x] for x in range(1 << self.n)], dtype=np.int8)

    def to_text(self) -> str:
        return f"n={self.n}\n{self.table}\n"

    @classmethod
    def from_text(cls, text: str) -> BooleanFunction:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2 or not lines[0].startswith("n="):
            raise ValueError("expected 'n=<n>' followed by one line of table bits")
        n = int(lines[0][2:])
        return cls(n, BitVector.from_str(lines[1]))


@dataclass(frozen=True)
class WalshSpectrum:
    n: int
    coefficients: tuple[int, ...]

    def __getitem__(self, a: int) -> int:
        return self.coefficients[a]

    def __iter__(self):
        return iter(self.coefficients)


def punctured_truth_table(f: BooleanFunction) -> BitVector:
    if f(0) != 0:
        raise DomainError("punctured table requires f(0) = 0")
    return BitVector((1 << f.n) - 1, f.table.value)


def fwht(signs: np.ndarray) -> np.ndarray:
    """In-place-style butterfly on the last axis; works on a batch of rows."""
    a = np.array(signs, dtype=np.int64)
    size = a.shape[-1]
    h = 1
    while h < size:
        a = a.reshape(*a.shape[:-1], size // (2 * h), 2, h)
        x = a[..., 0, :].copy()
        y = a[..., 1, :]
        a[..., 0, :] = x + y
        a[..., 1, :] = x - y
        a = a.reshape(*a.shape[:-3], size)
        h *= 2
    return a


def walsh_transform(f: BooleanFunction) -> WalshSpectrum:
    signs = 1 - 2 * f.values().astype(np.int64)
    return WalshSpectrum(f.n, tuple(int(w) for w in fwht(signs)))


def walsh_coefficient(f: BooleanFunction, a: int) -> int:
    """Definitional sum over all x of (-1)^(f(x) + a.x)."""
    total = 0
    for x in range(1 << f.n):
        total += -1 if (f(x) + (a & x).bit_count()) & 1 else 1
    return total


def is_bent(f: BooleanFunction) -> bool:
    if f.n % 2:
        raise DomainError(f"bentness is defined for even n only, got n={f.n}")
    v = 1 << (f.n // 2)
    return all(abs(w) == v for w in walsh_transform(f))


def mm_bent(n: int) -> BooleanFunction:
    """Inner-product bent function x1 x(m+1) + ... + xm x(2m), m = n/2."""
    if n % 2 or n <= 0:
        raise DomainError(f"bent functions need even n >= 2, got n={n}")
    if n > MAX_BENT_N:
        raise DomainError(f"n={n} exceeds supported maximum {MAX_BENT_N}")
    m = n // 2

    def coord(x: int, i: int) -> int:
        # x_i, 1-based, with x1 the most significant bit
        return (x >> (n - i)) & 1

    return BooleanFunction.from_callable(
        n, lambda x: sum(coord(x, i) & coord(x, m + i) for i in range(1, m + 1)) & 1
    )


def krawtchouk(k: int, w: int, N: int) -> int:
    if not 0 <= w <= N:
        raise DomainError(f"need 0 <= w <= N, got w={w}, N={N}")
    # math.comb already returns 0 when the lower index exceeds the upper
    return sum((-1) ** j * comb(w, j) * comb(N - w, k - j) for j in range(k + 1))


def krawtchouk4(w: int, N: int) -> int:
    return krawtchouk(4, w, N)


def krawtchouk4_closed(w: int, N: int) -> int:
    """(X^4 + (8 - 6N) X^2 + 3N^2 - 6N) / 24 with X = N - 2w."""
    if not 0 <= w <= N:
        raise DomainError(f"need 0 <= w <= N, got w={w}, N={N}")
    x = N - 2 * w
    q, r = divmod(x**4 + (8 - 6 * N) * x**2 + 3 * N * N - 6 * N, 24)
    if r:
        raise ConsistencyError(f"closed-form K4 not divisible by 24 at w={w}, N={N}")
    return q
