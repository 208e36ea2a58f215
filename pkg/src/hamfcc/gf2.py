"""Packed binary vectors and linear algebra over GF(2).

A :class:`BitVector` stores its bits in a Python ``int`` whose binary
expansion, most significant bit first, is the written bit string.  Position
0 is therefore the leftmost character, and sorting by ``value`` sorts the
strings lexicographically.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, DimensionError

SPAN_CAP = 26


@dataclass(frozen=True, order=True, slots=True)
class BitVector:
    length: int
    value: int

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError(f"negative length {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise DimensionError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        s = s.strip()
        if any(ch not in "01" for ch in s):
            raise ValueError(f"not a bit string: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> BitVector:
        value = 0
        for p in positions:
            if not 0 <= p < length:
                raise DimensionError(f"position {p} outside length {length}")
            value |= 1 << (length - 1 - p)
        return cls(length, value)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitVector:
        return cls.from_positions(len(bits), (i for i, b in enumerate(bits) if b))

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> (self.length - 1 - i)) & 1

    def __len__(self) -> int:
        return self.length

    def weight(self) -> int:
        return self.value.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.length) if self[i]]

    def _check(self, other: BitVector) -> None:
        if self.length != other.length:
            raise DimensionError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.value ^ other.value)

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return (self.value & other.value).bit_count() & 1

    def complement(self) -> BitVector:
        return BitVector(self.length, self.value ^ ((1 << self.length) - 1))


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    row_data: tuple[BitVector, ...]

    def __post_init__(self):
        if len(self.row_data) != self.rows:
            raise DimensionError("row count does not match row_data")
        for r in self.row_data:
            if r.length != self.cols:
                raise DimensionError(f"row of length {r.length} in a {self.cols}-column matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector], cols: int | None = None) -> Gf2Matrix:
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            cols = rows[0].length
        return cls(len(rows), cols, tuple(rows))

    def column(self, j: int) -> BitVector:
        return BitVector.from_bits([r[j] for r in self.row_data])

    def rank(self) -> int:
        return rank(self.row_data)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.row_data)


def hamming_distance(a: BitVector, b: BitVector) -> int:
    if a.length != b.length:
        raise DimensionError(f"length mismatch: {a.length} vs {b.length}")
    return (a.value ^ b.value).bit_count()


def _common_length(vectors: Sequence[BitVector], length: int | None = None) -> int | None:
    for v in vectors:
        if length is None:
            length = v.length
        elif v.length != length:
            raise DimensionError(f"length mismatch: {v.length} vs {length}")
    return length


def _echelon(values: Iterable[int]) -> list[tuple[int, int]]:
    # Reduced row echelon form on int-encoded rows: list of (pivot bit, row),
    # each row zero at every other row's pivot.
    rows: list[tuple[int, int]] = []
    for v in values:
        for p, r in rows:
            if (v >> p) & 1:
                v ^= r
        if v:
            p = v.bit_length() - 1
            rows = [(q, r ^ v if (r >> p) & 1 else r) for q, r in rows]
            rows.append((p, v))
    return rows


def rank(vectors: Sequence[BitVector]) -> int:
    _common_length(vectors)
    return len(_echelon(v.value for v in vectors))


def independent_subset(vectors: Sequence[BitVector]) -> list[BitVector]:
    """Greedy maximal linearly independent subset, in input order."""
    _common_length(vectors)
    pivots: dict[int, int] = {}
    keep = []
    for vec in vectors:
        v = vec.value
        while v:
            p = v.bit_length() - 1
            if p not in pivots:
                pivots[p] = v
                keep.append(vec)
                break
            v ^= pivots[p]
    return keep


def express(basis: Sequence[BitVector], target: BitVector) -> list[int] | None:
    """Indices of basis vectors whose XOR equals ``target``, or None if outside the span."""
    _common_length(list(basis) + [target])
    pivots: dict[int, tuple[int, int]] = {}
    for i, vec in enumerate(basis):
        v, combo = vec.value, 1 << i
        while v:
            p = v.bit_length() - 1
            if p not in pivots:
                pivots[p] = (v, combo)
                break
            pv, pc = pivots[p]
            v ^= pv
            combo ^= pc
    v, combo = target.value, 0
    while v:
        p = v.bit_length() - 1
        if p not in pivots:
            return None
        pv, pc = pivots[p]
        v ^= pv
        combo ^= pc
    return [i for i in range(len(basis)) if (combo >> i) & 1]


def span_values(values: Sequence[int]) -> np.ndarray:
    """All XOR combinations of independent int-encoded vectors, sorted ascending."""
    if len(values) > SPAN_CAP:
        raise CapacityError(f"span of {len(values)} vectors exceeds cap {SPAN_CAP}")
    if any(v >> 63 for v in values):
        out = [0]
        for v in values:
            out += [x ^ v for x in out]
        return np.array(sorted(out), dtype=object)
    span = np.zeros(1, dtype=np.int64)
    for v in values:
        span = np.concatenate([span, span ^ np.int64(v)])
    span.sort()
    return span


def span_enumerate(basis: Sequence[BitVector], length: int | None = None) -> list[BitVector]:
    """All 2^rank XOR combinations of ``basis``, sorted ascending.

    ``length`` is only needed to size the zero vector when ``basis`` is empty.
    """
    length = _common_length(basis, length)
    if len(basis) > SPAN_CAP:
        raise CapacityError(f"basis of size {len(basis)} exceeds cap {SPAN_CAP}")
    if length is None:
        length = 0
    indep = independent_subset(basis)
    return [BitVector(length, int(x)) for x in span_values([b.value for b in indep])]


def dual_code(basis: Sequence[BitVector], ambient_length: int) -> list[BitVector]:
    """Basis of the orthogonal complement of span(basis) in GF(2)^ambient_length.

    Returned vectors are sorted ascending by value.
    """
    _common_length(basis, ambient_length)
    rows = _echelon(v.value for v in basis)
    pivot_bits = {p for p, _ in rows}
    out = []
    for f in range(ambient_length):
        if f in pivot_bits:
            continue
        y = 1 << f
        for p, r in rows:
            if (r >> f) & 1:
                y |= 1 << p
        out.append(BitVector(ambient_length, y))
    out.sort()
    return out


def popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)
