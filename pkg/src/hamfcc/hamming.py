"""The binary [2^n-1, 2^n-1-n, 3] Hamming code and its sphere structure.

Column ``j`` (1-based) of the parity-check matrix is the n-bit binary
expansion of ``j``, most significant bit in row 0.  With this ordering the
syndrome of a received word, read as an integer, is the 1-based position of
the flipped bit.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import CapacityError, DimensionError
from .gf2 import BitVector, Gf2Matrix, dual_code, span_enumerate, span_values

MIN_N = 2
MAX_N = 6
MAX_ENUM_N = 4


@dataclass(frozen=True)
class HammingCode:
    n: int
    length: int
    dimension: int
    parity_check: Gf2Matrix
    column_order: tuple[int, ...]


@lru_cache(maxsize=None)
def build_hamming(n: int) -> HammingCode:
    if not MIN_N <= n <= MAX_N:
        raise CapacityError(f"n={n} outside supported range [{MIN_N}, {MAX_N}]")
    length = (1 << n) - 1
    cols = tuple(range(1, length + 1))
    rows = []
    for r in range(n):
        shift = n - 1 - r
        rows.append(BitVector.from_bits([(j >> shift) & 1 for j in cols]))
    return HammingCode(
        n=n,
        length=length,
        dimension=length - n,
        parity_check=Gf2Matrix.from_rows(rows, length),
        column_order=cols,
    )


def syndrome_value(value: int, length: int) -> int:
    """Syndrome of an int-encoded word: XOR of the column indices of its set positions."""
    s = 0
    while value:
        b = value.bit_length() - 1
        s ^= length - b
        value ^= 1 << b
    return s


def syndrome_array(values: np.ndarray, length: int) -> np.ndarray:
    s = np.zeros_like(values)
    for b in range(length):
        s ^= ((values >> b) & 1) * (length - b)
    return s


def syndrome(code: HammingCode, v: BitVector) -> int:
    if v.length != code.length:
        raise DimensionError(f"word of length {v.length} for a length-{code.length} code")
    return syndrome_value(v.value, code.length)


def flip_mask(length: int, position: int) -> int:
    """Int mask of the 1-based ``position``."""
    return 1 << (length - position)


def _require_enumerable(code: HammingCode) -> None:
    if code.n > MAX_ENUM_N:
        raise CapacityError(f"full enumeration limited to n <= {MAX_ENUM_N}, got n={code.n}")


@lru_cache(maxsize=None)
def _codeword_values(n: int) -> np.ndarray:
    code = build_hamming(n)
    basis = dual_code(code.parity_check.row_data, code.length)
    vals = span_values([b.value for b in basis])
    assert not syndrome_array(vals, code.length).any()
    vals.setflags(write=False)
    return vals


def codeword_values(code: HammingCode) -> np.ndarray:
    """Codewords as a sorted read-only int64 array."""
    _require_enumerable(code)
    return _codeword_values(code.n)


def enumerate_codewords(code: HammingCode) -> list[BitVector]:
    return [BitVector(code.length, int(x)) for x in codeword_values(code)]


def syndrome_decode(code: HammingCode, v: BitVector) -> tuple[BitVector, int | None]:
    """Nearest codeword and the 1-based flipped position (None when ``v`` is a codeword)."""
    s = syndrome(code, v)
    if s == 0:
        return v, None
    return BitVector(code.length, v.value ^ flip_mask(code.length, s)), s


def hcmf(code: HammingCode, v: BitVector) -> int:
    """Hamming-code membership: 1 on codewords, 0 elsewhere."""
    return int(syndrome(code, v) == 0)


def weight_partition(codewords: Sequence[BitVector]) -> tuple[list[BitVector], list[BitVector]]:
    even = [c for c in codewords if c.weight() % 2 == 0]
    odd = [c for c in codewords if c.weight() % 2 == 1]
    return even, odd


@lru_cache(maxsize=None)
def _weight4_values(n: int) -> tuple[int, ...]:
    code = build_hamming(n)
    length = code.length
    found = []
    for cols in combinations(range(1, length + 1), 4):
        a, b, c, d = cols
        if a ^ b ^ c ^ d == 0:
            found.append(sum(flip_mask(length, j) for j in cols))
    return tuple(sorted(found))


def weight4_generators(code: HammingCode) -> list[BitVector]:
    """The weight-4 codewords, by scanning all weight-4 words for a zero syndrome."""
    if code.n > MAX_N:
        raise CapacityError(f"weight-4 enumeration limited to n <= {MAX_N}")
    return [BitVector(code.length, v) for v in _weight4_values(code.n)]


@dataclass(frozen=True)
class SpherePartition:
    """Radius-1 spheres around every codeword.

    ``center_index[x]`` is the index into ``centers`` of the sphere holding the
    word with int value ``x``; ``flipped[x]`` is the 1-based flipped position,
    or 0 for the center itself.
    """

    length: int
    centers: tuple[BitVector, ...]
    center_index: np.ndarray
    flipped: np.ndarray

    def sphere_of(self, v: BitVector) -> tuple[int, int | None]:
        i = int(self.center_index[v.value])
        j = int(self.flipped[v.value])
        return i, (j or None)

    def members(self, i: int) -> list[BitVector]:
        c = self.centers[i].value
        return [self.centers[i]] + [
            BitVector(self.length, c ^ flip_mask(self.length, j)) for j in range(1, self.length + 1)
        ]


@lru_cache(maxsize=None)
def _sphere_partition(n: int) -> SpherePartition:
    code = build_hamming(n)
    length = code.length
    cw = codeword_values(code)
    size = 1 << length
    center_index = np.full(size, -1, dtype=np.int32)
    flipped = np.full(size, -1, dtype=np.int8)
    center_index[cw] = np.arange(len(cw))
    flipped[cw] = 0
    for j in range(1, length + 1):
        nb = cw ^ flip_mask(length, j)
        if (center_index[nb] != -1).any():
            raise AssertionError("spheres overlap")
        center_index[nb] = np.arange(len(cw))
        flipped[nb] = j
    center_index.setflags(write=False)
    flipped.setflags(write=False)
    return SpherePartition(
        length=length,
        centers=tuple(BitVector(length, int(x)) for x in cw),
        center_index=center_index,
        flipped=flipped,
    )


def sphere_partition(code: HammingCode) -> SpherePartition:
    _require_enumerable(code)
    return _sphere_partition(code.n)


def even_weight_basis(code: HammingCode) -> list[BitVector]:
    """A spanning set of the even-weight codewords, read off the enumeration."""
    even, _ = weight_partition(enumerate_codewords(code))
    return even


def affine_punctured_tables(n: int) -> set[BitVector]:
    """Punctured truth tables of every affine function a.x + c on GF(2)^n.

    The x = 0 coordinate is dropped; the rest run over x = 1 .. 2^n-1.
    """
    length = (1 << n) - 1
    out = set()
    for a in range(1 << n):
        for c in (0, 1):
            bits = [((a & x).bit_count() + c) & 1 for x in range(1, length + 1)]
            out.add(BitVector.from_bits(bits))
    return out


def rm_star_dual_check(n: int) -> bool:
    """True iff the dual of the even-weight subcode equals the punctured first-order RM code."""
    code = build_hamming(n)
    _require_enumerable(code)
    dual_basis = dual_code(even_weight_basis(code), code.length)
    dual = set(span_enumerate(dual_basis, code.length))
    return dual == affine_punctured_tables(n)


def export_json(code: HammingCode) -> str:
    doc = {
        "n": code.n,
        "length": code.length,
        "dimension": code.dimension,
        "parity_check_rows": [str(r) for r in code.parity_check.row_data],
    }
    if code.n <= MAX_ENUM_N:
        doc["codewords"] = [str(c) for c in enumerate_codewords(code)]
    return json.dumps(doc, indent=2) + "\n"
