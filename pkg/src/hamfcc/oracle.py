"""Exhaustive reference computations for small n.

Nothing here calls into the graph, spectral or construction code.  Codewords
are found by testing every word against the parity-check definition, Walsh
coefficients by their defining sum, and distances by popcount.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .boolfn import BooleanFunction
from .errors import CapacityError
from .gf2 import BitVector, popcount

MAX_QUADRATIC_VERTICES = 20
MAX_L_N = 4
MAX_PAIR_N = 3


@dataclass(frozen=True)
class OracleReport:
    claim_id: str
    computed: int | bool
    expected: int | bool

    @property
    def match(self) -> bool:
        return self.computed == self.expected

    def to_dict(self) -> dict:
        return {"claim_id": self.claim_id, "computed": self.computed, "expected": self.expected, "match": self.match}


@dataclass(frozen=True)
class AssignmentSearch:
    min_total_d2: int
    optimal_count: int
    optimal_even_cuts: list[tuple[int, ...]]


def brute_codewords(n: int) -> list[int]:
    """Int values of every word whose set positions' column indices XOR to zero."""
    length = (1 << n) - 1
    if length > 15:
        raise CapacityError(f"brute-force codeword search limited to n <= 4, got n={n}")
    out = []
    for v in range(1 << length):
        s = 0
        for j in range(1, length + 1):
            if (v >> (length - j)) & 1:
                s ^= j
        if s == 0:
            out.append(v)
    return out


def brute_adjacency(values: list[int], d: int) -> np.ndarray:
    m = len(values)
    A = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        for k in range(m):
            if i != k and (values[i] ^ values[k]).bit_count() == d:
                A[i, k] = 1
    return A


def brute_force_min_quadratic(A) -> tuple[int, list[tuple[int, ...]]]:
    """Exact minimum of z^T A z over all +-1 vectors z, with every minimizer.

    Only vectors with z_0 = +1 are scored; negation gives the rest.
    """
    A = np.asarray(getattr(A, "adjacency", A), dtype=np.int64)
    m = A.shape[0]
    if m > MAX_QUADRATIC_VERTICES:
        raise CapacityError(f"{m} vertices exceed brute-force cap {MAX_QUADRATIC_VERTICES}")
    if m == 0:
        return 0, [()]
    half = np.arange(1 << (m - 1), dtype=np.int64)
    # column 0 fixed at +1, column k>0 from bit k-1
    bits = (half[:, None] >> np.arange(m - 1)[None, :]) & 1
    Z = np.hstack([np.ones((len(half), 1), dtype=np.int64), 1 - 2 * bits])
    vals = np.einsum("ij,jk,ik->i", Z, A, Z)
    best = int(vals.min())
    rows = Z[vals == best]
    argmin = [tuple(int(x) for x in r) for r in rows] + [tuple(int(-x) for x in r) for r in rows]
    return best, sorted(argmin)


def _walsh_definitional(tables: np.ndarray, n: int) -> np.ndarray:
    q = 1 << n
    pts = np.arange(q)
    chars = 1 - 2 * (popcount(pts[:, None] & pts[None, :]) & 1).astype(np.int64)
    return (1 - 2 * tables) @ chars


def brute_force_L_min(n: int) -> tuple[int, list[BooleanFunction]]:
    """Minimum of sum_a W(a)^4 - 4 W(a)^3 over every f with f(0) = 0."""
    if n > MAX_L_N:
        raise CapacityError(f"exhaustive L search limited to n <= {MAX_L_N}, got n={n}")
    q = 1 << n
    funcs = np.arange(1 << (q - 1), dtype=np.int64)
    # f(0) is the top bit of a q-bit table and stays 0
    tables = (funcs[:, None] >> np.arange(q - 1, -1, -1)[None, :]) & 1
    W = _walsh_definitional(tables, n)
    L = (W**4 - 4 * W**3).sum(axis=1)
    best = int(L.min())
    argmin = [BooleanFunction(n, BitVector(q, int(f))) for f in funcs[L == best]]
    return best, argmin


def _encode(x: int, p: int) -> int:
    return (x << 2) | p


def brute_force_pair_count(table) -> int:
    """Unordered encoded pairs at distance exactly 2, by definition."""
    if table.n > MAX_PAIR_N:
        raise CapacityError(f"pair-count oracle limited to n <= {MAX_PAIR_N}")
    words = [_encode(x, int(p)) for x, p in enumerate(table.parity)]
    count = 0
    for a, b in combinations(words, 2):
        if (a ^ b).bit_count() == 2:
            count += 1
    return count


def brute_force_min_distance(table) -> int:
    if table.n > MAX_PAIR_N:
        raise CapacityError(f"min-distance oracle limited to n <= {MAX_PAIR_N}")
    words = [_encode(x, int(p)) for x, p in enumerate(table.parity)]
    return min((a ^ b).bit_count() for a, b in combinations(words, 2))


def _sphere_words(center: int, length: int, p: int) -> list[int]:
    words = [_encode(center, p)]
    for b in range(length):
        words.append(_encode(center ^ (1 << b), p ^ 0b11))
    return words


def exhaustive_assignment_search(n: int) -> AssignmentSearch:
    """Minimum distance-2 pair count over every codeword parity assignment.

    Even-weight codewords range over {00, 11}, odd-weight over {01, 10}, and
    each non-codeword takes the complement of its sphere center.  Pair counts
    between two spheres depend only on the two center parities, so they are
    tabulated per sphere pair by brute force and summed per assignment.
    """
    if n > MAX_PAIR_N:
        raise CapacityError(f"assignment search limited to n <= {MAX_PAIR_N}")
    length = (1 << n) - 1
    cw = brute_codewords(n)
    even = [c for c in cw if c.bit_count() % 2 == 0]
    odd = [c for c in cw if c.bit_count() % 2 == 1]
    centers = even + odd
    choices = [(0b00, 0b11)] * len(even) + [(0b01, 0b10)] * len(odd)
    m = len(centers)

    def d2(ws_a, ws_b):
        return sum(1 for a in ws_a for b in ws_b if (a ^ b).bit_count() == 2)

    # choice index per center: 0 or 1 for bit k of the assignment number
    assign = np.arange(1 << m, dtype=np.int64)
    pick = (assign[:, None] >> np.arange(m)[None, :]) & 1
    total = np.zeros(len(assign), dtype=np.int64)
    for i in range(m):
        intra = []
        for p in choices[i]:
            ws = _sphere_words(centers[i], length, p)
            intra.append(sum(1 for a, b in combinations(ws, 2) if (a ^ b).bit_count() == 2))
        total += np.array(intra)[pick[:, i]]
    for i, k in combinations(range(m), 2):
        tab = np.zeros((2, 2), dtype=np.int64)
        for a, p in enumerate(choices[i]):
            wi = _sphere_words(centers[i], length, p)
            for b, q in enumerate(choices[k]):
                tab[a, b] = d2(wi, _sphere_words(centers[k], length, q))
        total += tab[pick[:, i], pick[:, k]]

    best = int(total.min())
    winners = pick[total == best]
    # even-weight centers sorted ascending, so column k is the k-th even codeword
    cuts = sorted({tuple(int(1 - 2 * x) for x in row[: len(even)]) for row in winners})
    return AssignmentSearch(best, int(len(winners)), cuts)
