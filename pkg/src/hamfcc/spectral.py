"""Spectrum of the distance-4 Cayley graph on the even-weight Hamming codewords.

Every eigenvector is a character e_u = ((-1)^(u.v))_v indexed by a punctured
truth table u, with eigenvalue the character sum over the weight-4
codewords.  The same eigenvalue follows from the Walsh spectrum of the
function f_u whose punctured table is u:

    24 * lambda_u = (1/q) * sum_a (W(a)^4 - 4 W(a)^3) - 3 q^2 + 14 q - 8,   q = 2^n.

Everything is exact integer arithmetic.
"""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._parallel import chunk_ranges, run_ordered
from .boolfn import BooleanFunction, fwht, walsh_transform
from .errors import CapacityError, ConsistencyError, DimensionError, DomainError
from .gf2 import BitVector, dual_code, popcount, span_values
from .hamming import build_hamming, even_weight_basis, weight4_generators

MAX_SWEEP_N = 4
METHODS = ("walsh", "direct", "both")


@dataclass(frozen=True)
class CharacterVector:
    u: BitVector
    entries: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalue for every punctured table u; ``lambdas[u.value]``."""

    n: int
    lambdas: np.ndarray = field(repr=False)
    lambda_min: int
    argmin_us: list[BitVector] = field(repr=False)
    method: str = "walsh"
    distinct_argmin: list[BitVector] | None = field(default=None, repr=False)

    @property
    def length(self) -> int:
        return (1 << self.n) - 1

    @property
    def lambda_by_u(self) -> dict[BitVector, int]:
        return {BitVector(self.length, u): int(lam) for u, lam in enumerate(self.lambdas)}

    def to_csv(self) -> str:
        width = max(1, -(-self.length // 4))
        buf = io.StringIO()
        buf.write("u_hex,lambda\n")
        for u, lam in enumerate(self.lambdas):
            buf.write(f"{u:0{width}x},{int(lam)}\n")
        buf.write(f"lambda_min,{self.lambda_min}\n")
        buf.write(f"argmin_count,{len(self.argmin_us)}\n")
        return buf.getvalue()


def _require_f0_zero(f: BooleanFunction) -> None:
    if f(0) != 0:
        raise DomainError("the eigenvalue formula requires f(0) = 0")


def eigenvalue_direct(u: BitVector, generators: Sequence[BitVector]) -> int:
    total = 0
    for s in generators:
        total += 1 - 2 * u.dot(s)
    return total


def objective_L(f: BooleanFunction) -> int:
    """Sum over a of W(a)^4 - 4 W(a)^3."""
    _require_f0_zero(f)
    return sum(w**4 - 4 * w**3 for w in walsh_transform(f))


def _lambda_from_L(L: int, n: int) -> int:
    q = 1 << n
    lam, r = divmod(L - q * (3 * q * q - 14 * q + 8), 24 * q)
    if r:
        raise ConsistencyError(f"eigenvalue formula left remainder {r} (n={n}, L={L})")
    return lam


def eigenvalue_walsh(f: BooleanFunction) -> int:
    return _lambda_from_L(objective_L(f), f.n)


def lower_bound_L(n: int) -> int:
    if n % 2:
        raise DomainError(f"the lower bound on L holds for even n only, got n={n}")
    return 2 ** (3 * n) - 4 * 2 ** (2 * n)


def lambda_min_even(n: int) -> int:
    if n % 2:
        raise DomainError(f"closed-form minimum eigenvalue is for even n only, got n={n}")
    q = 1 << n
    lam, r = divmod((q - 1) * (q - 4), 12)
    if r:
        raise ConsistencyError(f"(2^n-1)(2^n-4) not divisible by 12 at n={n}")
    return -lam


def witness_polynomial(x: int, v: int) -> int:
    return (x * x - v * v) * ((x - 2) ** 2 - v * v)


def character_vector(u: BitVector, vertex_order: Sequence[BitVector]) -> CharacterVector:
    for v in vertex_order:
        if v.length != u.length:
            raise DimensionError(f"u of length {u.length} against vertex of length {v.length}")
    entries = np.array([1 - 2 * u.dot(v) for v in vertex_order], dtype=np.int64)
    return CharacterVector(u, entries)


def character_matrix(us: np.ndarray, vertex_values: np.ndarray) -> np.ndarray:
    """Rows are e_u for each u in ``us`` over the given vertices."""
    bits = popcount(us.astype(np.uint64)[:, None] & vertex_values.astype(np.uint64)[None, :]) & 1
    return 1 - 2 * bits.astype(np.int64)


def truth_tables(us: np.ndarray, n: int) -> np.ndarray:
    """0/1 truth tables (rows) of the f(0)=0 functions with punctured tables ``us``."""
    q = 1 << n
    shifts = np.arange(q - 1, -1, -1, dtype=np.int64)
    return ((us[:, None] >> shifts[None, :]) & 1).astype(np.int64)


def lambdas_walsh(us: np.ndarray, n: int) -> np.ndarray:
    W = fwht(1 - 2 * truth_tables(us, n))
    L = (W**4 - 4 * W**3).sum(axis=1)
    q = 1 << n
    num = L - q * (3 * q * q - 14 * q + 8)
    lam, r = np.divmod(num, 24 * q)
    if r.any():
        raise ConsistencyError("eigenvalue formula left a nonzero remainder")
    return lam


def lambdas_direct(us: np.ndarray, generator_values: np.ndarray) -> np.ndarray:
    if len(generator_values) == 0:
        return np.zeros(len(us), dtype=np.int64)
    return character_matrix(us, generator_values).sum(axis=1)


def _sweep_chunk(lo: int, hi: int, n: int, method: str, gens: np.ndarray) -> np.ndarray:
    us = np.arange(lo, hi, dtype=np.int64)
    if method == "direct":
        return lambdas_direct(us, gens)
    lam = lambdas_walsh(us, n)
    if method == "both":
        direct = lambdas_direct(us, gens)
        bad = np.flatnonzero(lam != direct)
        if len(bad):
            u = int(us[bad[0]])
            raise ConsistencyError(
                f"walsh/direct disagree at u={u}: {int(lam[bad[0]])} vs {int(direct[bad[0]])}"
            )
    return lam


def dual_values(n: int) -> np.ndarray:
    """The dual of the even-weight subcode, as a sorted int array."""
    code = build_hamming(n)
    return span_values([b.value for b in dual_code(even_weight_basis(code), code.length)])


def coset_representatives(us: np.ndarray, n: int) -> np.ndarray:
    """Smallest element of each u's coset modulo the dual of the even-weight subcode.

    Two u in the same coset give the same character on the even-weight codewords.
    """
    d = dual_values(n)
    return (us[:, None] ^ d[None, :]).min(axis=1)


def full_spectrum(n: int, method: str = "both", dedupe: bool = False, workers: int = 1) -> SpectrumReport:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    if n > MAX_SWEEP_N:
        raise CapacityError(f"full spectrum sweep limited to n <= {MAX_SWEEP_N}, got n={n}")
    code = build_hamming(n)
    gens = np.array([g.value for g in weight4_generators(code)], dtype=np.int64)
    total = 1 << code.length
    jobs = [(lo, hi, n, method, gens) for lo, hi in chunk_ranges(total, max(1, workers) * 4)]
    lambdas = np.concatenate(run_ordered(_sweep_chunk, jobs, workers))
    lambdas.setflags(write=False)
    lam_min = int(lambdas.min())
    argmin = np.flatnonzero(lambdas == lam_min)
    distinct = None
    if dedupe:
        distinct = [BitVector(code.length, int(u)) for u in np.unique(coset_representatives(argmin, n))]
    return SpectrumReport(
        n=n,
        lambdas=lambdas,
        lambda_min=lam_min,
        argmin_us=[BitVector(code.length, int(u)) for u in argmin],
        method=method,
        distinct_argmin=distinct,
    )
