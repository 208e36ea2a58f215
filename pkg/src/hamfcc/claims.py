"""Pairs each oracle with the fast-path value it is meant to reproduce."""
from __future__ import annotations

from typing import Callable

import numpy as np

from . import oracle
from .boolfn import BooleanFunction, mm_bent
from .errors import CapacityError
from .hamming import build_hamming, enumerate_codewords, rm_star_dual_check, weight4_generators, weight_partition
from .sefcc import construct, count_pairs, min_distance
from .spectral import full_spectrum, lambda_min_even, lambdas_direct, lambdas_walsh, lower_bound_L, objective_L

SAMPLE_SIZE = 100


def _codeword_count(n: int):
    return len(oracle.brute_codewords(n)), 1 << ((1 << n) - 1 - n)


def _min_quadratic(n: int):
    cw = oracle.brute_codewords(n)
    even = [c for c in cw if c.bit_count() % 2 == 0]
    best, _ = oracle.brute_force_min_quadratic(oracle.brute_adjacency(even, 4))
    c_e, _ = weight_partition(enumerate_codewords(build_hamming(n)))
    return best, full_spectrum(n).lambda_min * len(c_e)


def _L_min(n: int):
    best, _ = oracle.brute_force_L_min(n)
    report = full_spectrum(n, method="walsh")
    return best, objective_L(BooleanFunction.from_punctured(report.argmin_us[0]))


def _L_bound(n: int):
    best, _ = oracle.brute_force_L_min(n)
    return best, lower_bound_L(n)


def _lambda_min_even(n: int):
    return full_spectrum(n).lambda_min, lambda_min_even(n)


def _bent_attains(n: int):
    return objective_L(mm_bent(n)), lower_bound_L(n)


def _pair_count(n: int):
    table = construct(n)
    return oracle.brute_force_pair_count(table), count_pairs(table).total_d2


def _assignment_search(n: int):
    return oracle.exhaustive_assignment_search(n).min_total_d2, count_pairs(construct(n)).total_d2


def _d_min(n: int):
    table = construct(n)
    return oracle.brute_force_min_distance(table), min_distance(table)


def _eigen_sample(n: int, seed: int):
    """Seeded random u: Walsh-formula eigenvalue against the generator sum."""
    length = (1 << n) - 1
    rng = np.random.default_rng(seed)
    us = rng.integers(0, 1 << length, size=SAMPLE_SIZE, dtype=np.uint64).astype(np.int64)
    gens = np.array([g.value for g in weight4_generators(build_hamming(n))], dtype=np.int64)
    agree = int((lambdas_walsh(us, n) == lambdas_direct(us, gens)).sum())
    return agree, SAMPLE_SIZE


def _dual_rm(n: int):
    return rm_star_dual_check(n), True


# claim id -> (applicable n values, evaluator returning (computed, expected))
CLAIMS: dict[str, tuple[Callable[[int], bool], Callable[[int], tuple]]] = {
    "codeword_count": (lambda n: n <= 4, _codeword_count),
    "dual_rm": (lambda n: n <= 4, _dual_rm),
    "min_quadratic": (lambda n: n <= 3, _min_quadratic),
    "L_min": (lambda n: n <= 4, _L_min),
    "L_bound": (lambda n: n <= 4 and n % 2 == 0, _L_bound),
    "bent_attains_bound": (lambda n: n <= 8 and n % 2 == 0, _bent_attains),
    "lambda_min_even": (lambda n: n <= 4 and n % 2 == 0, _lambda_min_even),
    "pair_count": (lambda n: n <= 3, _pair_count),
    "assignment_search": (lambda n: n <= 3, _assignment_search),
    "d_min": (lambda n: n <= 3, _d_min),
    "eigen_sample": (lambda n: n <= 6, _eigen_sample),
}

SEEDED = {"eigen_sample"}


def run_claims(n: int, claim_ids: list[str] | None = None, seed: int = 0) -> list[oracle.OracleReport]:
    """Evaluate the named claims (all applicable ones when ``claim_ids`` is None)."""
    if n < 2:
        raise CapacityError(f"n must be >= 2, got {n}")
    if claim_ids is None:
        claim_ids = [c for c, (ok, _) in CLAIMS.items() if ok(n)]
        if not claim_ids:
            raise CapacityError(f"no oracle claim runs at n={n}")
    reports = []
    for cid in claim_ids:
        if cid not in CLAIMS:
            raise KeyError(cid)
        applicable, fn = CLAIMS[cid]
        if not applicable(n):
            raise CapacityError(f"claim {cid!r} does not run at n={n}")
        computed, expected = fn(n, seed) if cid in SEEDED else fn(n)
        reports.append(oracle.OracleReport(cid, computed, expected))
    return reports
