import numpy as np
import pytest

from hamfcc import claims
from hamfcc.boolfn import is_bent, walsh_transform
from hamfcc.errors import CapacityError
from hamfcc.graphs import build_distance_graph
from hamfcc.hamming import build_hamming, enumerate_codewords, weight_partition
from hamfcc.oracle import (
    OracleReport,
    brute_adjacency,
    brute_codewords,
    brute_force_L_min,
    brute_force_min_distance,
    brute_force_min_quadratic,
    brute_force_pair_count,
    exhaustive_assignment_search,
)
from hamfcc.sefcc import construct, count_pairs
from hamfcc.spectral import full_spectrum


def test_report_match():
    assert OracleReport("x", 3, 3).match
    assert not OracleReport("x", 3, 4).to_dict()["match"]


def test_min_quadratic_edgeless():
    best, argmin = brute_force_min_quadratic(np.zeros((3, 3), dtype=int))
    assert best == 0 and len(argmin) == 8


def test_min_quadratic_k8():
    ce, _ = weight_partition(enumerate_codewords(build_hamming(3)))
    G = build_distance_graph(ce, 4)
    best, argmin = brute_force_min_quadratic(G)
    assert best == -8 == full_spectrum(3).lambda_min * len(ce)
    assert len(argmin) == 70
    assert all(sum(z) == 0 for z in argmin)


def test_min_quadratic_matches_formula_on_complete_graphs():
    # on K_m, z^T A z = (sum z)^2 - m
    for m in range(1, 9):
        A = np.ones((m, m), dtype=int) - np.eye(m, dtype=int)
        best, _ = brute_force_min_quadratic(A)
        assert best == (m % 2) - m


def test_min_quadratic_cap():
    with pytest.raises(CapacityError):
        brute_force_min_quadratic(np.zeros((21, 21), dtype=int))


def test_L_min_n2():
    best, argmin = brute_force_L_min(2)
    assert best == 0
    assert len(argmin) == 8
    assert sum(is_bent(f) for f in argmin) == 4


def test_L_min_n3_golden():
    best, argmin = brute_force_L_min(3)
    assert best == 512
    assert len(argmin) == 112


def test_L_min_n4():
    best, argmin = brute_force_L_min(4)
    assert best == 3072
    assert len(argmin) == 896
    assert sum(is_bent(f) for f in argmin) == 448
    for f in argmin:
        assert set(walsh_transform(f)) <= {-4, -2, 4, 6}


def test_L_min_cap():
    with pytest.raises(CapacityError):
        brute_force_L_min(5)


def test_brute_codewords_and_adjacency():
    assert brute_codewords(2) == [0, 7]
    A = brute_adjacency([0, 7], 3)
    assert A.tolist() == [[0, 1], [1, 0]]


def test_pair_count_oracle():
    assert brute_force_pair_count(construct(2)) == 12
    t = construct(3)
    assert brute_force_pair_count(t) == 960 == count_pairs(t).total_d2
    assert brute_force_min_distance(t) == 2
    with pytest.raises(CapacityError):
        brute_force_pair_count(construct(4))


def test_assignment_search_n2():
    r = exhaustive_assignment_search(2)
    assert r.min_total_d2 == 12
    assert r.optimal_count == 4


def test_assignment_search_n3():
    r = exhaustive_assignment_search(3)
    assert r.min_total_d2 == 960
    assert r.optimal_count == 4900
    assert len(r.optimal_even_cuts) == 70
    assert all(sum(z) == 0 for z in r.optimal_even_cuts)


def test_assignment_search_cap():
    with pytest.raises(CapacityError):
        exhaustive_assignment_search(4)


@pytest.mark.parametrize("n", [2, 3])
def test_all_claims_match(n):
    reports = claims.run_claims(n, seed=7)
    assert reports and all(r.match for r in reports)


def test_claims_errors():
    with pytest.raises(KeyError):
        claims.run_claims(3, ["nope"])
    with pytest.raises(CapacityError):
        claims.run_claims(4, ["pair_count"])
    with pytest.raises(CapacityError):
        claims.run_claims(1)


def test_oracle_imports_no_fast_path_logic():
    import ast
    import inspect

    from hamfcc import oracle

    tree = ast.parse(inspect.getsource(oracle))
    mods = {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)}
    assert not mods & {"graphs", "spectral", "sefcc", "hamming"}
