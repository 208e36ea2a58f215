import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamfcc.boolfn import BooleanFunction, is_bent, mm_bent, punctured_truth_table, walsh_transform
from hamfcc.errors import CapacityError, DomainError
from hamfcc.gf2 import BitVector
from hamfcc.graphs import build_distance_graph
from hamfcc.hamming import build_hamming, enumerate_codewords, weight4_generators, weight_partition
from hamfcc.spectral import (
    character_vector,
    coset_representatives,
    eigenvalue_direct,
    eigenvalue_walsh,
    full_spectrum,
    lambda_min_even,
    lower_bound_L,
    objective_L,
    witness_polynomial,
)


def setup(n):
    code = build_hamming(n)
    ce, _ = weight_partition(enumerate_codewords(code))
    return code, ce, weight4_generators(code)


def test_n3_min_eigenvalue_direct():
    code, _, gens = setup(3)
    lams = {eigenvalue_direct(BitVector(7, u), gens) for u in range(128)}
    assert lams == {7, -1}


def test_n4_bent_eigenvalue_direct():
    _, _, gens = setup(4)
    u = punctured_truth_table(mm_bent(4))
    assert eigenvalue_direct(u, gens) == -15
    assert eigenvalue_walsh(mm_bent(4)) == -15


def test_walsh_formula_examples():
    zero = BooleanFunction.from_callable(3, lambda x: 0)
    assert objective_L(zero) == 2048
    assert eigenvalue_walsh(zero) == 7
    assert objective_L(mm_bent(4)) == 3072
    assert objective_L(mm_bent(2)) == 0
    assert eigenvalue_walsh(mm_bent(6)) == -315


def test_objective_requires_f0_zero():
    with pytest.raises(DomainError):
        objective_L(BooleanFunction.from_callable(2, lambda x: 1))


@pytest.mark.parametrize("n,L,lam", [(2, 0, 0), (4, 3072, -15), (6, 245760, -315)])
def test_closed_forms(n, L, lam):
    assert lower_bound_L(n) == L
    assert lambda_min_even(n) == lam


def test_closed_forms_reject_odd():
    with pytest.raises(DomainError):
        lower_bound_L(3)
    with pytest.raises(DomainError):
        lambda_min_even(5)


def test_character_vector_examples():
    _, ce, _ = setup(3)
    assert (character_vector(BitVector.zeros(7), ce).entries == 1).all()
    A = build_distance_graph(ce, 4).matrix()
    report = full_spectrum(3)
    for u in report.argmin_us[:10]:
        e = character_vector(u, ce).entries
        assert (A @ e == -e).all()


def test_eigenpairs_all_u_n3():
    _, ce, gens = setup(3)
    A = build_distance_graph(ce, 4).matrix()
    for u in range(128):
        uv = BitVector(7, u)
        e = character_vector(uv, ce).entries
        assert set(e.tolist()) <= {1, -1}
        assert (A @ e == eigenvalue_direct(uv, gens) * e).all()


def test_eigenpairs_sampled_n4():
    _, ce, gens = setup(4)
    A = build_distance_graph(ce, 4).matrix()
    rng = np.random.default_rng(11)
    for u in rng.integers(0, 1 << 15, size=20):
        uv = BitVector(15, int(u))
        e = character_vector(uv, ce).entries
        assert (A @ e == eigenvalue_direct(uv, gens) * e).all()


def test_orthogonality_across_cosets_n3():
    _, ce, _ = setup(3)
    us = np.arange(128)
    reps = coset_representatives(us, 3)
    assert len(np.unique(reps)) == 2 ** (2**3 - 3 - 2) == 8
    E = np.array([character_vector(BitVector(7, int(u)), ce).entries for u in us])
    G = E @ E.T
    same = reps[:, None] == reps[None, :]
    assert (G[~same] == 0).all()
    assert (np.abs(G[same]) == 8).all()


def test_full_spectrum_n2():
    r = full_spectrum(2)
    assert set(r.lambdas.tolist()) == {0}
    assert r.lambda_min == 0 and len(r.argmin_us) == 8


def test_full_spectrum_n3():
    r = full_spectrum(3, dedupe=True)
    assert set(r.lambdas.tolist()) == {7, -1}
    assert r.lambda_min == -1
    assert len(r.argmin_us) == 112
    assert len(r.distinct_argmin) == 7


def test_full_spectrum_n4():
    r = full_spectrum(4, method="both", dedupe=True)
    assert r.lambda_min == -15
    assert len(r.argmin_us) == 896
    assert len(r.distinct_argmin) == 28
    assert set(np.unique(r.lambdas).tolist()) == {-15, -7, 1, 9, 17, 49, 105}
    argmin = {u.value for u in r.argmin_us}
    bent = 0
    for t in range(1 << 15):
        f = BooleanFunction.from_punctured(BitVector(15, t))
        if is_bent(f):
            bent += 1
            assert t in argmin
    assert bent == 448


def test_non_bent_minimizers_exist_n4():
    r = full_spectrum(4, method="walsh")
    spectra = set()
    for u in r.argmin_us:
        f = BooleanFunction.from_punctured(u)
        spectra.add(tuple(sorted(walsh_transform(f))))
    assert spectra == {tuple([-4] * 6 + [4] * 10), tuple([-2] * 10 + [6] * 6)}


def test_methods_agree_n3():
    a = full_spectrum(3, method="walsh").lambdas
    b = full_spectrum(3, method="direct").lambdas
    assert (a == b).all()


def test_full_spectrum_errors():
    with pytest.raises(CapacityError):
        full_spectrum(5)
    with pytest.raises(ValueError):
        full_spectrum(3, method="fast")


def test_csv():
    text = full_spectrum(2).to_csv().splitlines()
    assert text[0] == "u_hex,lambda"
    assert text[1] == "0,0"
    assert text[-2:] == ["lambda_min,0", "argmin_count,8"]


def test_lambda_by_u():
    r = full_spectrum(3)
    m = r.lambda_by_u
    assert len(m) == 128 and m[BitVector.zeros(7)] == 7


def test_L_bound_exhaustive_n2_n4():
    for n in (2, 4):
        r = full_spectrum(n, method="walsh")
        # L is affine in lambda with positive slope, so min L sits at lambda_min
        q = 1 << n
        assert 24 * r.lambda_min * q + q * (3 * q * q - 14 * q + 8) == lower_bound_L(n)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_witness_polynomial_nonnegative_bent(n):
    v = 1 << (n // 2)
    for w in walsh_transform(mm_bent(n)):
        assert witness_polynomial(w, v) >= 0


@given(st.integers(0, (1 << 15) - 1))
def test_witness_polynomial_nonnegative_n4(t):
    f = BooleanFunction.from_punctured(BitVector(15, t))
    assert all(witness_polynomial(w, 4) >= 0 for w in walsh_transform(f))


_CE3 = setup(3)[1]
_A3 = build_distance_graph(_CE3, 4).matrix()


@given(st.lists(st.sampled_from([1, -1]), min_size=8, max_size=8))
def test_rayleigh_bound_n3(z):
    z = np.array(z)
    assert z @ _A3 @ z >= -1 * 8


@given(st.integers(0, (1 << 63) - 1))
@settings(max_examples=20, deadline=None)
def test_walsh_matches_direct_n6(u):
    gens = weight4_generators(build_hamming(6))
    f = BooleanFunction.from_punctured(BitVector(63, u))
    assert eigenvalue_walsh(f) == eigenvalue_direct(BitVector(63, u), gens)
