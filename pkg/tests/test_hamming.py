import json
from collections import Counter
from math import comb

import numpy as np
import pytest

from hamfcc.errors import CapacityError
from hamfcc.gf2 import BitVector, hamming_distance, popcount
from hamfcc.hamming import (
    build_hamming,
    codeword_values,
    enumerate_codewords,
    export_json,
    hcmf,
    rm_star_dual_check,
    sphere_partition,
    syndrome,
    syndrome_decode,
    weight4_generators,
    weight_partition,
)
from hamfcc.oracle import brute_codewords

bv = BitVector.from_str


def test_parity_check_columns_are_binary_indices():
    code = build_hamming(3)
    assert [str(r) for r in code.parity_check.row_data] == ["0001111", "0110011", "1010101"]
    for j in range(1, 8):
        col = code.parity_check.column(j - 1)
        assert col.value == j


@pytest.mark.parametrize("n,length,k", [(2, 3, 1), (3, 7, 4), (4, 15, 11), (6, 63, 57)])
def test_parameters(n, length, k):
    code = build_hamming(n)
    assert (code.length, code.dimension) == (length, k)


@pytest.mark.parametrize("n", [1, 7])
def test_build_out_of_range(n):
    with pytest.raises(CapacityError):
        build_hamming(n)


def test_enumeration_too_large():
    with pytest.raises(CapacityError):
        enumerate_codewords(build_hamming(5))


def test_n2_codewords():
    assert [str(c) for c in enumerate_codewords(build_hamming(2))] == ["000", "111"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_codewords_match_definitional_scan(n):
    assert codeword_values(build_hamming(n)).tolist() == brute_codewords(n)


def test_n3_weight_histogram():
    words = enumerate_codewords(build_hamming(3))
    assert Counter(c.weight() for c in words) == {0: 1, 3: 7, 4: 7, 7: 1}


def test_n4_count_weight3_and_min_distance():
    cw = codeword_values(build_hamming(4))
    assert len(cw) == 2048
    w = popcount(cw)
    assert int((w == 3).sum()) == 35 == (15 * 14) // 6
    d = popcount(cw[:, None] ^ cw[None, :])
    np.fill_diagonal(d, 99)
    assert int(d.min()) == 3


def test_decode_examples():
    code = build_hamming(3)
    c = bv("1110000")
    assert syndrome_decode(code, c) == (c, None)
    assert syndrome_decode(code, bv("1000000")) == (bv("0000000"), 1)
    v = bv("1110001")
    decoded, pos = syndrome_decode(code, v)
    nearest = min(enumerate_codewords(code), key=lambda w: hamming_distance(w, v))
    assert decoded == nearest
    assert hamming_distance(decoded, v) == 1
    assert pos == 7


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_word_decodes_to_unique_nearest(n):
    code = build_hamming(n)
    cw = codeword_values(code)
    L = code.length
    for x in range(1 << L):
        d = popcount(cw ^ x)
        c, pos = syndrome_decode(code, BitVector(L, x))
        assert int(d.min()) <= 1 and int((d <= 1).sum()) == 1
        assert c.value == int(cw[d.argmin()])
        assert (pos is None) == (int(d.min()) == 0)


def test_hcmf_examples():
    code = build_hamming(3)
    assert hcmf(code, bv("0000000")) == 1
    assert hcmf(code, bv("1110000")) == 1
    for j in range(7):
        assert hcmf(code, BitVector.from_positions(7, [j])) == 0


@pytest.mark.parametrize("n,ne,no", [(2, 1, 1), (3, 8, 8), (4, 1024, 1024)])
def test_weight_partition_sizes(n, ne, no):
    even, odd = weight_partition(enumerate_codewords(build_hamming(n)))
    assert (len(even), len(odd)) == (ne, no)
    assert len(even) == 2 ** ((1 << n) - 2 - n)


def test_n2_partition():
    even, odd = weight_partition(enumerate_codewords(build_hamming(2)))
    assert [str(c) for c in even] == ["000"] and [str(c) for c in odd] == ["111"]


@pytest.mark.parametrize("n,count", [(2, 0), (3, 7), (4, 105), (6, 9765)])
def test_weight4_generator_counts(n, count):
    gens = weight4_generators(build_hamming(n))
    assert len(gens) == count
    assert len(set(gens)) == count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weight4_generators_match_enumeration(n):
    code = build_hamming(n)
    assert weight4_generators(code) == [c for c in enumerate_codewords(code) if c.weight() == 4]


def test_n3_weight4_are_complements_of_weight3():
    code = build_hamming(3)
    w3 = {c.complement() for c in enumerate_codewords(code) if c.weight() == 3}
    assert set(weight4_generators(code)) == w3


def test_n6_weight4_are_codewords():
    code = build_hamming(6)
    for g in weight4_generators(code)[::97]:
        assert g.weight() == 4 and syndrome(code, g) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sphere_partition_tiles_space(n):
    code = build_hamming(n)
    sp = sphere_partition(code)
    L = code.length
    seen = set()
    for i in range(len(sp.centers)):
        m = sp.members(i)
        assert len(m) == L + 1
        seen.update(m)
    assert len(seen) == 1 << L
    v = BitVector(L, 1)
    i, j = sp.sphere_of(v)
    assert hamming_distance(sp.centers[i], v) == (0 if j is None else 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rm_star_dual(n):
    assert rm_star_dual_check(n)


@pytest.mark.parametrize("n,size", [(2, 8), (3, 16), (4, 32)])
def test_rm_star_size(n, size):
    from hamfcc.hamming import affine_punctured_tables

    assert len(affine_punctured_tables(n)) == size == 2 ** (n + 1)


def test_export_json():
    doc = json.loads(export_json(build_hamming(3)))
    assert doc["n"] == 3 and doc["length"] == 7 and doc["dimension"] == 4
    assert len(doc["parity_check_rows"]) == 3
    assert len(doc["codewords"]) == 16
    assert "codewords" not in json.loads(export_json(build_hamming(5)))
