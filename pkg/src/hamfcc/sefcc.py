"""Single-error-correcting function-correcting codes for Hamming-code membership.

The encoder is systematic, ``Enc(x) = (x, p(x))`` with a 2-bit parity p.  An
encoded word is packed into an int as ``(x << 2) | p``.  Parities are ints
0..3 written as two-character strings ``"00" .. "11"``.

Construction:

1. even-weight codewords draw parities from {00, 11}, odd-weight from {01, 10}
   (roles swapped with ``swap_pairs``);
2. the character vector of a minimizing punctured table u is the cut vector on
   the even-weight codewords, +1 taking the first parity of the pair;
3. the odd-weight codewords take the same cut vector carried over by
   v -> v XOR w', w' the smallest odd-weight codeword;
4. every non-codeword takes the complement of its sphere center's parity.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from ._parallel import chunk_ranges, run_ordered
from .boolfn import BooleanFunction, is_bent, mm_bent, punctured_truth_table
from .errors import CapacityError, ConsistencyError, DimensionError, DomainError
from .gf2 import BitVector, popcount
from .graphs import DistanceGraph, build_distance_graph, build_isomorphism, canonical_w_prime
from .hamming import (
    MAX_ENUM_N,
    build_hamming,
    codeword_values,
    enumerate_codewords,
    flip_mask,
    sphere_partition,
    weight_partition,
)
from .spectral import character_vector, full_spectrum

P_E = (0b00, 0b11)
P_O = (0b01, 0b10)
PAIR_SET_NAMES = {P_E: "P_e", P_O: "P_o"}


def parity_str(p: int) -> str:
    return format(p, "02b")


def parse_parity(s: str) -> int:
    if s not in ("00", "01", "10", "11"):
        raise ValueError(f"bad parity {s!r}")
    return int(s, 2)


@dataclass(frozen=True)
class ParityAssignment:
    """Parities of the codewords only; keys are codeword int values."""

    n: int
    parity_of_codeword: dict[int, int]
    conventions: dict = field(default_factory=dict)

    def parity(self, c: BitVector) -> int:
        return self.parity_of_codeword[c.value]


@dataclass(frozen=True)
class SefccTable:
    """Parity of every data word, ``parity[x]`` for the word with int value x."""

    n: int
    parity: np.ndarray = field(repr=False)
    conventions: dict = field(default_factory=dict, repr=False)

    @property
    def length(self) -> int:
        return (1 << self.n) - 1

    def parity_of(self, x: BitVector) -> str:
        return parity_str(int(self.parity[x.value]))

    def encoded(self) -> np.ndarray:
        return (np.arange(len(self.parity), dtype=np.int64) << 2) | self.parity.astype(np.int64)

    def with_parity(self, x: int, p: int) -> SefccTable:
        """Copy with one entry replaced; used to plant violations."""
        arr = self.parity.copy()
        arr[x] = p
        return SefccTable(self.n, arr, dict(self.conventions))

    def to_json(self) -> str:
        L = self.length
        doc = {
            "n": self.n,
            "conventions": self.conventions,
            "parity": {format(x, f"0{L}b"): parity_str(int(p)) for x, p in enumerate(self.parity)},
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> SefccTable:
        doc = json.loads(text)
        n = int(doc["n"])
        L = (1 << n) - 1
        entries = doc["parity"]
        if len(entries) != 1 << L:
            raise DimensionError(f"table has {len(entries)} entries, expected {1 << L}")
        arr = np.zeros(1 << L, dtype=np.uint8)
        for word, p in entries.items():
            if len(word) != L:
                raise DimensionError(f"data word {word!r} is not of length {L}")
            arr[int(word, 2)] = parse_parity(p)
        return cls(n, arr, doc.get("conventions", {}))


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failed: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class PairCountReport:
    intra_sphere: int
    inter_sphere_boundary: int
    identical_parity: int
    total_d2: int
    d_min: int
    same_parity_d4_edges_Ce: int
    same_parity_d4_edges_Co: int

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CutValue:
    quadratic: int
    same_parity_edges: int
    cut_edges: int


def _require_table_n(n: int) -> None:
    if not 2 <= n <= MAX_ENUM_N:
        raise CapacityError(f"full tables are limited to 2 <= n <= {MAX_ENUM_N}, got n={n}")


def default_fu(n: int) -> BooleanFunction:
    """Inner-product bent function for even n; smallest minimizing table for odd n."""
    if n % 2 == 0:
        return mm_bent(n)
    report = full_spectrum(n, method="walsh")
    return BooleanFunction.from_punctured(report.argmin_us[0])


def _check_fu(n: int, f_u: BooleanFunction, force: bool) -> None:
    if f_u.n != n:
        raise DimensionError(f"f_u is defined on n={f_u.n}, table needs n={n}")
    if f_u(0) != 0:
        raise DomainError("f_u(0) must be 0")
    if force:
        return
    if n % 2 == 0:
        if not is_bent(f_u):
            raise DomainError(f"f_u = {f_u.table} is not bent; pass force=True to use it anyway")
    else:
        report = full_spectrum(n, method="walsh")
        u = punctured_truth_table(f_u)
        if int(report.lambdas[u.value]) != report.lambda_min:
            raise DomainError(f"f_u = {f_u.table} does not attain the minimum eigenvalue {report.lambda_min}")


def assignment_from_cuts(
    n: int,
    z_even: Sequence[int],
    z_odd: Sequence[int],
    swap_pairs: bool = False,
    conventions: dict | None = None,
) -> ParityAssignment:
    """Codeword parities from +-1 cut vectors over C_e and C_o in ascending order."""
    c_e, c_o = weight_partition(enumerate_codewords(build_hamming(n)))
    if len(z_even) != len(c_e) or len(z_odd) != len(c_o):
        raise DimensionError("cut vector length does not match partite set size")
    ce_pairs, co_pairs = (P_O, P_E) if swap_pairs else (P_E, P_O)
    parity = {}
    for c, z in zip(c_e, z_even):
        parity[c.value] = ce_pairs[0] if z == 1 else ce_pairs[1]
    for c, z in zip(c_o, z_odd):
        parity[c.value] = co_pairs[0] if z == 1 else co_pairs[1]
    return ParityAssignment(n, parity, dict(conventions or {}))


def table_from_assignment(assignment: ParityAssignment) -> SefccTable:
    n = assignment.n
    _require_table_n(n)
    sp = sphere_partition(build_hamming(n))
    centers = np.array([assignment.parity_of_codeword[c.value] for c in sp.centers], dtype=np.uint8)
    parity = centers[sp.center_index]
    parity = np.where(sp.flipped == 0, parity, parity ^ 0b11).astype(np.uint8)
    return SefccTable(n, parity, dict(assignment.conventions))


def construct_assignment(
    n: int,
    f_u: BooleanFunction | None = None,
    swap_pairs: bool = False,
    force: bool = False,
) -> ParityAssignment:
    _require_table_n(n)
    if f_u is None:
        f_u = default_fu(n)
    _check_fu(n, f_u, force)
    u = punctured_truth_table(f_u)
    c_e, c_o = weight_partition(enumerate_codewords(build_hamming(n)))
    w_prime = canonical_w_prime(c_o)
    z_even = character_vector(u, c_e).entries
    z_odd = build_isomorphism(c_e, c_o, w_prime).apply(z_even)
    ce_pairs, co_pairs = (P_O, P_E) if swap_pairs else (P_E, P_O)
    conventions = {
        "f_u": str(f_u.table),
        "u": str(u),
        "w_prime": str(w_prime),
        "C_e_pair_set": PAIR_SET_NAMES[ce_pairs],
        "C_o_pair_set": PAIR_SET_NAMES[co_pairs],
        "C_e_signs": {"+1": parity_str(ce_pairs[0]), "-1": parity_str(ce_pairs[1])},
        "C_o_signs": {"+1": parity_str(co_pairs[0]), "-1": parity_str(co_pairs[1])},
        "forced": bool(force),
    }
    return assignment_from_cuts(n, z_even.tolist(), z_odd.tolist(), swap_pairs, conventions)


def construct(
    n: int,
    f_u: BooleanFunction | None = None,
    swap_pairs: bool = False,
    force: bool = False,
) -> SefccTable:
    """Full encoder table for the given (or default) minimizing function f_u."""
    return table_from_assignment(construct_assignment(n, f_u, swap_pairs, force))


# -- verification -------------------------------------------------------------


def _codeword_graph(n: int, d: int) -> DistanceGraph:
    return build_distance_graph(enumerate_codewords(build_hamming(n)), d)


def _raw_condition_block(cw_enc: np.ndarray, nh_enc: np.ndarray) -> int:
    # index of the first codeword in the block with some non-codeword closer than 3, or -1
    close = (popcount(cw_enc[:, None] ^ nh_enc[None, :]) < 3).any(axis=1)
    hits = np.flatnonzero(close)
    return int(hits[0]) if len(hits) else -1


def verify_valid(table: SefccTable) -> ValidityReport:
    """Check sphere complements, distance-3 parity distances, then the raw FCC condition."""
    n = table.n
    _require_table_n(n)
    L = table.length
    sp = sphere_partition(build_hamming(n))
    par = table.parity.astype(np.int64)
    cw = codeword_values(build_hamming(n))
    center_par = par[cw[sp.center_index]]
    bad = np.flatnonzero((sp.flipped != 0) & (par != (center_par ^ 0b11)))
    if len(bad):
        x = int(bad[0])
        return ValidityReport(False, "a", f"non-codeword {x:0{L}b} does not carry the complement of its center's parity")

    g3 = _codeword_graph(n, 3)
    vals = g3.values
    for i, k in g3.edges():
        if (int(par[vals[i]]) ^ int(par[vals[k]])).bit_count() != 1:
            return ValidityReport(
                False, "b",
                f"codewords {int(vals[i]):0{L}b} and {int(vals[k]):0{L}b} at distance 3 have parity distance != 1",
            )

    enc = table.encoded()
    is_cw = sp.flipped == 0
    cw_enc = enc[is_cw]
    nh_enc = enc[~is_cw]
    for lo, hi in chunk_ranges(len(cw_enc), max(1, len(cw_enc) // 64)):
        hit = _raw_condition_block(cw_enc[lo:hi], nh_enc)
        if hit >= 0:
            c = int(cw_enc[lo + hit]) >> 2
            return ValidityReport(False, "eq3", f"codeword {c:0{L}b} has an encoded non-codeword within distance 2")
    return ValidityReport(True)


def _histogram_block(lo: int, hi: int, words: np.ndarray, nbins: int) -> np.ndarray:
    block = words[lo:hi]
    rest = words[lo:]
    d = popcount(block[:, None] ^ rest[None, :])
    # keep only j > i
    mask = np.arange(len(rest))[None, :] > np.arange(hi - lo)[:, None]
    return np.bincount(d[mask].astype(np.int64), minlength=nbins)


def distance_histogram(words: np.ndarray, nbins: int, workers: int = 1, block: int = 256) -> np.ndarray:
    """Counts of unordered pairs of ``words`` at each Hamming distance."""
    jobs = [(lo, hi, words, nbins) for lo, hi in chunk_ranges(len(words), -(-len(words) // block))]
    parts = run_ordered(_histogram_block, jobs, workers)
    return np.sum(parts, axis=0)


def min_distance(table: SefccTable, workers: int = 1) -> int:
    """Exact minimum distance over all pairs of distinct encoded words."""
    _require_table_n(table.n)
    hist = distance_histogram(table.encoded(), table.length + 3, workers)
    return int(np.flatnonzero(hist)[0])


def _nhcw_encodings(table: SefccTable) -> np.ndarray:
    # row i: encodings of the non-codewords of sphere i, in flipped-position order
    L = table.length
    cw = codeword_values(build_hamming(table.n))
    masks = np.array([flip_mask(L, j) for j in range(1, L + 1)], dtype=np.int64)
    words = cw[:, None] ^ masks[None, :]
    return (words << 2) | table.parity[words].astype(np.int64)


def _cross_d2_counts(nh: np.ndarray, pairs: np.ndarray, chunk: int = 4096) -> np.ndarray:
    """Per codeword pair (i, k): non-codeword pairs across spheres i and k at encoded distance 2."""
    out = np.zeros(len(pairs), dtype=np.int64)
    for lo in range(0, len(pairs), chunk):
        p = pairs[lo:lo + chunk]
        d = popcount(nh[p[:, 0]][:, :, None] ^ nh[p[:, 1]][:, None, :])
        out[lo:lo + chunk] = (d == 2).sum(axis=(1, 2))
    return out


def identical_parity_pairs(table: SefccTable) -> tuple[np.ndarray, np.ndarray]:
    """Same-parity distance-4 codeword index pairs and their distance-2 non-codeword pair counts."""
    g4 = _codeword_graph(table.n, 4)
    vals = g4.values
    edges = np.array(g4.edges(), dtype=np.int64).reshape(-1, 2)
    par = table.parity
    same = par[vals[edges[:, 0]]] == par[vals[edges[:, 1]]]
    edges = edges[same]
    return edges, _cross_d2_counts(_nhcw_encodings(table), edges)


def count_pairs(table: SefccTable, workers: int = 1) -> PairCountReport:
    """Distance-2 pairs split into intra-sphere, boundary and identical-parity categories.

    Category totals are counted from the sphere structure and checked
    against a direct scan over all encoded pairs.
    """
    n = table.n
    _require_table_n(n)
    nh = _nhcw_encodings(table)
    N = nh.shape[1]

    d = popcount(nh[:, :, None] ^ nh[:, None, :])
    upper = np.triu(np.ones((N, N), dtype=bool), 1)
    intra = int(((d == 2) & upper[None]).sum())

    g3 = _codeword_graph(n, 3)
    e3 = np.array(g3.edges(), dtype=np.int64).reshape(-1, 2)
    boundary = int(_cross_d2_counts(nh, e3).sum())

    edges4, per_pair = identical_parity_pairs(table)
    identical = int(per_pair.sum())

    cw = codeword_values(build_hamming(n))
    even = popcount(cw[edges4[:, 0]]) % 2 == 0
    same_ce = int(even.sum())
    same_co = int(len(edges4) - same_ce)

    hist = distance_histogram(table.encoded(), table.length + 3, workers)
    direct_d2 = int(hist[2])
    d_min = int(np.flatnonzero(hist)[0])

    structural = intra + boundary + identical
    if structural != direct_d2:
        raise ConsistencyError(f"structural distance-2 count {structural} != direct count {direct_d2}")
    if identical != 12 * (same_ce + same_co):
        raise ConsistencyError(
            f"identical-parity pairs {identical} != 12 x same-parity distance-4 edges {same_ce + same_co}"
        )
    return PairCountReport(
        intra_sphere=intra,
        inter_sphere_boundary=boundary,
        identical_parity=identical,
        total_d2=direct_d2,
        d_min=d_min,
        same_parity_d4_edges_Ce=same_ce,
        same_parity_d4_edges_Co=same_co,
    )


def cut_vector(assignment: ParityAssignment, vertices: Sequence[BitVector]) -> np.ndarray:
    """+-1 vector over ``vertices``: +1 for the first parity of their pair set."""
    pars = [assignment.parity(v) for v in vertices]
    for pair in (P_E, P_O):
        if all(p in pair for p in pars):
            return np.array([1 if p == pair[0] else -1 for p in pars], dtype=np.int64)
    raise DomainError("parities mix the two pair sets")


def cut_value(assignment: ParityAssignment, G: DistanceGraph) -> CutValue:
    """z^T A z for the assignment's cut vector on G, with the edge split it encodes."""
    z = cut_vector(assignment, G.vertices)
    q = int(z @ G.matrix() @ z)
    # z^T A z = 2 (same - cut), same + cut = |E|
    same, r = divmod(G.edge_count * 2 + q, 4)
    if r:
        raise ConsistencyError("cut quadratic form has the wrong parity")
    return CutValue(q, same, G.edge_count - same)
