"""Fixed-distance graphs over codeword sets.

Adjacency is stored dense (a boolean numpy matrix); vertex sets here never
exceed 2^11 elements.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapacityError, DimensionError, DomainError
from .gf2 import BitVector, express, popcount
from .hamming import HammingCode, enumerate_codewords, syndrome

MAX_DENSE_VERTICES = 1 << 11


@dataclass(frozen=True)
class DistanceGraph:
    vertices: tuple[BitVector, ...]
    distance: int
    adjacency: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @property
    def values(self) -> np.ndarray:
        return np.array([v.value for v in self.vertices], dtype=np.int64)

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def matrix(self) -> np.ndarray:
        return self.adjacency.astype(np.int64)

    def to_edge_list(self) -> str:
        lines = [f"# vertices={self.size} distance={self.distance}"]
        lines += [f"{i} {j}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"


def build_distance_graph(vertices: Sequence[BitVector], d: int) -> DistanceGraph:
    vertices = tuple(vertices)
    if len(vertices) > MAX_DENSE_VERTICES:
        raise CapacityError(f"{len(vertices)} vertices exceed dense cap {MAX_DENSE_VERTICES}")
    lengths = {v.length for v in vertices}
    if len(lengths) > 1:
        raise DimensionError("vertices of differing lengths")
    vals = np.array([v.value for v in vertices], dtype=np.int64)
    if len(np.unique(vals)) != len(vals):
        raise DomainError("vertices must be distinct")
    dist = popcount(vals[:, None] ^ vals[None, :])
    adj = dist == d
    np.fill_diagonal(adj, False)
    adj.setflags(write=False)
    return DistanceGraph(vertices, d, adj)


def check_bipartite(G: DistanceGraph) -> tuple[bool, tuple[list[BitVector], list[BitVector]] | None]:
    """BFS 2-coloring.  Parts are returned with vertex 0's class first."""
    color = np.full(G.size, -1, dtype=np.int8)
    for start in range(G.size):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in G.neighbors(i):
                if color[j] < 0:
                    color[j] = 1 - color[i]
                    queue.append(j)
                elif color[j] == color[i]:
                    return False, None
    parts = (
        [v for v, c in zip(G.vertices, color) if c == 0],
        [v for v, c in zip(G.vertices, color) if c == 1],
    )
    return True, parts


def check_connected(G: DistanceGraph) -> bool:
    if G.size == 0:
        return True
    seen = np.zeros(G.size, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in G.neighbors(i):
            if not seen[j]:
                seen[j] = True
                queue.append(j)
    return bool(seen.all())


def weight3_path_witness(code: HammingCode, v: BitVector) -> list[BitVector]:
    """Weight-3 codewords whose XOR is ``v``.

    The running XORs 0, a1, a1+a2, ... form a walk in the distance-3 graph
    ending at ``v``; see :func:`path_from_witness`.
    """
    if v.length != code.length:
        raise DimensionError(f"word of length {v.length} for a length-{code.length} code")
    if syndrome(code, v) != 0:
        raise DomainError(f"{v} is not a codeword")
    if v.value == 0:
        return []
    weight3 = [c for c in enumerate_codewords(code) if c.weight() == 3]
    if v in weight3:
        return [v]
    idx = express(weight3, v)
    if idx is None:
        raise AssertionError("weight-3 codewords do not span the code")
    return [weight3[i] for i in idx]


def path_from_witness(alphas: Sequence[BitVector], length: int) -> list[BitVector]:
    path = [BitVector.zeros(length)]
    for a in alphas:
        path.append(path[-1] ^ a)
    return path


def verify_cayley(G: DistanceGraph, generators: Sequence[BitVector]) -> bool:
    """True iff i ~ j exactly when v_i XOR v_j lies in ``generators``."""
    vals = G.values
    xor = vals[:, None] ^ vals[None, :]
    if not np.isin(xor, vals).all():
        raise DomainError("vertex set is not closed under XOR")
    gens = np.array([g.value for g in generators], dtype=np.int64)
    expected = np.isin(xor, gens)
    np.fill_diagonal(expected, False)
    return bool((expected == G.adjacency).all())


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection from C_e indices to C_o indices.

    ``forward[k] = i`` means w_i = phi(v_k).  The permutation matrix has
    P[forward[k], k] = 1.
    """

    size: int
    forward: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.forward) != list(range(self.size)):
            raise DomainError("forward map is not a bijection")

    def matrix(self) -> np.ndarray:
        P = np.zeros((self.size, self.size), dtype=np.int64)
        P[list(self.forward), np.arange(self.size)] = 1
        return P

    def apply(self, vec: np.ndarray) -> np.ndarray:
        """P @ vec without forming P."""
        out = np.empty_like(vec)
        out[list(self.forward)] = vec
        return out


def canonical_w_prime(co_order: Sequence[BitVector]) -> BitVector:
    return min(co_order, key=lambda c: c.value)


def build_isomorphism(
    ce_order: Sequence[BitVector], co_order: Sequence[BitVector], w_prime: BitVector
) -> VertexPermutation:
    if w_prime.weight() % 2 == 0:
        raise DomainError(f"w' = {w_prime} has even weight")
    co_index = {c.value: i for i, c in enumerate(co_order)}
    if len(co_index) != len(co_order) or len({v.value for v in ce_order}) != len(ce_order):
        raise DomainError("orderings must list each element once")
    if len(ce_order) != len(co_order):
        raise DomainError("partite sets differ in size")
    if w_prime.value not in co_index:
        raise DomainError(f"w' = {w_prime} is not in the odd-weight ordering")
    try:
        forward = tuple(co_index[(v ^ w_prime).value] for v in ce_order)
    except KeyError as exc:
        raise DomainError("v XOR w' left the odd-weight set") from exc
    return VertexPermutation(len(ce_order), forward)
