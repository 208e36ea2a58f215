"""Single-error-correcting function-correcting codes for Hamming-code membership."""
from .boolfn import BooleanFunction, is_bent, mm_bent, walsh_transform
from .errors import CapacityError, ConsistencyError, DimensionError, DomainError, FccError
from .gf2 import BitVector, hamming_distance
from .hamming import build_hamming, enumerate_codewords, syndrome_decode
from .sefcc import construct, count_pairs, min_distance, verify_valid
from .spectral import full_spectrum

__all__ = [
    "BitVector",
    "BooleanFunction",
    "CapacityError",
    "ConsistencyError",
    "DimensionError",
    "DomainError",
    "FccError",
    "build_hamming",
    "construct",
    "count_pairs",
    "enumerate_codewords",
    "full_spectrum",
    "hamming_distance",
    "is_bent",
    "min_distance",
    "mm_bent",
    "syndrome_decode",
    "verify_valid",
    "walsh_transform",
]
