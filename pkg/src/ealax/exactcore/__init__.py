from .cyclotomic import (Cyclotomic, cyclotomic_arith, cyclotomic_polynomial, euler_phi,
                         normalize_coeff, omega_power, root_of_unity_sum)
from .scalar import Scalar, mono, mono_split, parse_scalar
from .sparse import LieElement, SparseVec, accumulate, finalize, format_element, key_sort, scale, vec_combine
from .linalg import bareiss_rank, exact_rank, field_rank, nullspace, rref, solve
from .text import parse_bracket_pair, parse_element, split_top

__all__ = [
    "Cyclotomic", "cyclotomic_arith", "cyclotomic_polynomial", "euler_phi", "normalize_coeff",
    "omega_power", "root_of_unity_sum", "Scalar", "mono", "mono_split", "parse_scalar",
    "LieElement", "SparseVec", "accumulate", "finalize", "format_element", "key_sort", "scale",
    "vec_combine", "bareiss_rank", "exact_rank", "field_rank", "nullspace", "rref", "solve",
    "parse_bracket_pair", "parse_element", "split_top",
]
