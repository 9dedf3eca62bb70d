"""Exact rank/unrank codecs for the k-dimensional subspaces of F_q^n.

Three total orders, each with a bijection between subspaces and the
integers [0, [n choose k]_q): one reading the extended representation
column by column, one sorting by Ferrers diagrams, and a hybrid that
serves the full-box subspaces first. A brute-force oracle validates every
bijection exhaustively at desk scale, and a CLI exposes ranking,
unranking, enumeration, verification, and benchmarking.
"""

from . import errors
from .combined_codec import delta, rank_comb, type_s_split, unrank_comb
from .counting import (
    GaussianTable,
    PartitionTable,
    build_gaussian_table,
    build_partition_table,
    digit_shift_down,
    digit_shift_up,
    digit_split,
    digits_to_int,
    gaussian,
    gaussian_step,
    gaussian_table_for,
    int_to_digits,
    partition_table_for,
    verify_alpha_identity,
)
from .ext_codec import compare_ext, count_extensions, next_ext, rank_ext, unrank_ext
from .ferrers_codec import (
    compare_diagrams,
    compare_ferrers,
    count_diagram_extensions,
    rank_diagram,
    rank_ferrers,
    unrank_diagram,
    unrank_ferrers,
)
from .oracle import brute_rank, enumerate_all, sorted_enumeration
from .subspace import (
    ExtendedRepresentation,
    FerrersDiagram,
    FerrersTableaux,
    Params,
    RrefMatrix,
    assemble,
    column_value,
    diagram_from_vector,
    extend,
    ferrers_of,
    format_digit_string,
    format_matrix,
    identifying_vector,
    parse_matrix,
    reduce_to_rref,
    unextend,
    validate_rref,
    vector_from_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "Params",
    "RrefMatrix",
    "ExtendedRepresentation",
    "FerrersDiagram",
    "FerrersTableaux",
    "GaussianTable",
    "PartitionTable",
    "gaussian",
    "gaussian_step",
    "build_gaussian_table",
    "build_partition_table",
    "gaussian_table_for",
    "partition_table_for",
    "verify_alpha_identity",
    "digit_shift_up",
    "digit_shift_down",
    "digit_split",
    "int_to_digits",
    "digits_to_int",
    "validate_rref",
    "identifying_vector",
    "extend",
    "unextend",
    "ferrers_of",
    "diagram_from_vector",
    "vector_from_diagram",
    "assemble",
    "reduce_to_rref",
    "column_value",
    "format_matrix",
    "parse_matrix",
    "format_digit_string",
    "compare_ext",
    "count_extensions",
    "rank_ext",
    "unrank_ext",
    "next_ext",
    "compare_diagrams",
    "count_diagram_extensions",
    "rank_diagram",
    "unrank_diagram",
    "compare_ferrers",
    "rank_ferrers",
    "unrank_ferrers",
    "type_s_split",
    "delta",
    "rank_comb",
    "unrank_comb",
    "enumerate_all",
    "sorted_enumeration",
    "brute_rank",
]
