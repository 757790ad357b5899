"""Bipartite graphs as polynomials over the nonnegative integers.

A bipartite graph with an injectively labeled part encodes as a polynomial:
each vertex of the other part contributes one term whose exponent packs its
neighborhood as a bit set.  Multiplying and adding polynomials then build
graph products and sums, factoring polynomials splits graphs, and the same
machinery with two variables decomposes Petri nets into parallel components.
"""

from .bigraph import (
    Bigraph,
    DecodedBigraph,
    canonical_poly,
    check_labeling,
    compact_labeling,
    decode,
    encode,
    identity_labeling,
    is_isomorphic,
)
from .bits import BitExp, from_bits, tau, tau_poly
from .digraph import (
    DecodedDiBigraph,
    DiBigraph,
    canonical_poly_directed,
    decode_directed,
    encode_directed,
    is_isomorphic_directed,
)
from .errors import (
    BitWidthError,
    BudgetExceededError,
    FileFormatError,
    LabelingError,
    PolyParseError,
    SizeGuardError,
)
from .graphfactor import IrreducibilityReport, factor_graph, is_irreducible
from .graphops import (
    direct_product,
    direct_product_directed,
    direct_sum,
    direct_sum_directed,
    plain_coproduct,
    plain_coproduct_directed,
    plain_product,
    plain_product_directed,
    poly_product,
    poly_product_directed,
    poly_sum,
    poly_sum_directed,
)
from .petri import (
    LabeledPetriNet,
    PetriNet,
    compact_net_labeling,
    decode_net,
    decompose,
    encode_net,
    find_decomposing_labeling,
    net_isomorphic,
    net_product,
)
from .poly import (
    Poly1,
    Poly2,
    add,
    content,
    divide_exact,
    evaluate,
    evaluate2,
    lift,
    mul,
    parse_poly,
    parse_poly1,
    parse_poly2,
    poly_key,
    render,
)
from .polyfactor import Budget, bit_disjoint_factor, factor_pairs

__version__ = "0.1.0"

__all__ = [
    "Bigraph",
    "BitExp",
    "BitWidthError",
    "Budget",
    "BudgetExceededError",
    "DecodedBigraph",
    "DecodedDiBigraph",
    "DiBigraph",
    "FileFormatError",
    "IrreducibilityReport",
    "LabeledPetriNet",
    "LabelingError",
    "PetriNet",
    "Poly1",
    "Poly2",
    "PolyParseError",
    "SizeGuardError",
    "add",
    "bit_disjoint_factor",
    "canonical_poly",
    "canonical_poly_directed",
    "check_labeling",
    "compact_labeling",
    "compact_net_labeling",
    "content",
    "decode",
    "decode_directed",
    "decode_net",
    "decompose",
    "direct_product",
    "direct_product_directed",
    "direct_sum",
    "direct_sum_directed",
    "divide_exact",
    "encode",
    "encode_directed",
    "encode_net",
    "evaluate",
    "evaluate2",
    "factor_graph",
    "factor_pairs",
    "find_decomposing_labeling",
    "from_bits",
    "identity_labeling",
    "is_irreducible",
    "is_isomorphic",
    "is_isomorphic_directed",
    "lift",
    "mul",
    "net_isomorphic",
    "net_product",
    "parse_poly",
    "parse_poly1",
    "parse_poly2",
    "plain_coproduct",
    "plain_coproduct_directed",
    "plain_product",
    "plain_product_directed",
    "poly_key",
    "poly_product",
    "poly_product_directed",
    "poly_sum",
    "poly_sum_directed",
    "render",
    "tau",
    "tau_poly",
]
