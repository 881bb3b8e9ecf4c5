"""Exact domination polynomials of graphs, their roots, and root limit curves.

The package computes D(G,x) = sum_i d(G,i) x^i, where d(G,i) counts the
dominating sets of G of size i, three independent ways (brute force,
recurrences, closed family formulas), analyzes the roots (multiprecision
complex solving, exact real-root isolation, exact integer roots), traces
limit curves of root sequences for two- and three-term exponential families,
and partitions graph catalogs into classes with equal polynomials.
"""

from .domination import (
    BRUTE_FORCE_BUDGET_BITS,
    EnumerationBudgetError,
    all_method_polys,
    brute_force_poly,
    corona_family_poly,
    corona_poly,
    family_poly,
    join_poly,
    recurrence_poly_odot,
    recurrence_poly_vertex,
    restricted_count,
    union_poly,
)
from .equivalence import (
    EquivalenceReport,
    NonUniquenessWitness,
    bundled_catalog,
    is_d_unique_within,
    partition_catalog,
    verify_friendship_not_unique,
)
from .graphs import (
    DEFAULT_CAP,
    CapExceededError,
    FamilySpec,
    Graph,
    Graph6ParseError,
    bitset,
    build_family,
    contract,
    corona,
    delete_closed_neighborhood,
    delete_vertex,
    is_dominating,
    join,
    odot,
    parse_graph6,
    read_graph6_file,
    union,
    write_graph6,
)
from .limits import (
    CurvePiece,
    ExponentialFamily,
    GridRegion,
    LimitCurve,
    TwoTermFamily,
    bkw_limit_points,
    book_family,
    book_limit_curve,
    distance_to_curve,
    family_member,
    friendship_family,
    friendship_limit_curve,
    friendship_root_distances,
    shift_poly,
)
from .polynomials import (
    DEFAULT_PRECISION,
    IntPolynomial,
    exact_div,
    poly_gcd,
)
from .roots import (
    ComplexRoot,
    ConvergenceError,
    RootSet,
    all_roots,
    count_real_roots_in,
    integer_roots,
    real_roots_exact,
    square_free_decomposition,
    square_free_part,
)

__all__ = [
    "BRUTE_FORCE_BUDGET_BITS",
    "CapExceededError",
    "ComplexRoot",
    "ConvergenceError",
    "CurvePiece",
    "DEFAULT_CAP",
    "DEFAULT_PRECISION",
    "EnumerationBudgetError",
    "EquivalenceReport",
    "ExponentialFamily",
    "FamilySpec",
    "Graph",
    "Graph6ParseError",
    "GridRegion",
    "IntPolynomial",
    "LimitCurve",
    "NonUniquenessWitness",
    "RootSet",
    "TwoTermFamily",
    "all_method_polys",
    "all_roots",
    "bitset",
    "bkw_limit_points",
    "book_family",
    "book_limit_curve",
    "brute_force_poly",
    "build_family",
    "bundled_catalog",
    "contract",
    "corona",
    "corona_family_poly",
    "corona_poly",
    "count_real_roots_in",
    "delete_closed_neighborhood",
    "delete_vertex",
    "distance_to_curve",
    "exact_div",
    "family_member",
    "family_poly",
    "friendship_family",
    "friendship_limit_curve",
    "friendship_root_distances",
    "integer_roots",
    "is_d_unique_within",
    "is_dominating",
    "join",
    "join_poly",
    "odot",
    "parse_graph6",
    "partition_catalog",
    "poly_gcd",
    "read_graph6_file",
    "real_roots_exact",
    "recurrence_poly_odot",
    "recurrence_poly_vertex",
    "restricted_count",
    "shift_poly",
    "square_free_decomposition",
    "square_free_part",
    "union",
    "union_poly",
    "verify_friendship_not_unique",
    "write_graph6",
]

__version__ = "0.1.0"
