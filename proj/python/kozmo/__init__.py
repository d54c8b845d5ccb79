"""Maximal corners, Betti bounds, irreducible and Stanley decompositions of monomial ideals."""

from ._core import (
    DimensionError,
    DomainError,
    ExponentOverflowError,
    FeasibilityError,
    IdealDocument,
    IdealSyntaxError,
    InvalidInputError,
    KozmoError,
    LeafError,
    MonomialIdeal,
    ScaleError,
    UndefinedLambdaError,
    betti_bounds,
    format_ideal,
    format_monomial,
    gfd,
    hilbert_series,
    irreducible_decomposition,
    is_closed_corner,
    is_maximal_corner,
    koszul_homology_bruteforce,
    koszul_homology_dim,
    krull_dimension,
    lfd,
    maximal_corners,
    parse_ideal,
    random_ideal,
    read_ideal_file,
    standard_monomial_count,
    stanley_decomposition,
    verify,
)

__version__ = "0.1.0"
