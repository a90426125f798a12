"""Python bindings for the parikh attractor library.

Vectors are plain lists of non-negative integers; the basis is their length.
Library errors surface as ``parikhmap.Error`` (or one of its subclasses).
"""

from ._core import (
    Error,
    InvalidArgument,
    NoAttractor,
    NoPreimage,
    OutOfRangeCount,
    OutOfRangeComponent,
    ParseError,
    alphabetic_basis_map,
    alphabetic_map,
    basis_map,
    find_attractors,
    format_vector,
    formula_attractor,
    inverse_map,
    iterate,
    map_word,
    parse_vector,
    preimage_count,
    reachability_rate,
    state_space,
    verify_countable,
    verify_formula,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "NoAttractor",
    "NoPreimage",
    "OutOfRangeCount",
    "OutOfRangeComponent",
    "ParseError",
    "alphabetic_basis_map",
    "alphabetic_map",
    "basis_map",
    "find_attractors",
    "format_vector",
    "formula_attractor",
    "inverse_map",
    "iterate",
    "map_word",
    "parse_vector",
    "preimage_count",
    "reachability_rate",
    "state_space",
    "verify_countable",
    "verify_formula",
]
