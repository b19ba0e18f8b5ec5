"""Collinear triple systems, configuration search and conic extraction.

Point sets are dicts with keys "A", "B", "C" (lists of (x, y) or (x, y, w)
tuples; coordinates may be ints, Fractions or strings like "3/2") and an
optional "c_at_infinity" flag. Coordinates come back as Fractions.
"""

from ._core import (
    CtriError,
    build_triples,
    canonical_order,
    directions,
    extract_conic,
    find_663,
    find_k_system,
    find_tictactoe,
    format_pointset,
    gen_circle_points,
    gen_conic_instance,
    gen_degenerate_family,
    gen_grid_with_directions,
    gen_ksystem,
    gen_mutually_avoiding,
    gen_pascal_ttt,
    on_conic,
    parse_pointset,
)

__all__ = [
    "CtriError",
    "build_triples",
    "canonical_order",
    "directions",
    "extract_conic",
    "find_663",
    "find_k_system",
    "find_tictactoe",
    "format_pointset",
    "gen_circle_points",
    "gen_conic_instance",
    "gen_degenerate_family",
    "gen_grid_with_directions",
    "gen_ksystem",
    "gen_mutually_avoiding",
    "gen_pascal_ttt",
    "on_conic",
    "parse_pointset",
]
