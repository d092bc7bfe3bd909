"""Isomorph-free enumeration of matched rectangles with degeneracy pruning."""

from .core import (
    DimensionMismatch,
    IncompleteInput,
    Labeling,
    OutOfRange,
    PartialRectangle,
    Position,
    PositionOccupied,
    RectangleError,
    SelfLoop,
    add_edge,
    compose,
    contains_pattern,
    cyc_rectangle,
    lex_compare,
    match_of,
    new_rectangle,
    permute,
    transpose,
)

__version__ = "0.1.0"
