"""Cyclic closures and the exponent systems living on them.

The closure of a matched cell p starts from the rows and columns of p and of
its partner p'.  In the core subgroup normalised at p, the generators of
those rows and columns lie in the cyclic group generated by g = g_{p'.row}.
Whenever an edge has one endpoint inside A x B and exactly one coordinate of
the other endpoint inside, the missing coordinate's generator is forced into
the same cyclic group and is added.  An unmatched p has the trivial closure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .._pykernels import closure_cells, exponent_conflict, internal_edges
from ..core import PartialRectangle, Position

__all__ = ["CyclicClosure", "closure_cells", "cyclic_closure", "exponent_conflict", "internal_edges"]


@dataclass(frozen=True)
class CyclicClosure:
    seed: Position
    A: frozenset  # 1-based rows
    B: frozenset  # 1-based columns
    steps: tuple = ()  # ((cell_in, cell_out, "row"|"col", index0), ...) 0-based

    def spans_rows(self, n: int) -> bool:
        return len(self.A) == n

    def spans_cols(self, m: int) -> bool:
        return len(self.B) == m


def cyclic_closure(rect: PartialRectangle, p) -> CyclicClosure:
    p = Position(*p)
    seed = rect._cell(p)
    in_r, in_c, steps, _ = closure_cells(rect.match, rect.n, rect.m, seed)
    return CyclicClosure(
        p,
        frozenset(i + 1 for i, f in enumerate(in_r) if f),
        frozenset(j + 1 for j, f in enumerate(in_c) if f),
        tuple(steps),
    )
