"""Library of small partial rectangles whose presence rules a rectangle out.

Each pattern is only conclusive when its rows (``span="rows"``) or its
columns (``span="cols"``) cover every row or column of the host, so the
rule checks the host's dimension before searching for an embedding.  The
pruner also tries the transpose of the host, which covers the transposed
patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import PartialRectangle


@dataclass(frozen=True)
class Pattern:
    name: str
    rect: PartialRectangle
    span: str  # "rows" or "cols"
    reason: str

    def applies_to(self, n: int, m: int) -> bool:
        if self.rect.n > n or self.rect.m > m:
            return False
        return self.rect.n == n if self.span == "rows" else self.rect.m == m


def _p(name, n, m, edges, span, reason):
    return Pattern(name, PartialRectangle.from_edges(n, m, edges), span, reason)


LIBRARY: tuple = (
    _p("triangle-cyclic", 3, 3, [((1, 1), (2, 2)), ((1, 2), (2, 3)), ((3, 1), (1, 3))],
       "rows", "rows generate a cyclic core"),
    _p("triangle-bs11", 3, 3, [((1, 1), (2, 2)), ((3, 2), (1, 3)), ((2, 3), (3, 1))],
       "rows", "core is a quotient of BS(1,1)"),
    _p("triangle-bs1m1", 3, 3, [((1, 1), (2, 2)), ((1, 2), (3, 3)), ((2, 3), (3, 1))],
       "rows", "core is a quotient of BS(1,-1)"),
    _p("staircase-cyclic", 3, 4, [((1, 1), (2, 2)), ((1, 2), (2, 3)), ((1, 3), (2, 4)), ((1, 4), (3, 1))],
       "rows", "rows generate a cyclic core"),
    _p("square-klein", 3, 4, [((1, 1), (2, 2)), ((1, 2), (2, 3)), ((1, 3), (3, 4)), ((1, 4), (3, 1))],
       "rows", "core is a quotient of BS(1,-1)"),
    _p("bs1m2", 3, 4, [((1, 1), (2, 2)), ((1, 2), (3, 3)), ((1, 3), (2, 4)), ((3, 4), (2, 1))],
       "rows", "core is a quotient of BS(1,-2)"),
    _p("periodic-two", 3, 4, [((1, 1), (2, 2)), ((1, 2), (3, 3)), ((1, 3), (2, 4)), ((1, 4), (3, 1))],
       "rows", "periodic cycle of period two"),
    _p("factor-pairs", 2, 4, [((1, 1), (2, 2)), ((1, 3), (2, 4))],
       "cols", "column sum factors through 1 + g_1^-1 g_2"),
)

BY_NAME = {p.name: p for p in LIBRARY}
