"""Matched and partially matched rectangles.

A rectangle is an n x m grid of cells together with a partial matching on
the cells.  Internally a rectangle is a flat tuple ``match`` of length n*m
where cell ``r*m + c`` (0-based) holds the index of its partner cell or -1.
The public API speaks 1-based :class:`Position` values.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from . import kernels


class RectangleError(ValueError):
    """Base class for all domain errors raised by this package."""


class OutOfRange(RectangleError):
    pass


class PositionOccupied(RectangleError):
    pass


class SelfLoop(RectangleError):
    pass


class DimensionMismatch(RectangleError):
    pass


class IncompleteInput(RectangleError):
    pass


class Position(NamedTuple):
    """A cell of a rectangle, 1-based (row, col)."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class PartialRectangle:
    """Immutable n x m grid with a partial matching on its cells."""

    n: int
    m: int
    match: tuple

    # -- construction -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, m: int, edges: Iterable) -> "PartialRectangle":
        rect = new_rectangle(n, m)
        match = list(rect.match)
        for p, q in edges:
            p, q = Position(*p), Position(*q)
            a, b = rect._cell(p), rect._cell(q)
            if a == b:
                raise SelfLoop(f"edge pairs {p} with itself")
            if match[a] >= 0 or match[b] >= 0:
                raise PositionOccupied(f"{p if match[a] >= 0 else q} already matched")
            match[a], match[b] = b, a
        return cls(n, m, tuple(match))

    # -- cell helpers -------------------------------------------------

    def _cell(self, p: Position) -> int:
        r, c = p
        if not (1 <= r <= self.n and 1 <= c <= self.m):
            raise OutOfRange(f"{tuple(p)} outside {self.n}x{self.m}")
        return (r - 1) * self.m + (c - 1)

    def position(self, cell: int) -> Position:
        r, c = divmod(cell, self.m)
        return Position(r + 1, c + 1)

    # -- queries ------------------------------------------------------

    @property
    def edge_cells(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs of 0-based cells, ordered by smaller cell."""
        return [(x, y) for x, y in enumerate(self.match) if y > x]

    @property
    def edges(self) -> list[tuple[Position, Position]]:
        return [(self.position(x), self.position(y)) for x, y in self.edge_cells]

    @property
    def num_edges(self) -> int:
        return sum(1 for x, y in enumerate(self.match) if y > x)

    @property
    def is_complete(self) -> bool:
        return all(y >= 0 for y in self.match)

    def used_rows(self) -> set[int]:
        m = self.m
        return {x // m for x, y in enumerate(self.match) if y >= 0}

    def used_cols(self) -> set[int]:
        m = self.m
        return {x % m for x, y in enumerate(self.match) if y >= 0}

    def __str__(self) -> str:
        es = ", ".join(f"{p}-{q}" for p, q in self.edges)
        return f"{self.n}x{self.m}[{es}]"


@dataclass(frozen=True)
class Labeling:
    """A pair of permutations relabeling rows and columns.

    ``rows[r]`` is the new (0-based) index of row r; likewise ``cols``.
    """

    rows: tuple
    cols: tuple

    def __post_init__(self):
        if sorted(self.rows) != list(range(len(self.rows))):
            raise ValueError(f"row component is not a permutation: {self.rows}")
        if sorted(self.cols) != list(range(len(self.cols))):
            raise ValueError(f"column component is not a permutation: {self.cols}")

    @classmethod
    def identity(cls, n: int, m: int) -> "Labeling":
        return cls(tuple(range(n)), tuple(range(m)))

    @classmethod
    def from_one_based(cls, rows: Sequence[int], cols: Sequence[int]) -> "Labeling":
        """Build from 1-based images: ``rows[i-1]`` is the image of row i."""
        return cls(tuple(r - 1 for r in rows), tuple(c - 1 for c in cols))

    @classmethod
    def from_orders(cls, row_order: Sequence[int], col_order: Sequence[int]) -> "Labeling":
        """Labeling that sends ``row_order[t]`` to t (and likewise columns)."""
        rows = [0] * len(row_order)
        cols = [0] * len(col_order)
        for t, r in enumerate(row_order):
            rows[r] = t
        for t, c in enumerate(col_order):
            cols[c] = t
        return cls(tuple(rows), tuple(cols))

    @property
    def dims(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def inverse(self) -> "Labeling":
        return Labeling.from_orders(self.rows, self.cols)

    def __call__(self, p: Position) -> Position:
        return Position(self.rows[p.row - 1] + 1, self.cols[p.col - 1] + 1)


def compose(a: Labeling, b: Labeling) -> Labeling:
    """The labeling that applies ``b`` first and then ``a``.

    permute(rect, compose(a, b)) == permute(permute(rect, b), a).
    """
    if a.dims != b.dims:
        raise DimensionMismatch(f"{a.dims} vs {b.dims}")
    return Labeling(tuple(a.rows[r] for r in b.rows), tuple(a.cols[c] for c in b.cols))


# -- operations ---------------------------------------------------------


def new_rectangle(n: int, m: int) -> PartialRectangle:
    if n < 1 or m < 1:
        raise RectangleError(f"dimensions must be positive, got {n}x{m}")
    return PartialRectangle(n, m, (-1,) * (n * m))


def add_edge(rect: PartialRectangle, p, q) -> PartialRectangle:
    p, q = Position(*p), Position(*q)
    a, b = rect._cell(p), rect._cell(q)
    if a == b:
        raise SelfLoop(f"edge pairs {p} with itself")
    if rect.match[a] >= 0:
        raise PositionOccupied(f"{p} already matched")
    if rect.match[b] >= 0:
        raise PositionOccupied(f"{q} already matched")
    match = list(rect.match)
    match[a], match[b] = b, a
    return PartialRectangle(rect.n, rect.m, tuple(match))


def remove_edge(rect: PartialRectangle, p, q) -> PartialRectangle:
    a, b = rect._cell(Position(*p)), rect._cell(Position(*q))
    if rect.match[a] != b:
        raise RectangleError(f"{tuple(p)}-{tuple(q)} is not an edge")
    match = list(rect.match)
    match[a] = match[b] = -1
    return PartialRectangle(rect.n, rect.m, tuple(match))


def match_of(rect: PartialRectangle, p) -> Optional[Position]:
    y = rect.match[rect._cell(Position(*p))]
    return None if y < 0 else rect.position(y)


def permute_match(match: Sequence[int], n: int, m: int, rows: Sequence[int], cols: Sequence[int]) -> tuple:
    out = [-1] * (n * m)
    for x, y in enumerate(match):
        if y >= 0:
            r, c = divmod(x, m)
            k, l = divmod(y, m)
            out[rows[r] * m + cols[c]] = rows[k] * m + cols[l]
    return tuple(out)


def permute(rect: PartialRectangle, lab: Labeling) -> PartialRectangle:
    if lab.dims != (rect.n, rect.m):
        raise DimensionMismatch(f"labeling {lab.dims} vs rectangle {rect.n}x{rect.m}")
    return PartialRectangle(rect.n, rect.m, permute_match(rect.match, rect.n, rect.m, lab.rows, lab.cols))


def transpose(rect: PartialRectangle) -> PartialRectangle:
    n, m = rect.n, rect.m
    out = [-1] * (n * m)
    for x, y in enumerate(rect.match):
        if y >= 0:
            r, c = divmod(x, m)
            k, l = divmod(y, m)
            out[c * n + r] = l * n + k
    return PartialRectangle(m, n, tuple(out))


def lex_key(rect: PartialRectangle) -> tuple:
    """Flattened partner sequence; unmatched cells sort after every position."""
    big = rect.n * rect.m
    return tuple(big if y < 0 else y for y in rect.match)


def lex_compare(a: PartialRectangle, b: PartialRectangle) -> int:
    """-1, 0 or 1 comparing the row-major partner sequences of complete rectangles."""
    if (a.n, a.m) != (b.n, b.m):
        raise DimensionMismatch(f"{a.n}x{a.m} vs {b.n}x{b.m}")
    if not (a.is_complete and b.is_complete):
        raise IncompleteInput("lex_compare needs complete rectangles")
    return (a.match > b.match) - (a.match < b.match)


def cyc_rectangle(i: int) -> PartialRectangle:
    """The 2 x i staircase with edges (1,j)-(2,j+1)."""
    if i < 2:
        raise RectangleError(f"staircase needs at least 2 columns, got {i}")
    return PartialRectangle.from_edges(2, i, [((1, j), (2, j + 1)) for j in range(1, i)])


# -- pattern containment --------------------------------------------------


def _edge_order(n, m, edges):
    """Pattern edges reordered so each one touches a row or column seen before, if possible."""
    rest = list(edges)
    out = []
    rows, cols = set(), set()
    while rest:
        pick = 0
        for t, (x, y) in enumerate(rest):
            if {x // m, y // m} & rows or {x % m, y % m} & cols:
                pick = t
                break
        x, y = rest.pop(pick)
        out.append((x, y))
        rows |= {x // m, y // m}
        cols |= {x % m, y % m}
    return out


@functools.lru_cache(maxsize=256)
def _plans(pn, pm, pmatch, anchored):
    """Placement orders for a pattern's edges, one per anchored edge if asked."""
    pedges = [(x, y) for x, y in enumerate(pmatch) if y > x]
    if not anchored:
        return (tuple(_edge_order(pn, pm, pedges)),)
    plans = []
    for x, y in _edge_order(pn, pm, pedges):
        rest = [e for e in pedges if e != (x, y)]
        rest = _edge_order(pn, pm, rest)
        # keep the anchored edge's neighbours early
        rest.sort(key=lambda e: not ({e[0] // pm, e[1] // pm} & {x // pm, y // pm}
                                     or {e[0] % pm, e[1] % pm} & {x % pm, y % pm}))
        plans.append(((x, y), *rest))
    return tuple(plans)


def find_embedding(
    rect: PartialRectangle, pattern: PartialRectangle, anchor: Optional[tuple[int, int]] = None
) -> Optional[tuple[tuple, tuple]]:
    """Injections (rows, cols), 0-based, mapping every pattern edge onto a rect edge.

    Backtracks over pattern edges, assigning each to a rect edge in either
    orientation while keeping both maps injective.  Once both coordinates of
    a pattern endpoint are mapped its image is forced, so only its partner is
    checked.  With ``anchor`` (a pair of rect cells forming an edge) only
    embeddings that use that edge are searched.
    """
    if pattern.n > rect.n or pattern.m > rect.m:
        return None
    if pattern.num_edges == 0:
        return tuple(range(pattern.n)), tuple(range(pattern.m))
    plans = _plans(pattern.n, pattern.m, tuple(pattern.match), anchor is not None)
    a, b = anchor if anchor is not None else (-1, -1)
    found = kernels.embed_search(rect.match, rect.n, rect.m, pattern.n, pattern.m, plans, a, b)
    if found is None:
        return None
    rmap, cmap = found
    used_r, used_c = set(rmap), set(cmap)
    # complete the maps injectively on rows/columns not touched by edges
    free_r = iter(r for r in range(rect.n) if r not in used_r)
    free_c = iter(c for c in range(rect.m) if c not in used_c)
    rows = tuple(r if r >= 0 else next(free_r) for r in rmap)
    cols = tuple(c if c >= 0 else next(free_c) for c in cmap)
    return rows, cols


def contains_pattern(rect: PartialRectangle, pattern: PartialRectangle) -> bool:
    return find_embedding(rect, pattern) is not None


def contains_pattern_bruteforce(rect: PartialRectangle, pattern: PartialRectangle) -> bool:
    """Reference containment test: try every pair of injections."""
    if pattern.n > rect.n or pattern.m > rect.m:
        return False
    pm, rm = pattern.m, rect.m
    pedges = pattern.edge_cells
    for rows in itertools.permutations(range(rect.n), pattern.n):
        for cols in itertools.permutations(range(rect.m), pattern.m):
            ok = True
            for x, y in pedges:
                a = rows[x // pm] * rm + cols[x % pm]
                b = rows[y // pm] * rm + cols[y % pm]
                if rect.match[a] != b:
                    ok = False
                    break
            if ok:
                return True
    return False


# -- JSONL ----------------------------------------------------------------


def to_json_obj(rect: PartialRectangle) -> dict:
    return {
        "n": rect.n,
        "m": rect.m,
        "edges": [[[p.row, p.col], [q.row, q.col]] for p, q in rect.edges],
    }


def from_json_obj(obj: dict) -> PartialRectangle:
    try:
        n, m, edges = int(obj["n"]), int(obj["m"]), obj["edges"]
    except (KeyError, TypeError) as exc:
        raise RectangleError(f"malformed rectangle object: {obj!r}") from exc
    return PartialRectangle.from_edges(n, m, [(tuple(p), tuple(q)) for p, q in edges])


def dumps(rect: PartialRectangle) -> str:
    return json.dumps(to_json_obj(rect), separators=(",", ":"))


def loads(line: str) -> PartialRectangle:
    return from_json_obj(json.loads(line))


def read_jsonl(lines: Iterable[str]) -> Iterator[PartialRectangle]:
    for line in lines:
        line = line.strip()
        if line:
            yield loads(line)
