"""Brute-force references for tests and acceptance runs.

Nothing here is clever on purpose: matchings are enumerated exhaustively and
isomorphism is decided by trying row and column permutations.  Hard size
guards raise instead of running for hours.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

from .core import DimensionMismatch, PartialRectangle, RectangleError, permute_match

MAX_CELLS = 16
MAX_LABELINGS = 10**6


class OddCellCount(RectangleError):
    pass


class TooLarge(RectangleError):
    pass


@dataclass(frozen=True)
class ClassCount:
    dims: tuple
    filter_name: str
    classes: int
    total: int

    def to_json(self) -> dict:
        return {"n": self.dims[0], "m": self.dims[1], "filter": self.filter_name,
                "classes": self.classes, "total": self.total}


def double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def all_matchings(n: int, m: int) -> Iterator[PartialRectangle]:
    """Every perfect matching of the n x m grid once, lowest free cell paired first."""
    size = n * m
    if size % 2:
        raise OddCellCount(f"{n}x{m} has an odd number of cells")
    if size > MAX_CELLS:
        raise TooLarge(f"{n}x{m} has more than {MAX_CELLS} cells")
    match = [-1] * size

    def rec(start):
        x = start
        while x < size and match[x] >= 0:
            x += 1
        if x == size:
            yield PartialRectangle(n, m, tuple(match))
            return
        for y in range(x + 1, size):
            if match[y] < 0:
                match[x], match[y] = y, x
                yield from rec(x + 1)
                match[x] = match[y] = -1

    yield from rec(0)


def _check_pair(a: PartialRectangle, b: PartialRectangle) -> None:
    if (a.n, a.m) != (b.n, b.m):
        raise DimensionMismatch(f"{a.n}x{a.m} vs {b.n}x{b.m}")


def _labeling_count(n: int, m: int) -> int:
    return math.factorial(n) * math.factorial(m)


def brute_isomorphic(a: PartialRectangle, b: PartialRectangle) -> bool:
    """True iff some row and column permutation carries a's edges onto b's."""
    _check_pair(a, b)
    n, m = a.n, a.m
    if _labeling_count(n, m) > MAX_LABELINGS:
        raise TooLarge(f"{n}! * {m}! labelings exceed {MAX_LABELINGS}")
    if a.num_edges != b.num_edges:
        return False
    target = tuple(b.match)
    for rows in permutations(range(n)):
        for cols in permutations(range(m)):
            if permute_match(a.match, n, m, rows, cols) == target:
                return True
    return False


def brute_automorphisms(rect: PartialRectangle) -> list[tuple[tuple, tuple]]:
    """All (rows, cols) 0-based image maps fixing rect, in lexicographic order."""
    n, m = rect.n, rect.m
    if _labeling_count(n, m) > MAX_LABELINGS:
        raise TooLarge(f"{n}! * {m}! labelings exceed {MAX_LABELINGS}")
    me = tuple(rect.match)
    return [(rows, cols) for rows in permutations(range(n)) for cols in permutations(range(m))
            if permute_match(me, n, m, rows, cols) == me]


def brute_key(rect: PartialRectangle) -> tuple:
    """Smallest relabeled match tuple over all labelings; equal keys iff isomorphic."""
    n, m = rect.n, rect.m
    if _labeling_count(n, m) > MAX_LABELINGS:
        raise TooLarge(f"{n}! * {m}! labelings exceed {MAX_LABELINGS}")
    return min(tuple(permute_match(rect.match, n, m, rows, cols))
               for rows in permutations(range(n)) for cols in permutations(range(m)))


def search_isomorphism(a: PartialRectangle, b: PartialRectangle) -> Optional[tuple[tuple, tuple]]:
    """(rows, cols) carrying a onto b, found by trying row permutations and
    propagating the column map along edges; None if there is none.

    Only the row permutations are enumerated, so this handles wide
    rectangles such as graph encodings that are out of reach for
    :func:`brute_isomorphic`.
    """
    _check_pair(a, b)
    n, m = a.n, a.m
    if math.factorial(n) > MAX_LABELINGS:
        raise TooLarge(f"{n}! row permutations exceed {MAX_LABELINGS}")
    if a.num_edges != b.num_edges:
        return None
    am, bm = a.match, b.match

    def assign(rows, cmap, cused, c, d, trail):
        """Map column c to d and everything the edges force; False on conflict."""
        todo = [(c, d)]
        while todo:
            c, d = todo.pop()
            if cmap[c] == d:
                continue
            if cmap[c] >= 0 or cused[d]:
                return False
            cmap[c] = d
            cused[d] = True
            trail.append(c)
            for r in range(n):
                x = r * m + c
                u = rows[r] * m + d
                y, v = am[x], bm[u]
                if (y < 0) != (v < 0):
                    return False
                if y < 0:
                    continue
                if rows[y // m] != v // m:
                    return False
                todo.append((y % m, v % m))
        return True

    def undo(cmap, cused, trail, mark):
        while len(trail) > mark:
            c = trail.pop()
            cused[cmap[c]] = False
            cmap[c] = -1

    def rec(rows, cmap, cused, trail):
        c = next((j for j in range(m) if cmap[j] < 0), None)
        if c is None:
            return True
        for d in range(m):
            if cused[d]:
                continue
            mark = len(trail)
            if assign(rows, cmap, cused, c, d, trail) and rec(rows, cmap, cused, trail):
                return True
            undo(cmap, cused, trail, mark)
        return False

    for rows in permutations(range(n)):
        cmap = [-1] * m
        if rec(rows, cmap, [False] * m, []):
            return tuple(rows), tuple(cmap)
    return None


# -- class counting -------------------------------------------------------


def _has_same_line_edge(rect: PartialRectangle) -> bool:
    m = rect.m
    return any(x // m == y // m or x % m == y % m for x, y in rect.edge_cells)


def _has_proper_subrectangle(rect: PartialRectangle) -> bool:
    """Brute force over all row and column subsets."""
    n, m = rect.n, rect.m
    match = rect.match
    for rmask in range(1, 1 << n):
        rows = [r for r in range(n) if rmask >> r & 1]
        for cmask in range(1, 1 << m):
            if rmask == (1 << n) - 1 and cmask == (1 << m) - 1:
                continue
            cols = [c for c in range(m) if cmask >> c & 1]
            ok = True
            for r in rows:
                for c in cols:
                    y = match[r * m + c]
                    if y < 0 or not (rmask >> (y // m) & 1 and cmask >> (y % m) & 1):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


FILTERS = {
    "none": lambda r: True,
    "structural": lambda r: not _has_same_line_edge(r) and not _has_proper_subrectangle(r),
    "domain": lambda r: not _has_proper_subrectangle(r),
}


def brute_classes(n: int, m: int, filter_name: str = "none") -> ClassCount:
    """Isomorphism classes of complete n x m matchings passing the filter."""
    try:
        keep = FILTERS[filter_name]
    except KeyError:
        raise ValueError(f"unknown filter {filter_name!r}; known: {', '.join(FILTERS)}") from None
    if _labeling_count(n, m) > MAX_LABELINGS:
        raise TooLarge(f"{n}! * {m}! labelings exceed {MAX_LABELINGS}")
    keys = set()
    total = 0
    for rect in all_matchings(n, m):
        total += 1
        if keep(rect):
            keys.add(brute_key(rect))
    return ClassCount((n, m), filter_name, len(keys), total)
