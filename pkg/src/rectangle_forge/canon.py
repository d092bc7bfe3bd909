"""Canonical labeling, adequacy, canonical edges and automorphisms.

Every seed cell starts a breadth-first trace that numbers rows and columns in
order of discovery; the canonical form is the lexicographically least
relabeling over all seeds.  The same trace decides adequacy of partial
rectangles: it may stop once all matched cells are covered, and fails if an
unmatched cell reaches the front of the queue first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import kernels
from .core import (
    IncompleteInput,
    Labeling,
    PartialRectangle,
    Position,
    RectangleError,
    compose,
    permute,
)


class NotCovered(RectangleError):
    """A seed's queue ran dry: the rectangle has a proper matched sub-rectangle."""


class NotAdequate(IncompleteInput):
    """No seed trace covers all matched cells before meeting an unmatched one."""


class TooSmall(RectangleError):
    pass


_STATUS = {kernels.OK: "covered", kernels.UNMATCHED: "unmatched-front", kernels.STARVED: "starved"}


@dataclass(frozen=True)
class BfsTrace:
    """Result of one seed trace, 1-based.

    ``N`` lists every cell ever enqueued, in order; ``status`` is one of
    ``covered``, ``unmatched-front`` or ``starved``.
    """

    seed: Position
    Lr: tuple
    Lc: tuple
    N: tuple
    status: str

    @property
    def ok(self) -> bool:
        return self.status == "covered"


def seed_trace(rect: PartialRectangle, seed) -> BfsTrace:
    seed = Position(*seed)
    status, Lr, Lc, queue = kernels.trace(rect.match, rect.n, rect.m, rect._cell(seed))
    return BfsTrace(
        seed,
        tuple(r + 1 for r in Lr),
        tuple(c + 1 for c in Lc),
        tuple(rect.position(x) for x in queue),
        _STATUS[status],
    )


def reference_labeling(rect: PartialRectangle) -> Labeling:
    """Straight transcription of the quadratic canonical-labeling loop.

    Plain lists, 1-based positions, ``in`` tests on the lists and a full
    relabel-and-compare per seed.  Used to cross-check the fast kernels.
    """
    if not rect.is_complete:
        raise IncompleteInput("reference labeling needs a complete rectangle")
    n, m = rect.n, rect.m

    def match(p):
        y = rect.match[rect._cell(p)]
        return rect.position(y)

    def relabeled(Lr, Lc):
        return permute(rect, Labeling.from_orders([r - 1 for r in Lr], [c - 1 for c in Lc])).match

    S_r, S_c = [], []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            L_r = [i]
            L_c = [j]
            N = [Position(i, j)]
            while len(L_r) != n or len(L_c) != m:
                if not N:
                    raise NotCovered(f"trace from {(i, j)} starves")
                k, l = match(N[0])
                N.pop(0)
                if k not in L_r:
                    L_r.append(k)
                    N.extend(Position(k, c) for c in L_c)
                if l not in L_c:
                    L_c.append(l)
                    N.extend(Position(r, l) for r in L_r)
            if not S_r or relabeled(L_r, L_c) < relabeled(S_r, S_c):
                S_r, S_c = L_r, L_c
    return Labeling.from_orders([r - 1 for r in S_r], [c - 1 for c in S_c])


@dataclass(frozen=True)
class CanonicalScan:
    """Canonical form together with every seed labeling that attains it."""

    form: PartialRectangle
    seeds: tuple  # minimal seeds, row-major order
    labelings: tuple  # labeling per minimal seed; the first is the canonical labeling

    @property
    def labeling(self) -> Labeling:
        return self.labelings[0]


@lru_cache(maxsize=8192)
def _scan(n: int, m: int, match: tuple) -> CanonicalScan:
    form, minima, starved = kernels.scan(match, n, m)
    complete = all(y >= 0 for y in match)
    if complete and starved:
        raise NotCovered("some seed's queue empties before all rows and columns are listed")
    if form is None:
        raise NotAdequate("no seed trace covers the matched cells")
    seeds = tuple(Position(s // m + 1, s % m + 1) for s, _, _ in minima)
    labs = tuple(Labeling.from_orders(ro, co) for _, ro, co in minima)
    return CanonicalScan(PartialRectangle(n, m, form), seeds, labs)


def canonical_scan(rect: PartialRectangle) -> CanonicalScan:
    """Scan all seeds of a complete rectangle in the domain or an adequate partial one.

    Complete rectangles with a starving seed raise NotCovered; partial
    rectangles that no seed covers raise NotAdequate.  For partial input the
    failing seeds are simply skipped.
    """
    if rect.num_edges == 0:
        raise NotAdequate("edgeless rectangle has no canonical trace")
    return _scan(rect.n, rect.m, rect.match)


def canonical_labeling(rect: PartialRectangle) -> Labeling:
    return canonical_scan(rect).labeling


def canonical_form(rect: PartialRectangle) -> PartialRectangle:
    return canonical_scan(rect).form


def automorphisms(rect: PartialRectangle) -> list[Labeling]:
    """Automorphisms read off the minimal seeds, identity first.

    For complete rectangles in the domain this is the full automorphism
    group.  For partial ones it is the set of automorphisms that order the
    uncovered rows and columns increasingly; it acts on the edges exactly as
    the full group does.
    """
    sc = canonical_scan(rect)
    ref = sc.labeling
    return [compose(lab.inverse(), ref) for lab in sc.labelings]


def is_adequate(rect: PartialRectangle) -> Optional[Position]:
    """First seed (row-major) whose trace covers all matched cells, or None."""
    if rect.num_edges == 0:
        raise RectangleError("adequacy is undefined for an edgeless rectangle")
    for seed, y in enumerate(rect.match):
        if y >= 0:
            status, _, _, _ = kernels.trace(rect.match, rect.n, rect.m, seed)
            if status == kernels.OK:
                return rect.position(seed)
    return None


def _canonical_edge_cells(rect: PartialRectangle) -> tuple[int, int]:
    sc = canonical_scan(rect)
    n, m = rect.n, rect.m
    u, v = kernels.canonical_edge(sc.form.match, n, m)
    inv = sc.labeling.inverse()
    pu = inv.rows[u // m] * m + inv.cols[u % m]
    pv = inv.rows[v // m] * m + inv.cols[v % m]
    return (pu, pv) if pu < pv else (pv, pu)


def canonical_edge(rect: PartialRectangle) -> tuple[Position, Position]:
    """Pre-image of the canonical edge of the canonical form.

    In the canonical form, the edge chosen is the one whose earlier-enqueued
    endpoint enters the (1,1)-trace queue last.  Deleting it always leaves an
    adequate rectangle (or a single edge); the literal "last popped edge"
    does not have that property under covering semantics.
    """
    a, b = _canonical_edge_cells(rect)
    return rect.position(a), rect.position(b)


def canonical_parent(rect: PartialRectangle) -> PartialRectangle:
    if rect.num_edges < 2:
        raise TooSmall("canonical parent needs at least two edges")
    a, b = _canonical_edge_cells(rect)
    match = list(rect.match)
    match[a] = match[b] = -1
    return PartialRectangle(rect.n, rect.m, tuple(match))
