"""Isomorph-free generation of adequate rectangles along canonical construction paths.

The tree is rooted at the empty rectangle in the full n x m frame.  A child
adds one edge to its parent and is kept when that edge is the pre-image of
the child's canonical edge under some canonical labeling, so every class
is reached from exactly one parent.  Children of one parent are deduplicated
by canonical form.

New edges may only open the smallest unused rows and columns: a single new
row must be the smallest unused one, two new rows must be the two smallest
with the endpoint in the smaller row taking the smaller (or equal) column.
Columns are handled the same way.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import kernels
from .core import DimensionMismatch, PartialRectangle, RectangleError, new_rectangle
from .graphutil import MultiEdgeReport, is_cubic_triangle_free, underlying_graph
from .prune import RULE_NAMES, Pruner
from .prune.validate import validate as validate_certificate


class TheoremViolation(RectangleError):
    """A 3-row survivor of the full rule set whose graph is not cubic and triangle-free."""

    def __init__(self, rects):
        self.rects = list(rects)
        super().__init__(f"{len(self.rects)} survivor(s) violate the cubic triangle-free property")


@dataclass
class EnumerationStats:
    n: int
    m: int
    nodes: int = 0
    pruned: dict = field(default_factory=dict)
    survivors: int = 0
    elapsed: float = 0.0
    invalid_certificates: int = 0
    truncated: bool = False

    def merge(self, other: "EnumerationStats") -> None:
        self.nodes += other.nodes
        for k, v in other.pruned.items():
            self.pruned[k] = self.pruned.get(k, 0) + v
        self.survivors += other.survivors
        self.invalid_certificates += other.invalid_certificates
        self.truncated = self.truncated or other.truncated

    def to_json(self) -> dict:
        order = {r: t for t, r in enumerate(RULE_NAMES)}
        return {
            "n": self.n,
            "m": self.m,
            "nodes": self.nodes,
            "pruned": {k: self.pruned[k] for k in sorted(self.pruned, key=order.get)},
            "survivors": self.survivors,
            "elapsed_s": round(self.elapsed, 3),
        }


def _fresh(used, size):
    return [i for i in range(size) if i not in used][:2]


def _candidates(match, n, m):
    """Unmatched cell pairs (a, b), a < b, allowed by the fresh row/column rule."""
    used_r = {x // m for x, y in enumerate(match) if y >= 0}
    used_c = {x % m for x, y in enumerate(match) if y >= 0}
    fr = _fresh(used_r, n)
    fc = _fresh(used_c, m)
    ok_r = used_r | set(fr)
    ok_c = used_c | set(fc)
    free = [x for x, y in enumerate(match) if y < 0 and x // m in ok_r and x % m in ok_c]
    for s, a in enumerate(free):
        ra, ca = divmod(a, m)
        for b in free[s + 1:]:
            rb, cb = divmod(b, m)
            new_r = {ra, rb} - used_r
            if len(new_r) == 1 and new_r != {fr[0]}:
                continue
            if len(new_r) == 2:
                # ra < rb since a < b
                if (ra, rb) != (fr[0], fr[1]) or ca > cb:
                    continue
            new_c = {ca, cb} - used_c
            if len(new_c) == 1 and new_c != {fc[0]}:
                continue
            if len(new_c) == 2:
                (r0, c0), (r1, c1) = sorted(((ra, ca), (rb, cb)), key=lambda t: t[1])
                if (c0, c1) != (fc[0], fc[1]) or r0 > r1:
                    continue
            yield a, b


def _children(match, n, m):
    """(child match, canonical form, new edge) per accepted child, in candidate order."""
    seen = set()
    for a, b in _candidates(match, n, m):
        child = list(match)
        child[a], child[b] = b, a
        child = tuple(child)
        if min(child) >= 0 and kernels.proper_subrectangle(child, n, m) is not None:
            continue  # complete but outside the canonical labeling's domain
        form = kernels.accept(child, n, m, a, b)
        if form is None or form in seen:
            continue
        seen.add(form)
        yield child, form, (a, b)


def children(parent: PartialRectangle, dims: Optional[tuple] = None) -> list[PartialRectangle]:
    """One child per class of one-edge extensions whose canonical parent is ``parent``.

    Complete children that contain a proper matched sub-rectangle are left
    out since no canonical form exists for them.
    """
    if dims is not None and tuple(dims) != (parent.n, parent.m):
        raise DimensionMismatch(f"parent is {parent.n}x{parent.m}, frame is {dims[0]}x{dims[1]}")
    return [PartialRectangle(parent.n, parent.m, c) for c, _, _ in _children(parent.match, parent.n, parent.m)]


class _Walker:
    def __init__(self, n, m, pruner, validate, budget):
        self.n, self.m = n, m
        self.pruner = pruner
        self.validate = validate
        self.budget = budget
        self.stats = EnumerationStats(n, m)
        self.found: list = []

    def visit(self, match, form, new_edge=None) -> bool:
        """Count and test one node; True if it should be expanded."""
        st = self.stats
        if self.budget is not None and st.nodes >= self.budget:
            st.truncated = True
            return False
        st.nodes += 1
        rect = PartialRectangle(self.n, self.m, match)
        verdict = self.pruner(rect, new_edge)
        if verdict.pruned:
            st.pruned[verdict.rule] = st.pruned.get(verdict.rule, 0) + 1
            if self.validate and validate_certificate(rect, verdict):
                st.invalid_certificates += 1
            return False
        if min(match) >= 0:
            st.survivors += 1
            self.found.append(form)
            return False
        return True

    def walk(self, match, depth_limit=None, frontier=None):
        edges = sum(1 for y in match if y >= 0) // 2
        if depth_limit is not None and edges == depth_limit:
            frontier.append(match)
            return
        for child, form, edge in _children(match, self.n, self.m):
            if self.stats.truncated:
                return
            # the parent passed every rule, so containment witnesses must use the new edge
            if self.visit(child, form, edge):
                self.walk(child, depth_limit, frontier)


def _subtree(args):
    match, n, m, rules, validate, budget = args
    w = _Walker(n, m, Pruner(rules), validate, budget)
    w.walk(match)
    return w.stats, w.found


def enumerate_rectangles(
    n: int,
    m: int,
    pruner: Optional[Pruner] = None,
    sink: Optional[Callable[[PartialRectangle], None]] = None,
    jobs: int = 1,
    split_depth: int = 3,
    max_nodes: Optional[int] = None,
    validate: bool = False,
) -> EnumerationStats:
    """Walk the generation tree of the n x m frame.

    Every node is tested by ``pruner`` before it is expanded; complete
    unpruned nodes go to ``sink`` as canonical forms.  Subtrees below
    ``split_depth`` edges are independent tasks, run in a process pool when
    ``jobs > 1``; survivors reach the sink in the same order either way.
    ``max_nodes`` caps the number of visited nodes (per task once split),
    leaving ``stats.truncated`` set.
    """
    if n < 1 or m < 1:
        raise RectangleError("dimensions must be positive")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    pruner = pruner if pruner is not None else Pruner()
    t0 = time.perf_counter()
    stats = EnumerationStats(n, m)
    found: list = []
    if (n * m) % 2 == 0:
        top = _Walker(n, m, pruner, validate, max_nodes)
        frontier: list = []
        top.walk(new_rectangle(n, m).match, split_depth, frontier)
        stats.merge(top.stats)
        found += top.found
        budget = None if max_nodes is None else max(0, max_nodes - top.stats.nodes)
        tasks = [(f, n, m, pruner.rules, validate, budget) for f in frontier]
        if jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_subtree, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
        else:
            results = []
            for t in tasks:
                if budget is not None:
                    t = t[:-1] + (max(0, max_nodes - stats.nodes - sum(r[0].nodes for r in results)),)
                results.append(_subtree(t))
        for st, fs in results:
            stats.merge(st)
            found += fs

    violations = []
    check_graphs = n == 3 and set(pruner.rules) == set(RULE_NAMES)
    for form in found:
        rect = PartialRectangle(n, m, form)
        if check_graphs:
            g = underlying_graph(rect)
            if isinstance(g, MultiEdgeReport) or not is_cubic_triangle_free(g):
                violations.append(rect)
        if sink is not None:
            sink(rect)
    stats.elapsed = time.perf_counter() - t0
    if violations:
        raise TheoremViolation(violations)
    return stats
