"""Underlying graphs of 3-row rectangles and the graph-to-rectangle encoding.

Vertices are 1-based throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Union

from .core import PartialRectangle, RectangleError


class WrongRowCount(RectangleError):
    pass


class EmptyGraph(RectangleError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset = field(default_factory=frozenset)  # pairs (u, v), u < v

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.vertex_count and 1 <= v <= self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "SimpleGraph":
        edges = list(edges)
        seen = {(min(u, v), max(u, v)) for u, v in edges}
        if len(seen) != len(edges):
            raise ValueError("duplicate edge")
        return cls(vertex_count, frozenset(seen))

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def neighbours(self, v: int) -> set:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}


@dataclass(frozen=True)
class MultiEdgeReport:
    """Why a 3-row rectangle has no simple underlying graph."""

    loops: tuple  # columns j with an edge inside column j
    multi: tuple  # ((j, l), multiplicity) for repeated column pairs


def underlying_graph(rect: PartialRectangle) -> Union[SimpleGraph, MultiEdgeReport]:
    """Columns as vertices, one edge per matched pair of cells."""
    if rect.n != 3:
        raise WrongRowCount(f"underlying graphs need 3 rows, got {rect.n}")
    m = rect.m
    loops = []
    pairs: Counter = Counter()
    for x, y in rect.edge_cells:
        j, l = x % m + 1, y % m + 1
        if j == l:
            loops.append(j)
        else:
            pairs[(min(j, l), max(j, l))] += 1
    multi = tuple(sorted((e, c) for e, c in pairs.items() if c > 1))
    if loops or multi:
        return MultiEdgeReport(tuple(sorted(loops)), multi)
    return SimpleGraph(m, frozenset(pairs))


def is_cubic_triangle_free(g: SimpleGraph) -> bool:
    if any(g.degree(v) != 3 for v in range(1, g.vertex_count + 1)):
        return False
    adj = {v: g.neighbours(v) for v in range(1, g.vertex_count + 1)}
    return not any(adj[u] & adj[v] for u, v in g.edges)


def encode_graph(g: SimpleGraph) -> PartialRectangle:
    """Rows are vertices, each edge {i, j} owns two columns e1, e2.

    (i,e1)-(j,e1) and (i,e2)-(j,e2) are matched, and every other row k gets
    (k,e1)-(k,e2).  The result is complete but generally has proper matched
    sub-rectangles, so only brute-force isomorphism applies to it.
    """
    if not g.edges:
        raise EmptyGraph("cannot encode a graph without edges")
    n = g.vertex_count
    pairs = []
    for t, (i, j) in enumerate(sorted(g.edges)):
        e1, e2 = 2 * t + 1, 2 * t + 2
        pairs += [((i, e1), (j, e1)), ((i, e2), (j, e2))]
        pairs += [((k, e1), (k, e2)) for k in range(1, n + 1) if k not in (i, j)]
    return PartialRectangle.from_edges(n, 2 * len(g.edges), pairs)


def all_graphs(vertex_count: int, min_edges: int = 1):
    """Every labelled simple graph on ``vertex_count`` vertices with enough edges."""
    slots = list(combinations(range(1, vertex_count + 1), 2))
    for mask in range(1 << len(slots)):
        chosen = [slots[t] for t in range(len(slots)) if mask >> t & 1]
        if len(chosen) >= min_edges:
            yield SimpleGraph(vertex_count, frozenset(chosen))


# -- edge-list text -------------------------------------------------------


def format_edge_list(g: SimpleGraph) -> str:
    lines = [f"p {g.vertex_count} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SimpleGraph:
    header = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None or len(parts) != 3:
                raise ValueError(f"bad header line: {raw!r}")
            header = (int(parts[1]), int(parts[2]))
        elif parts[0] == "e":
            if header is None or len(parts) != 3:
                raise ValueError(f"bad edge line: {raw!r}")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"unrecognised line: {raw!r}")
    if header is None:
        raise ValueError("missing 'p' line")
    if len(edges) != header[1]:
        raise ValueError(f"header announces {header[1]} edges, found {len(edges)}")
    return SimpleGraph.from_edges(header[0], edges)
