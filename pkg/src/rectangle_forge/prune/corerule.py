"""Word labels for the core subgroup of an adequate rectangle.

Starting from the canonical form, the row and column of cell (1,1) are set
to the identity.  Any other seed cell whose trace covers the rectangle can
be used instead; the rectangle is then relabeled by that trace.  Edges are
visited in the order their cells enter the seed's trace queue; an edge whose relation g_i h_j = g_i' h_j' has exactly
one unlabeled generator determines it.  When no edge can be used, a fresh
symbol (at most two, g then h) is given to a generator of the first edge
with two unknowns.  Edges whose four generators are labeled but were not
used to define a label leave residual relators.

If every row (or every column) ends up labeled, the core subgroup of any
completion is generated by the two symbols and satisfies the residual
relators, which is what the decision below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .. import kernels
from ..canon import canonical_scan
from ..core import Labeling, PartialRectangle, permute_match
from . import words

@dataclass
class CoreLabels:
    n: int
    m: int
    rows: dict  # row (0-based, rect coordinates) -> word
    cols: dict
    steps: list  # (gen, index, word, via) with via = "seed" | "symbol" | (x, y)
    relators: list  # cyclically reduced, non-empty, distinct up to conjugacy/inversion

    @property
    def symbols(self) -> set:
        out = set()
        for w in list(self.rows.values()) + list(self.cols.values()):
            out |= words.symbols(w)
        return out

    def covers(self) -> Optional[str]:
        if len(self.rows) == self.n:
            return "rows"
        if len(self.cols) == self.m:
            return "cols"
        return None


def _relation(x, y, m):
    """Generators of g_i h_j h_j'^-1 g_i'^-1 as (kind, index, sign) letters."""
    i, j = divmod(x, m)
    k, l = divmod(y, m)
    return [("g", i, 1), ("h", j, 1), ("h", l, -1), ("g", k, -1)]


def _substitute(rel, labels):
    out = []
    for kind, idx, sign in rel:
        w = labels[kind][idx]
        out.extend(w if sign > 0 else words.inverse(w))
    return words.reduce(out)


def _seed_labeling(rect: PartialRectangle, seed: int) -> Optional[Labeling]:
    status, Lr, Lc, _ = kernels.trace(rect.match, rect.n, rect.m, seed)
    if status != kernels.OK:
        return None
    rows = list(Lr) + [r for r in range(rect.n) if r not in Lr]
    cols = list(Lc) + [c for c in range(rect.m) if c not in Lc]
    return Labeling.from_orders(rows, cols)


def propagate(rect: PartialRectangle, seed: Optional[int] = None) -> Optional[CoreLabels]:
    """Label generators of ``rect`` (adequate) by words in at most two symbols.

    ``seed`` is a 0-based cell; by default the canonical (1,1) cell is used.
    Returns None when the seed's trace does not cover the rectangle.
    """
    n, m = rect.n, rect.m
    if seed is None:
        sc = canonical_scan(rect)
        form, lab = sc.form.match, sc.labeling
    else:
        lab = _seed_labeling(rect, seed)
        if lab is None:
            return None
        form = permute_match(rect.match, n, m, lab.rows, lab.cols)
    _, _, _, queue = kernels.trace(form, n, m, 0)
    index = {x: t for t, x in enumerate(queue)}
    order = sorted(
        ((x, y) for x, y in enumerate(form) if y > x),
        key=lambda e: (min(index[e[0]], index[e[1]]), max(index[e[0]], index[e[1]])),
    )
    labels = {"g": {0: ()}, "h": {0: ()}}
    steps = [("g", 0, (), "seed"), ("h", 0, (), "seed")]
    rels = [(e, _relation(e[0], e[1], m)) for e in order]
    pending = list(rels)
    used = set()
    nsym = 0
    while True:
        progress = True
        while progress:
            progress = False
            left = []
            for e, rel in pending:
                unknown = [t for t, (k, i, _) in enumerate(rel) if i not in labels[k]]
                if len(unknown) != 1:
                    left.append((e, rel))
                    continue
                pos = unknown[0]
                kind, idx, sign = rel[pos]
                # A u^sign B = 1  =>  u^sign = A^-1 B^-1
                before = _substitute(rel[:pos], labels)
                after = _substitute(rel[pos + 1:], labels)
                w = words.mul(words.inverse(before), words.inverse(after))
                if sign < 0:
                    w = words.inverse(w)
                labels[kind][idx] = w
                steps.append((kind, idx, w, e))
                used.add(e)
                progress = True
            pending = left
        if nsym == 2:
            break
        fresh = None
        for e, rel in pending:
            unknown = {(k, i) for k, i, _ in rel if i not in labels[k]}
            if len(unknown) == 2:
                x, y = e
                prefs = [("h", y % m), ("g", y // m), ("h", x % m), ("g", x // m)]
                fresh = next(u for u in prefs if u in unknown)
                break
        if fresh is None:
            break
        nsym += 1
        kind, idx = fresh
        labels[kind][idx] = (nsym,)
        steps.append((kind, idx, (nsym,), "symbol"))

    relators = []
    keys = set()
    for e in order:
        if e in used:
            continue
        rel = _relation(e[0], e[1], m)
        if all(i in labels[k] for k, i, _ in rel):
            w = words.cyclic_reduce(_substitute(rel, labels))
            if w:
                key = words.conjugacy_key(w)
                if key not in keys:
                    keys.add(key)
                    relators.append(w)

    # back to the coordinates of rect
    row_of = {lab.rows[r]: r for r in range(n)}
    col_of = {lab.cols[c]: c for c in range(m)}

    def cell_back(x):
        return row_of[x // m] * m + col_of[x % m]

    back_steps = []
    for kind, idx, w, via in steps:
        orig = row_of[idx] if kind == "g" else col_of[idx]
        if isinstance(via, tuple):
            a, b = cell_back(via[0]), cell_back(via[1])
            via = (min(a, b), max(a, b))
        back_steps.append((kind, orig, w, via))
    return CoreLabels(
        n, m,
        {row_of[i]: w for i, w in labels["g"].items()},
        {col_of[j]: w for j, w in labels["h"].items()},
        back_steps,
        relators,
    )


def classify(cl: CoreLabels) -> Optional[tuple[str, str]]:
    """(kind, detail) if the labels show a cyclic or solvable BS core, else None."""
    if cl.covers() is None:
        return None
    syms = cl.symbols
    if len(syms) <= 1:
        return "cyclic", "all labels are powers of one symbol"
    for w in cl.relators:
        if len(words.symbols(w)) == 1:
            return "cyclic", f"relator {words.format_word(w)} makes a symbol torsion"
        once = [s for s, c in words.occurrences(w).items() if c == 1]
        if once:
            return "cyclic", f"relator {words.format_word(w)} eliminates symbol {once[0]}"
    if len(cl.relators) == 1:
        shape = words.solvable_bs_shape(cl.relators[0])
        if shape is not None:
            return "bs", shape
    return None
