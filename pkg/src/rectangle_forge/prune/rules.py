"""The pruning rules and the pruner that dispatches them.

Every rule maps a partial rectangle to a :class:`PruneVerdict`.  A pruning
verdict carries a JSON-friendly certificate with 1-based positions that
``validate.py`` can re-check without using any of this module's code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .. import kernels
from ..canon import NotAdequate, NotCovered
from ..core import PartialRectangle, find_embedding, transpose
from . import corerule, intlin, words
from .closure import closure_cells, internal_edges
from .patterns import LIBRARY
from .sequences import find_mismatched_parallel, find_periodic_cycle


@dataclass(frozen=True)
class PruneVerdict:
    pruned: bool
    rule: str = ""
    certificate: Optional[dict] = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.pruned


PASS = PruneVerdict(False)


def _pos(x: int, m: int) -> list:
    return [x // m + 1, x % m + 1]


def _edge(x: int, y: int, m: int) -> list:
    return [_pos(x, m), _pos(y, m)]


# -- structural -----------------------------------------------------------


def rule_structural(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    n, m = rect.n, rect.m
    for x, y in rect.edge_cells:
        if x // m == y // m or x % m == y % m:
            return PruneVerdict(True, "structural", {"kind": "same-line", "edge": _edge(x, y, m)})
    sub = kernels.proper_subrectangle(rect.match, n, m)
    if sub is not None:
        rows, cols = sub
        return PruneVerdict(True, "structural", {
            "kind": "sub-rectangle",
            "rows": [r + 1 for r in rows],
            "cols": [c + 1 for c in cols],
        })
    return PASS


# -- closures -------------------------------------------------------------


def _closure_cert(rect, x):
    n, m = rect.n, rect.m
    in_r, in_c, steps, _ = closure_cells(rect.match, n, m, x)
    cert = {
        "seed": _edge(x, rect.match[x], m),
        "steps": [{"edge": _edge(a, b, m), "add": [kind, idx + 1]} for a, b, kind, idx in steps],
        "rows": [i + 1 for i in range(n) if in_r[i]],
        "cols": [j + 1 for j in range(m) if in_c[j]],
    }
    return cert, in_r, in_c


def rule_closure(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    x = kernels.spanning_seed(rect.match, rect.n, rect.m)
    if x < 0:
        return PASS
    cert, in_r, _ = _closure_cert(rect, x)
    cert["spans"] = "rows" if all(in_r) else "cols"
    return PruneVerdict(True, "closure", cert)


def exponent_system(rect: PartialRectangle, x: int):
    """Variables, matrix and right-hand side of the exponent system of x's closure.

    Rows: g_{seed row} = 0, h_{seed col} = 0, g_{partner row} = 1, then one
    equation g_i + h_j - g_i' - h_j' = 0 per internal edge in cell order.
    """
    n, m = rect.n, rect.m
    in_r, in_c, _, _ = closure_cells(rect.match, n, m, x)
    names = [("g", i) for i in range(n) if in_r[i]] + [("h", j) for j in range(m) if in_c[j]]
    col = {v: t for t, v in enumerate(names)}
    y = rect.match[x]
    A, b, src = [], [], []

    def unit(v):
        row = [0] * len(names)
        row[col[v]] = 1
        return row

    A += [unit(("g", x // m)), unit(("h", x % m)), unit(("g", y // m))]
    b += [0, 0, 1]
    src += ["seed-row", "seed-col", "partner-row"]
    for a, c in internal_edges(rect.match, m, in_r, in_c):
        row = [0] * len(names)
        row[col[("g", a // m)]] += 1
        row[col[("h", a % m)]] += 1
        row[col[("g", c // m)]] -= 1
        row[col[("h", c % m)]] -= 1
        A.append(row)
        b.append(0)
        src.append(_edge(a, c, m))
    return names, A, b, src


def rule_cyclic_torsion(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    # same-line edges are the structural rule's business and are skipped
    found = kernels.conflict_seed(rect.match, rect.n, rect.m)
    if found is not None:
        x, conflict = found
        cert, _, _ = _closure_cert(rect, x)
        names, A, b, _ = exponent_system(rect, x)
        sol = intlin.solve(A, b)
        cert["variables"] = [f"{k}{i + 1}" for k, i in names]
        if not sol.feasible:
            cert["kind"] = "torsion"
            cert["combination"] = [str(v) for v in sol.certificate]
            return PruneVerdict(True, "cyclic-torsion", cert)
        kind, (u, v) = conflict
        if kind == "torsion":
            raise AssertionError("exponent propagation and exact solver disagree")
        letter = "g" if kind == "equal-rows" else "h"
        d = [0] * len(names)
        d[names.index((letter, u))] = 1
        d[names.index((letter, v))] = -1
        forced = sol.forced_value(d)
        if forced is None or forced[0] != 0:
            raise AssertionError("exponent propagation and exact solver disagree")
        cert["kind"] = kind
        cert["pair"] = [f"{letter}{u + 1}", f"{letter}{v + 1}"]
        cert["combination"] = [str(Fraction(t)) for t in forced[1]]
        return PruneVerdict(True, "cyclic-torsion", cert)
    return PASS


# -- matching sequences ---------------------------------------------------


def rule_periodic_cycle(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    found = find_periodic_cycle(rect.match, rect.n, rect.m, through=new_edge)
    if found is None:
        return PASS
    steps, p = found
    return PruneVerdict(True, "periodic-cycle", {
        "cycle": [[[i + 1, j + 1], [k + 1, l + 1]] for (i, j), (k, l) in steps],
        "period": p,
    })


def rule_parallel_mismatch(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    found = find_mismatched_parallel(rect.match, rect.n, rect.m)
    if found is None:
        return PASS
    closed, opened = found

    def fmt(seq):
        return [[[i + 1, j + 1], [k + 1, l + 1]] for (i, j), (k, l) in seq]

    return PruneVerdict(True, "parallel-mismatch", {"closed": fmt(closed), "open": fmt(opened)})


# -- patterns -------------------------------------------------------------


def rule_pattern_library(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    for pat in LIBRARY:
        if not pat.applies_to(rect.n, rect.m):
            continue
        emb = find_embedding(rect, pat.rect, new_edge)
        if emb is not None:
            rows, cols = emb
            return PruneVerdict(True, "pattern-library", {
                "pattern": pat.name,
                "rows": [r + 1 for r in rows],
                "cols": [c + 1 for c in cols],
            })
    return PASS


# -- core subgroup words --------------------------------------------------


def rule_cyclic_or_bs_core(rect: PartialRectangle, new_edge=None) -> PruneVerdict:
    """Raises NotAdequate for rectangles no seed trace covers, NotCovered
    for complete ones with a proper matched sub-rectangle."""
    if rect.num_edges == 0:
        raise NotAdequate("edgeless rectangle")
    cl = corerule.propagate(rect)
    found = corerule.classify(cl)
    if found is None and rect.is_complete:
        # any (i,j)-core will do; on leaves trying them all is cheap
        for seed, y in enumerate(rect.match):
            if y < 0:
                continue
            other = corerule.propagate(rect, seed)
            if other is None:
                continue
            found = corerule.classify(other)
            if found is not None:
                cl = other
                break
    if found is None:
        return PASS
    kind, detail = found
    m = rect.m
    steps = []
    for gen, idx, w, via in cl.steps:
        if isinstance(via, tuple):
            via = _edge(via[0], via[1], m)
        steps.append({"gen": f"{gen}{idx + 1}", "word": list(w), "via": via})
    return PruneVerdict(True, "cyclic-or-bs-core", {
        "kind": kind,
        "detail": detail,
        "covers": cl.covers(),
        "steps": steps,
        "relators": [list(w) for w in cl.relators],
        "labels": {
            "rows": {str(i + 1): words.format_word(w) for i, w in sorted(cl.rows.items())},
            "cols": {str(j + 1): words.format_word(w) for j, w in sorted(cl.cols.items())},
        },
    })


# -- registry and dispatch ------------------------------------------------

RULES: dict[str, Callable[[PartialRectangle], PruneVerdict]] = {
    "structural": rule_structural,
    "closure": rule_closure,
    "cyclic-torsion": rule_cyclic_torsion,
    "periodic-cycle": rule_periodic_cycle,
    "parallel-mismatch": rule_parallel_mismatch,
    "pattern-library": rule_pattern_library,
    "cyclic-or-bs-core": rule_cyclic_or_bs_core,
}
RULE_NAMES = tuple(RULES)

# rules whose verdict on the transpose is the same by construction
TRANSPOSE_SYMMETRIC = frozenset({"structural", "closure", "cyclic-torsion"})


def parse_rules(spec: str) -> tuple:
    """``"all"``, ``"none"`` or a comma list of rule names, in registry order."""
    spec = spec.strip()
    if spec == "all":
        return RULE_NAMES
    if spec in ("", "none"):
        return ()
    names = [s.strip() for s in spec.split(",") if s.strip()]
    unknown = [s for s in names if s not in RULES]
    if unknown:
        raise ValueError(f"unknown rule(s): {', '.join(unknown)}; known: {', '.join(RULE_NAMES)}")
    return tuple(r for r in RULE_NAMES if r in names)


def _apply(name: str, rect: PartialRectangle, new_edge) -> PruneVerdict:
    try:
        return RULES[name](rect, new_edge)
    except (NotAdequate, NotCovered):
        # the core rule needs a canonical form; without one it has nothing to say
        return PASS


def run_pruner(rect: PartialRectangle, rules: Iterable[str] = RULE_NAMES, new_edge=None) -> PruneVerdict:
    """First pruning verdict of the given rules on rect, then on its transpose.

    ``new_edge`` (two cells) may be given when rect minus that edge is known
    to pass the same rules.  Containment rules then only look for witnesses
    through the new edge, since any other witness would have pruned the
    smaller rectangle already.  The verdict is the same either way.
    """
    t = t_edge = None
    for name in rules:
        v = _apply(name, rect, new_edge)
        if v.pruned:
            return v
        if name in TRANSPOSE_SYMMETRIC:
            continue
        if t is None:
            t = transpose(rect)
            if new_edge is not None:
                n = rect.n
                t_edge = tuple((x % rect.m) * n + x // rect.m for x in new_edge)
        v = _apply(name, t, t_edge)
        if v.pruned:
            return PruneVerdict(True, name, dict(v.certificate, transposed=True))
    return PASS


class Pruner:
    """Picklable callable applying a fixed, ordered rule set."""

    def __init__(self, rules: Iterable[str] = RULE_NAMES):
        rules = tuple(rules)
        bad = [r for r in rules if r not in RULES]
        if bad:
            raise ValueError(f"unknown rule(s): {bad}")
        self.rules = tuple(r for r in RULE_NAMES if r in rules)

    @classmethod
    def from_spec(cls, spec: str) -> "Pruner":
        return cls(parse_rules(spec))

    def __call__(self, rect: PartialRectangle, new_edge=None) -> PruneVerdict:
        return run_pruner(rect, self.rules, new_edge)

    def __repr__(self) -> str:
        return f"Pruner({list(self.rules)})"
