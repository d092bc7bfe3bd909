"""Independent re-checking of prune certificates.

Nothing here calls the rule implementations.  Each certificate is replayed
against the rectangle from first principles: closure steps are re-derived,
exponent systems are rebuilt and the claimed combination is evaluated with
``Fraction``, matching sequences are walked, embeddings are checked edge by
edge and word labels are re-multiplied.  Only the pattern library's data
(which partial rectangles are in it) is shared with the pruner.

``validate(rect, verdict)`` returns a list of problems; empty means valid.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..core import PartialRectangle, transpose
from .patterns import BY_NAME


class _Bad(Exception):
    pass


def _need(cond, msg):
    if not cond:
        raise _Bad(msg)


def _partner(rect, r, c):
    """1-based partner of (r, c) or None."""
    _need(1 <= r <= rect.n and 1 <= c <= rect.m, f"position ({r},{c}) out of range")
    y = rect.match[(r - 1) * rect.m + (c - 1)]
    return None if y < 0 else (y // rect.m + 1, y % rect.m + 1)


def _is_edge(rect, p, q):
    return tuple(q) == _partner(rect, *p)


def _check_edge(rect, e):
    p, q = e
    _need(_is_edge(rect, p, q), f"{p}-{q} is not an edge")
    return tuple(p), tuple(q)


# -- structural -----------------------------------------------------------


def _structural(rect, cert):
    if cert["kind"] == "same-line":
        p, q = _check_edge(rect, cert["edge"])
        _need(p[0] == q[0] or p[1] == q[1], "edge is not inside one row or column")
        return
    _need(cert["kind"] == "sub-rectangle", "unknown structural kind")
    R, C = set(cert["rows"]), set(cert["cols"])
    _need(R and C, "empty sub-rectangle")
    _need(len(R) < rect.n or len(C) < rect.m, "sub-rectangle is the whole frame")
    for r, c in product(R, C):
        q = _partner(rect, r, c)
        _need(q is not None, f"({r},{c}) unmatched")
        _need(q[0] in R and q[1] in C, f"({r},{c}) matched outside")


# -- closures -------------------------------------------------------------


def _replay_closure(rect, cert):
    p, q = _check_edge(rect, cert["seed"])
    A, B = {p[0], q[0]}, {p[1], q[1]}
    for st in cert["steps"]:
        a, b = _check_edge(rect, st["edge"])
        _need(a[0] in A and a[1] in B, "step edge does not start inside the closure")
        _need((b[0] in A) != (b[1] in B), "step edge does not have exactly one coordinate inside")
        kind, idx = st["add"]
        if kind == "row":
            _need(b[0] not in A and idx == b[0], "wrong row added")
            A.add(idx)
        else:
            _need(kind == "col" and b[1] not in B and idx == b[1], "wrong column added")
            B.add(idx)
    _need(A == set(cert["rows"]) and B == set(cert["cols"]), "closure sets differ from the replay")
    return (p, q), A, B


def _closure(rect, cert):
    _, A, B = _replay_closure(rect, cert)
    _need(len(A) == rect.n or len(B) == rect.m, "closure spans neither all rows nor all columns")


def _equations(rect, seed, A, B):
    (p, q) = seed
    names = [f"g{i}" for i in sorted(A)] + [f"h{j}" for j in sorted(B)]
    col = {v: t for t, v in enumerate(names)}

    def row(*terms):
        out = [0] * len(names)
        for s, v in terms:
            out[col[v]] += s
        return out

    A_rows = [row((1, f"g{p[0]}")), row((1, f"h{p[1]}")), row((1, f"g{q[0]}"))]
    b = [0, 0, 1]
    m = rect.m
    for x, y in enumerate(rect.match):
        if y <= x:
            continue
        i, j = x // m + 1, x % m + 1
        k, l = y // m + 1, y % m + 1
        if i in A and j in B and k in A and l in B:
            A_rows.append(row((1, f"g{i}"), (1, f"h{j}"), (-1, f"g{k}"), (-1, f"h{l}")))
            b.append(0)
    return names, A_rows, b


def _torsion(rect, cert):
    seed, A, B = _replay_closure(rect, cert)
    p, q = seed
    _need(p[0] != q[0] and p[1] != q[1], "seed edge lies in one line")
    names, M, b = _equations(rect, seed, A, B)
    _need(names == cert["variables"], "variable order differs")
    y = [Fraction(v) for v in cert["combination"]]
    _need(len(y) == len(M), "combination has the wrong length")
    yA = [sum(y[k] * M[k][t] for k in range(len(M))) for t in range(len(names))]
    yb = sum(y[k] * b[k] for k in range(len(M)))
    if cert["kind"] == "torsion":
        if all(v == 0 for v in yA):
            _need(yb != 0, "combination is not contradictory")
        else:
            _need(all(v.denominator == 1 for v in yA), "combination has no integrality conflict")
            _need(yb.denominator != 1, "combination has no integrality conflict")
        return
    _need(cert["kind"] in ("equal-rows", "equal-cols"), "unknown torsion kind")
    u, v = cert["pair"]
    _need(u != v and u[0] == v[0] == ("g" if cert["kind"] == "equal-rows" else "h"), "bad pair")
    d = [Fraction(0)] * len(names)
    d[names.index(u)] += 1
    d[names.index(v)] -= 1
    _need(yA == d, "combination does not isolate the pair difference")
    _need(yb == 0, "pair difference is not forced to zero")


# -- matching sequences ---------------------------------------------------


def _walk(rect, seq):
    _need(len(seq) >= 1, "empty sequence")
    steps = [_check_edge(rect, e) for e in seq]
    for (a, b), (c, _) in zip(steps, steps[1:]):
        _need(c[1] == b[1], "sequence does not continue in the reached column")
        _need(c[0] != b[0], "sequence continues in the reached row")
    return steps


def _periodic(rect, cert):
    steps = _walk(rect, cert["cycle"])
    k, p = len(steps), cert["period"]
    _need(p >= 1 and k % p == 0 and k >= 2 * p, "period does not properly divide the length")
    _need(steps[-1][1][1] == steps[0][0][1], "cycle does not close")
    _need(steps[-1][1][0] != steps[0][0][0], "closing step re-enters the first row")
    cols = [s[0][1] for s in steps]
    _need(len(set(cols)) == k, "cycle columns repeat")
    for t in range(k - p):
        _need(steps[t][0][0] == steps[t + p][0][0], "row pattern is not periodic")
        _need(steps[t][1][0] == steps[t + p][1][0], "row pattern is not periodic")


def _parallel(rect, cert):
    a = _walk(rect, cert["closed"])
    b = _walk(rect, cert["open"])
    _need(len(a) == len(b), "sequences differ in length")
    for s, t in zip(a, b):
        _need(s[0][0] == t[0][0] and s[1][0] == t[1][0], "row patterns differ")
    _need(a[-1][1][1] == a[0][0][1], "closed sequence does not close")
    _need(b[-1][1][1] != b[0][0][1], "open sequence closes")


# -- patterns -------------------------------------------------------------


def _pattern(rect, cert):
    pat = BY_NAME.get(cert["pattern"])
    _need(pat is not None, "unknown pattern")
    prect = pat.rect
    rows, cols = cert["rows"], cert["cols"]
    _need(len(rows) == prect.n and len(cols) == prect.m, "embedding has wrong size")
    _need(len(set(rows)) == len(rows) and len(set(cols)) == len(cols), "embedding is not injective")
    if pat.span == "rows":
        _need(prect.n == rect.n and prect.m <= rect.m, "pattern does not span all rows")
    else:
        _need(prect.m == rect.m and prect.n <= rect.n, "pattern does not span all columns")
    pm = prect.m
    for x, y in enumerate(prect.match):
        if y > x:
            p = (rows[x // pm], cols[x % pm])
            q = (rows[y // pm], cols[y % pm])
            _need(_is_edge(rect, p, q), f"pattern edge maps to non-edge {p}-{q}")


# -- core words -----------------------------------------------------------


def _red(w):
    out = []
    for s in w:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return out


def _inv(w):
    return [-s for s in reversed(w)]


def _cyc(w):
    w = _red(w)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def _classes(w):
    """All rotations of w and of its inverse (w cyclically reduced)."""
    out = set()
    for v in (w, _inv(w)):
        for t in range(max(1, len(v))):
            out.add(tuple(v[t:] + v[:t]))
    return out


def _bs_ok(w):
    """Is w, up to renaming/inverting symbols, rotation and inversion, of the
    form b a^k b^-1 a^-l with |k| = 1 or |l| = 1, or a^2 b^2?"""
    cands = _classes(w)
    for a, b in ((1, 2), (2, 1)):
        for sa, sb in product((1, -1), repeat=2):
            A, B = a * sa, b * sb
            for k in range(-len(w), len(w) + 1):
                for l in range(-len(w), len(w) + 1):
                    if k == 0 or l == 0 or not (abs(k) == 1 or abs(l) == 1):
                        continue
                    t = [B] + ([A] * k if k > 0 else [-A] * -k) + [-B] + ([-A] * l if l > 0 else [A] * -l)
                    if tuple(t) in cands:
                        return True
            if (A, A, B, B) in cands:
                return True
    return False


def _core(rect, cert):
    m = rect.m
    labels = {}
    used = set()
    nsym = 0
    seeds = {"g": 0, "h": 0}
    for st in cert["steps"]:
        gen, w = st["gen"], list(st["word"])
        _need(gen not in labels, f"{gen} labeled twice")
        kind, idx = gen[0], int(gen[1:])
        _need(kind in "gh" and 1 <= idx <= (rect.n if kind == "g" else m), f"bad generator {gen}")
        via = st["via"]
        if via == "seed":
            _need(w == [], "seed label is not the identity")
            seeds[kind] += 1
            _need(seeds[kind] == 1, "more than one seed per side")
            labels[gen] = w
        elif via == "symbol":
            nsym += 1
            _need(w == [nsym] and nsym <= 2, "bad fresh symbol")
            labels[gen] = w
        else:
            p, q = _check_edge(rect, via)
            e = tuple(sorted((p, q)))
            _need(e not in used, "edge used twice")
            used.add(e)
            labels[gen] = w
            rel = _rel_word(p, q, labels)
            _need(rel is not None, "edge relation has an unlabeled generator")
            _need(_red(rel) == [], "label does not satisfy the edge relation")
    _need(seeds["g"] == 1 and seeds["h"] == 1, "missing seed")
    rows = sum(1 for k in labels if k[0] == "g")
    cols = sum(1 for k in labels if k[0] == "h")
    _need(rows == rect.n or cols == m, "labels cover neither all rows nor all columns")

    rels = []
    for x, y in enumerate(rect.match):
        if y <= x:
            continue
        p, q = (x // m + 1, x % m + 1), (y // m + 1, y % m + 1)
        if (p, q) in used:
            continue
        w = _rel_word(p, q, labels)
        if w is not None:
            w = _cyc(w)
            if w and not any(tuple(w) in _classes(r) for r in rels):
                rels.append(w)
    claimed = [list(r) for r in cert["relators"]]
    _need(len(claimed) == len(rels) and all(any(tuple(c) in _classes(r) for r in rels) for c in claimed),
          "residual relators differ")

    syms = {abs(s) for w in labels.values() for s in w}
    if cert["kind"] == "cyclic":
        ok = len(syms) <= 1
        for w in rels:
            counts = {}
            for s in w:
                counts[abs(s)] = counts.get(abs(s), 0) + 1
            ok = ok or len(counts) == 1 or 1 in counts.values()
        _need(ok, "no reason for a cyclic core")
    else:
        _need(cert["kind"] == "bs", "unknown core kind")
        _need(len(rels) == 1 and _bs_ok(rels[0]), "relator is not a solvable Baumslag-Solitar relator")


def _rel_word(p, q, labels):
    keys = [f"g{p[0]}", f"h{p[1]}", f"h{q[1]}", f"g{q[0]}"]
    if any(k not in labels for k in keys):
        return None
    a, b, c, d = (labels[k] for k in keys)
    return _red(a + b + _inv(c) + _inv(d))


CHECKS = {
    "structural": _structural,
    "closure": _closure,
    "cyclic-torsion": _torsion,
    "periodic-cycle": _periodic,
    "parallel-mismatch": _parallel,
    "pattern-library": _pattern,
    "cyclic-or-bs-core": _core,
}


def validate(rect: PartialRectangle, verdict) -> list[str]:
    """Problems with ``verdict``'s certificate for ``rect``; [] if it checks out."""
    if not verdict.pruned:
        return []
    cert = verdict.certificate
    if not isinstance(cert, dict):
        return ["missing certificate"]
    target = transpose(rect) if cert.get("transposed") else rect
    check = CHECKS.get(verdict.rule)
    if check is None:
        return [f"unknown rule {verdict.rule!r}"]
    try:
        check(target, cert)
    except _Bad as e:
        return [str(e)]
    except (KeyError, TypeError, ValueError, IndexError) as e:
        return [f"malformed certificate: {e!r}"]
    return []
