"""Pure-Python kernels for seed traces and canonical scans.

Mirrors ``_ckernels.pyx`` function for function; ``kernels.py`` picks one at
import time.  All functions take the flat ``match`` array (partner cell or
-1) and the dimensions.
"""

OK = 0
UNMATCHED = 1
STARVED = 2


def _need(match, n, m):
    rows = [False] * n
    cols = [False] * m
    for x, y in enumerate(match):
        if y >= 0:
            rows[x // m] = True
            cols[x % m] = True
    return sum(rows), sum(cols)


def trace(match, n, m, seed, need=None):
    """Run the FIFO trace from ``seed``.

    Returns (status, Lr, Lc, queue).  The trace stops successfully once every
    row and column carrying a matched cell has been listed; it fails when an
    unmatched cell reaches the front of the queue first (UNMATCHED) or the
    queue runs dry (STARVED).  ``queue`` holds every cell ever enqueued.
    """
    if need is None:
        need = _need(match, n, m)
    need_r, need_c = need
    if match[seed] < 0:
        return UNMATCHED, [], [], []
    r0, c0 = divmod(seed, m)
    in_r = [False] * n
    in_c = [False] * m
    in_r[r0] = in_c[c0] = True
    Lr = [r0]
    Lc = [c0]
    queue = [seed]
    head = 0
    while len(Lr) < need_r or len(Lc) < need_c:
        if head == len(queue):
            return STARVED, Lr, Lc, queue
        p = queue[head]
        head += 1
        q = match[p]
        if q < 0:
            return UNMATCHED, Lr, Lc, queue
        k, l = divmod(q, m)
        if not in_r[k]:
            in_r[k] = True
            Lr.append(k)
            base = k * m
            queue.extend(base + c for c in Lc)
        if not in_c[l]:
            in_c[l] = True
            Lc.append(l)
            queue.extend(r * m + l for r in Lr)
    return OK, Lr, Lc, queue


def _complete(order, size):
    seen = set(order)
    return order + [x for x in range(size) if x not in seen]


def _relabel_key(match, n, m, row_order, col_order):
    """Row-major partner sequence of the relabeled rectangle; unmatched -> n*m."""
    big = n * m
    inv_r = [0] * n
    inv_c = [0] * m
    for t, r in enumerate(row_order):
        inv_r[r] = t
    for t, c in enumerate(col_order):
        inv_c[c] = t
    out = []
    for r in row_order:
        base = r * m
        for c in col_order:
            y = match[base + c]
            if y < 0:
                out.append(big)
            else:
                k, l = divmod(y, m)
                out.append(inv_r[k] * m + inv_c[l])
    return out


def scan(match, n, m):
    """Minimum relabeling over all seeds whose trace succeeds.

    Returns (form, minima, starved): ``form`` is the minimal relabeled match
    tuple (None if no seed succeeds), ``minima`` lists (seed, row_order,
    col_order) for every seed attaining it in row-major seed order, and
    ``starved`` tells whether some matched seed's queue ran dry.
    """
    need = _need(match, n, m)
    best = None
    minima = []
    starved = False
    for seed in range(n * m):
        if match[seed] < 0:
            continue
        status, Lr, Lc, _ = trace(match, n, m, seed, need)
        if status != OK:
            if status == STARVED:
                starved = True
            continue
        ro = _complete(Lr, n)
        co = _complete(Lc, m)
        key = _relabel_key(match, n, m, ro, co)
        if best is None or key < best:
            best = key
            minima = [(seed, ro, co)]
        elif key == best:
            minima.append((seed, ro, co))
    if best is None:
        return None, [], starved
    big = n * m
    form = tuple(-1 if y == big else y for y in best)
    return form, minima, starved


def canonical_edge(form, n, m):
    """Edge of ``form`` whose earliest endpoint enters the (0,0)-trace queue last.

    The queue is continued past the halting point, so both endpoints of every
    edge have a well-defined enqueue index once all listed rows and columns
    are known.
    """
    status, _, _, queue = trace(form, n, m, 0)
    if status != OK:
        raise ValueError("form is not adequate from its first cell")
    index = {}
    for t, x in enumerate(queue):
        index[x] = t
    best = None
    best_key = -1
    for x, y in enumerate(form):
        if y > x:
            key = min(index[x], index[y])
            if key > best_key:
                best_key = key
                best = (x, y)
    return best


def accept(match, n, m, a, b):
    """Canonical form of ``match`` if edge {a, b} lies in the orbit of its canonical edge."""
    form, minima, _ = scan(match, n, m)
    if form is None:
        return None
    u, v = canonical_edge(form, n, m)
    target = {a, b}
    for _, ro, co in minima:
        pu = ro[u // m] * m + co[u % m]
        pv = ro[v // m] * m + co[v % m]
        if {pu, pv} == target:
            return form
    return None


def proper_subrectangle(match, n, m):
    """Rows and columns of a fully matched proper sub-rectangle, or None.

    For each matched seed, grows the smallest row/column set closed under the
    matching; the grid is fully matched within itself when the queue drains
    without meeting an unmatched cell.
    """
    for seed in range(n * m):
        if match[seed] < 0:
            continue
        r0, c0 = divmod(seed, m)
        in_r = [False] * n
        in_c = [False] * m
        in_r[r0] = in_c[c0] = True
        Lr = [r0]
        Lc = [c0]
        queue = [seed]
        head = 0
        ok = True
        while head < len(queue):
            q = match[queue[head]]
            head += 1
            if q < 0:
                ok = False
                break
            k, l = divmod(q, m)
            if not in_r[k]:
                in_r[k] = True
                Lr.append(k)
                queue.extend(k * m + c for c in Lc)
            if not in_c[l]:
                in_c[l] = True
                Lc.append(l)
                queue.extend(r * m + l for r in Lr)
        if ok and (len(Lr) < n or len(Lc) < m):
            return sorted(Lr), sorted(Lc)
    return None


# -- pruning searches -----------------------------------------------------


def closure_cells(match, n, m, seed):
    """0-based closure of ``seed``: (in_rows, in_cols, steps, exps).

    ``exps`` maps ("r", i) / ("c", j) to the exponent of that generator as a
    power of g when ``seed`` is matched (seed row and column 0, partner row 1,
    partner column -1); it is None for an unmatched seed.
    """
    r0, c0 = divmod(seed, m)
    in_r = [False] * n
    in_c = [False] * m
    in_r[r0] = in_c[c0] = True
    steps = []
    partner = match[seed]
    if partner < 0:
        return in_r, in_c, steps, None
    r1, c1 = divmod(partner, m)
    exps = {("r", r0): 0, ("c", c0): 0}
    if not in_r[r1]:
        in_r[r1] = True
        exps[("r", r1)] = 1
    if not in_c[c1]:
        in_c[c1] = True
        # g_{r0} h_{c0} = g_{r1} h_{c1} with g_{r0} = h_{c0} = 1
        exps[("c", c1)] = -exps[("r", r1)]
    edges = [(x, y) for x, y in enumerate(match) if y >= 0]
    changed = True
    while changed:
        changed = False
        for x, y in edges:
            i, j = divmod(x, m)
            if not (in_r[i] and in_c[j]):
                continue
            k, l = divmod(y, m)
            if in_r[k] == in_c[l]:
                continue
            # g_i h_j = g_k h_l with exactly one unknown
            if in_r[k]:
                in_c[l] = True
                exps[("c", l)] = exps[("r", i)] + exps[("c", j)] - exps[("r", k)]
                steps.append((x, y, "col", l))
            else:
                in_r[k] = True
                exps[("r", k)] = exps[("r", i)] + exps[("c", j)] - exps[("c", l)]
                steps.append((x, y, "row", k))
            changed = True
    return in_r, in_c, steps, exps


def internal_edges(match, m, in_r, in_c):
    """Edges with both endpoints inside A x B, smaller cell first."""
    out = []
    for x, y in enumerate(match):
        if y > x:
            i, j = divmod(x, m)
            k, l = divmod(y, m)
            if in_r[i] and in_c[j] and in_r[k] and in_c[l]:
                out.append((x, y))
    return out


def exponent_conflict(match, n, m, seed):
    """("torsion", edge), ("equal-rows", (i, k)), ("equal-cols", (j, l)) or None."""
    in_r, in_c, _, exps = closure_cells(match, n, m, seed)
    if exps is None:
        return None
    for x, y in internal_edges(match, m, in_r, in_c):
        i, j = divmod(x, m)
        k, l = divmod(y, m)
        if exps[("r", i)] + exps[("c", j)] != exps[("r", k)] + exps[("c", l)]:
            return ("torsion", (x, y))
    seen = {}
    for key in sorted(exps):
        kind, idx = key
        other = seen.get((kind, exps[key]))
        if other is not None:
            return ("equal-rows" if kind == "r" else "equal-cols", (other, idx))
        seen[(kind, exps[key])] = idx
    return None


def spanning_seed(match, n, m):
    """Smaller cell of the first edge whose closure spans all rows or all columns, or -1."""
    for x, y in enumerate(match):
        if y > x:
            in_r, in_c, _, _ = closure_cells(match, n, m, x)
            if all(in_r) or all(in_c):
                return x
    return -1


def conflict_seed(match, n, m):
    """(x, conflict) for the first edge not inside one line with an exponent conflict."""
    for x, y in enumerate(match):
        if y > x and x // m != y // m and x % m != y % m:
            found = exponent_conflict(match, n, m, x)
            if found is not None:
                return x, found
    return None


def embed_search(match, n, m, pn, pm, plans, a, b):
    """Backtracking search for a pattern embedding; (rmap, cmap) or None.

    Each plan is a list of pattern edges (x, y) in placement order.  With
    a < 0 there is one plan whose first edge may land on any rect edge;
    otherwise every plan's first edge is tried on the edge {a, b} only.
    Unused pattern rows/columns stay -1 in the returned maps.
    """
    oriented = [(x, y) for x, y in enumerate(match) if y > x]
    oriented += [(y, x) for x, y in oriented]
    rmap = [-1] * pn
    cmap = [-1] * pm
    rused = [False] * n
    cused = [False] * m

    def bind(trail, maps, used, s, t):
        if maps[s] == t:
            return True
        if maps[s] >= 0 or used[t]:
            return False
        maps[s] = t
        used[t] = True
        trail.append((maps, used, s, t))
        return True

    def undo(trail):
        for maps, used, s, t in reversed(trail):
            maps[s] = -1
            used[t] = False

    def place(x, y, u, v, trail):
        return (bind(trail, rmap, rused, x // pm, u // m) and bind(trail, cmap, cused, x % pm, u % m)
                and bind(trail, rmap, rused, y // pm, v // m) and bind(trail, cmap, cused, y % pm, v % m))

    def rec(edges, t):
        if t == len(edges):
            return True
        x, y = edges[t]
        for p, q in ((x, y), (y, x)):
            r, c = rmap[p // pm], cmap[p % pm]
            if r >= 0 and c >= 0:
                u = r * m + c
                v = match[u]
                if v < 0:
                    return False
                trail = []
                if place(p, q, u, v, trail) and rec(edges, t + 1):
                    return True
                undo(trail)
                return False
        for u, v in oriented:
            trail = []
            if place(x, y, u, v, trail) and rec(edges, t + 1):
                return True
            undo(trail)
        return False

    for plan in plans:
        if a < 0:
            if rec(plan, 0):
                return rmap, cmap
            continue
        x, y = plan[0]
        for u, v in ((a, b), (b, a)):
            trail = []
            if place(x, y, u, v, trail) and rec(plan, 1):
                return rmap, cmap
            undo(trail)
    return None


def _partner(match, m, i, j):
    y = match[i * m + j]
    if y < 0:
        return None
    return divmod(y, m)


def periodic_cycle(match, n, m, limit, starts):
    """First closed matching sequence through distinct columns with a proper period.

    ``starts`` are the first cells tried, in order.  Returns (steps, p) with
    0-based ((i, j), (i', j')) steps, or None.
    """

    def extend(prefix, p):
        # deterministic continuation of the periodic pattern
        steps = list(prefix)
        cols = {s[0][1] for s in steps}
        j1 = steps[0][0][1]
        while len(steps) < limit:
            t = len(steps)
            i = steps[t - p][0][0]
            ip = steps[t - p][1][0]
            j = steps[-1][1][1]
            if j in cols:
                return None
            q = _partner(match, m, i, j)
            if q is None or q[0] != ip:
                return None
            steps.append(((i, j), q))
            cols.add(j)
            if q[1] == j1:
                return steps if len(steps) % p == 0 else None
        return None

    def prefixes(path, p):
        if len(path) == p:
            yield path
            return
        (_, _), (ip, jp) = path[-1]
        if any(s[0][1] == jp for s in path):
            return
        for i in range(n):
            if i == ip:
                continue
            q = _partner(match, m, i, jp)
            if q is not None:
                yield from prefixes(path + [((i, jp), q)], p)

    for p in range(1, limit // 2 + 1):
        for s in starts:
            q = divmod(match[s], m)
            for path in prefixes([(divmod(s, m), q)], p):
                if path[-1][1][0] == path[0][0][0]:
                    continue  # the wrap-around step would re-enter row i_1
                steps = extend(path, p)
                if steps is not None and len(steps) >= 2 * p:
                    return steps, p
    return None


def mismatched_parallel(match, n, m, limit):
    """Two parallel matching sequences, one closed and one open; or None.

    Returns (closed_steps, open_steps) with 0-based ((i, j), (i', j')) steps.
    Sequences start in every column at once and are filtered by one shared
    row pattern; the first pattern leaving a closed and an open survivor wins.
    """

    def step(threads, i, ip):
        out = []
        for start, cur, hist in threads:
            q = _partner(match, m, i, cur)
            if q is not None and q[0] == ip:
                out.append((start, q[1], hist + [((i, cur), q)]))
        return out

    def verdict(threads):
        closed = next((t for t in threads if t[1] == t[0]), None)
        if closed is None:
            return None
        opened = next((t for t in threads if t[1] != t[0]), None)
        if opened is None:
            return None
        return closed[2], opened[2]

    def rec(threads, last_row, depth):
        found = verdict(threads)
        if found is not None:
            return found
        if depth == limit:
            return None
        for i in range(n):
            if i == last_row:
                continue
            for ip in range(n):
                nxt = step(threads, i, ip)
                if len(nxt) >= 2:
                    found = rec(nxt, ip, depth + 1)
                    if found is not None:
                        return found
        return None

    for i in range(n):
        for ip in range(n):
            nxt = step([(j, j, []) for j in range(m)], i, ip)
            if len(nxt) >= 2:
                found = rec(nxt, ip, 1)
                if found is not None:
                    return found
    return None
