# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for seed traces and canonical scans.

Same functions and return values as ``_pykernels``; see that module for the
semantics.  Work buffers are sized n*m since each cell enters a queue at most
once.
"""

from libc.stdlib cimport malloc, free

OK = 0
UNMATCHED = 1
STARVED = 2

cdef enum:
    C_OK = 0
    C_UNMATCHED = 1
    C_STARVED = 2


cdef struct Work:
    int n
    int m
    int size
    int need_r
    int need_c
    int nr
    int nc
    int qlen
    int *match
    int *in_r
    int *in_c
    int *Lr
    int *Lc
    int *queue
    int *ro
    int *co
    int *inv_r
    int *inv_c
    int *key
    int *best


cdef Work *_alloc(object match, int n, int m) except NULL:
    cdef int size = n * m
    cdef int x, y
    cdef Work *w = <Work *> malloc(sizeof(Work))
    if w == NULL:
        raise MemoryError()
    w.n = n
    w.m = m
    w.size = size
    w.match = <int *> malloc(size * sizeof(int))
    w.queue = <int *> malloc(size * sizeof(int))
    w.key = <int *> malloc(size * sizeof(int))
    w.best = <int *> malloc(size * sizeof(int))
    w.in_r = <int *> malloc(n * sizeof(int))
    w.Lr = <int *> malloc(n * sizeof(int))
    w.ro = <int *> malloc(n * sizeof(int))
    w.inv_r = <int *> malloc(n * sizeof(int))
    w.in_c = <int *> malloc(m * sizeof(int))
    w.Lc = <int *> malloc(m * sizeof(int))
    w.co = <int *> malloc(m * sizeof(int))
    w.inv_c = <int *> malloc(m * sizeof(int))
    if (w.match == NULL or w.queue == NULL or w.key == NULL or w.best == NULL
            or w.in_r == NULL or w.Lr == NULL or w.ro == NULL or w.inv_r == NULL
            or w.in_c == NULL or w.Lc == NULL or w.co == NULL or w.inv_c == NULL):
        _free(w)
        raise MemoryError()
    for x in range(n):
        w.in_r[x] = 0
    for x in range(m):
        w.in_c[x] = 0
    x = 0
    for y in match:
        w.match[x] = y
        x += 1
    w.need_r = 0
    w.need_c = 0
    for x in range(size):
        if w.match[x] >= 0:
            w.in_r[x // m] = 1
            w.in_c[x % m] = 1
    for x in range(n):
        w.need_r += w.in_r[x]
    for x in range(m):
        w.need_c += w.in_c[x]
    return w


cdef void _free(Work *w) noexcept:
    free(w.match)
    free(w.queue)
    free(w.key)
    free(w.best)
    free(w.in_r)
    free(w.Lr)
    free(w.ro)
    free(w.inv_r)
    free(w.in_c)
    free(w.Lc)
    free(w.co)
    free(w.inv_c)
    free(w)


cdef int _trace(Work *w, int seed) noexcept nogil:
    cdef int n = w.n, m = w.m
    cdef int i, p, q, k, l, head
    for i in range(n):
        w.in_r[i] = 0
    for i in range(m):
        w.in_c[i] = 0
    w.nr = 0
    w.nc = 0
    w.qlen = 0
    if w.match[seed] < 0:
        return C_UNMATCHED
    w.Lr[0] = seed // m
    w.Lc[0] = seed % m
    w.in_r[w.Lr[0]] = 1
    w.in_c[w.Lc[0]] = 1
    w.nr = 1
    w.nc = 1
    w.queue[0] = seed
    w.qlen = 1
    head = 0
    while w.nr < w.need_r or w.nc < w.need_c:
        if head == w.qlen:
            return C_STARVED
        p = w.queue[head]
        head += 1
        q = w.match[p]
        if q < 0:
            return C_UNMATCHED
        k = q // m
        l = q % m
        if not w.in_r[k]:
            w.in_r[k] = 1
            w.Lr[w.nr] = k
            w.nr += 1
            for i in range(w.nc):
                w.queue[w.qlen] = k * m + w.Lc[i]
                w.qlen += 1
        if not w.in_c[l]:
            w.in_c[l] = 1
            w.Lc[w.nc] = l
            w.nc += 1
            for i in range(w.nr):
                w.queue[w.qlen] = w.Lr[i] * m + l
                w.qlen += 1
    return C_OK


cdef void _complete(Work *w) noexcept nogil:
    # in_r / in_c still flag the listed rows and columns after _trace
    cdef int i, t
    t = 0
    for i in range(w.nr):
        w.ro[t] = w.Lr[i]
        t += 1
    for i in range(w.n):
        if not w.in_r[i]:
            w.ro[t] = i
            t += 1
    t = 0
    for i in range(w.nc):
        w.co[t] = w.Lc[i]
        t += 1
    for i in range(w.m):
        if not w.in_c[i]:
            w.co[t] = i
            t += 1
    for i in range(w.n):
        w.inv_r[w.ro[i]] = i
    for i in range(w.m):
        w.inv_c[w.co[i]] = i


cdef int _key_vs_best(Work *w, int have_best) noexcept nogil:
    """Fill w.key with the relabeled sequence; -1/0/1 against w.best.

    Returns 1 as soon as the key is known to exceed best (w.key is then
    partial).  Without a best the full key is built and -1 returned.
    """
    cdef int n = w.n, m = w.m, big = w.size
    cdef int a, b, t, y, v, state
    state = 0 if have_best else -1
    t = 0
    for a in range(n):
        for b in range(m):
            y = w.match[w.ro[a] * m + w.co[b]]
            if y < 0:
                v = big
            else:
                v = w.inv_r[y // m] * m + w.inv_c[y % m]
            w.key[t] = v
            if state == 0:
                if v < w.best[t]:
                    state = -1
                elif v > w.best[t]:
                    return 1
            t += 1
    return state


def trace(match, int n, int m, int seed, need=None):
    cdef Work *w = _alloc(match, n, m)
    cdef int status, i
    try:
        status = _trace(w, seed)
        Lr = [w.Lr[i] for i in range(w.nr)]
        Lc = [w.Lc[i] for i in range(w.nc)]
        queue = [w.queue[i] for i in range(w.qlen)]
        return status, Lr, Lc, queue
    finally:
        _free(w)


cdef object _scan(Work *w):
    cdef int seed, status, c, i, have_best = 0
    cdef int size = w.size
    cdef bint starved = False
    seeds = []
    for seed in range(size):
        if w.match[seed] < 0:
            continue
        status = _trace(w, seed)
        if status != C_OK:
            if status == C_STARVED:
                starved = True
            continue
        _complete(w)
        c = _key_vs_best(w, have_best)
        if c < 0:
            for i in range(size):
                w.best[i] = w.key[i]
            have_best = 1
            seeds = [seed]
        elif c == 0:
            seeds.append(seed)
    if not have_best:
        return None, [], starved
    form = tuple([-1 if w.best[i] == size else w.best[i] for i in range(size)])
    minima = []
    for seed in seeds:
        _trace(w, seed)
        _complete(w)
        minima.append((seed, [w.ro[i] for i in range(w.n)], [w.co[i] for i in range(w.m)]))
    return form, minima, starved


def scan(match, int n, int m):
    cdef Work *w = _alloc(match, n, m)
    try:
        return _scan(w)
    finally:
        _free(w)


cdef object _canonical_edge(Work *w):
    cdef int i, x, y, key, best_key = -1, bx = -1, by = -1
    cdef int *index
    if _trace(w, 0) != C_OK:
        raise ValueError("form is not adequate from its first cell")
    index = <int *> malloc(w.size * sizeof(int))
    if index == NULL:
        raise MemoryError()
    for i in range(w.size):
        index[i] = -1
    for i in range(w.qlen):
        index[w.queue[i]] = i
    for x in range(w.size):
        y = w.match[x]
        if y > x:
            key = index[x] if index[x] < index[y] else index[y]
            if key > best_key:
                best_key = key
                bx = x
                by = y
    free(index)
    return bx, by


def canonical_edge(form, int n, int m):
    cdef Work *w = _alloc(form, n, m)
    try:
        return _canonical_edge(w)
    finally:
        _free(w)


def accept(match, int n, int m, int a, int b):
    cdef int u, v, pu, pv
    form, minima, _ = scan(match, n, m)
    if form is None:
        return None
    u, v = canonical_edge(form, n, m)
    for _, ro, co in minima:
        pu = ro[u // m] * m + co[u % m]
        pv = ro[v // m] * m + co[v % m]
        if (pu == a and pv == b) or (pu == b and pv == a):
            return form
    return None


def proper_subrectangle(match, int n, int m):
    cdef Work *w = _alloc(match, n, m)
    cdef int seed, head, p, q, k, l, i, ok
    try:
        for seed in range(w.size):
            if w.match[seed] < 0:
                continue
            for i in range(n):
                w.in_r[i] = 0
            for i in range(m):
                w.in_c[i] = 0
            w.Lr[0] = seed // m
            w.Lc[0] = seed % m
            w.in_r[w.Lr[0]] = 1
            w.in_c[w.Lc[0]] = 1
            w.nr = 1
            w.nc = 1
            w.queue[0] = seed
            w.qlen = 1
            head = 0
            ok = 1
            while head < w.qlen:
                p = w.queue[head]
                head += 1
                q = w.match[p]
                if q < 0:
                    ok = 0
                    break
                k = q // m
                l = q % m
                if not w.in_r[k]:
                    w.in_r[k] = 1
                    w.Lr[w.nr] = k
                    w.nr += 1
                    for i in range(w.nc):
                        w.queue[w.qlen] = k * m + w.Lc[i]
                        w.qlen += 1
                if not w.in_c[l]:
                    w.in_c[l] = 1
                    w.Lc[w.nc] = l
                    w.nc += 1
                    for i in range(w.nr):
                        w.queue[w.qlen] = w.Lr[i] * m + l
                        w.qlen += 1
            if ok and (w.nr < n or w.nc < m):
                return sorted([w.Lr[i] for i in range(w.nr)]), sorted([w.Lc[i] for i in range(w.nc)])
        return None
    finally:
        _free(w)


# -- pruning searches -----------------------------------------------------


cdef int *_ints(object seq, int size) except NULL:
    cdef int *buf = <int *> malloc((size if size > 0 else 1) * sizeof(int))
    cdef int t = 0
    if buf == NULL:
        raise MemoryError()
    for v in seq:
        buf[t] = v
        t += 1
    return buf


cdef void _closure(int *match, int n, int m, int seed, int *in_r, int *in_c,
                   int *er, int *ec) noexcept nogil:
    # seed must be matched; er/ec hold exponents of the flagged generators
    cdef int i, j, k, l, x, y, changed
    cdef int size = n * m
    for i in range(n):
        in_r[i] = 0
    for j in range(m):
        in_c[j] = 0
    i = seed // m
    j = seed % m
    in_r[i] = 1
    in_c[j] = 1
    er[i] = 0
    ec[j] = 0
    y = match[seed]
    k = y // m
    l = y % m
    if not in_r[k]:
        in_r[k] = 1
        er[k] = 1
    if not in_c[l]:
        in_c[l] = 1
        ec[l] = -er[k]
    changed = 1
    while changed:
        changed = 0
        for x in range(size):
            y = match[x]
            if y < 0:
                continue
            i = x // m
            j = x % m
            if not (in_r[i] and in_c[j]):
                continue
            k = y // m
            l = y % m
            if in_r[k] == in_c[l]:
                continue
            if in_r[k]:
                in_c[l] = 1
                ec[l] = er[i] + ec[j] - er[k]
            else:
                in_r[k] = 1
                er[k] = er[i] + ec[j] - ec[l]
            changed = 1


cdef struct Clo:
    int *match
    int *in_r
    int *in_c
    int *er
    int *ec


cdef int _clo_alloc(Clo *c, object match, int n, int m) except -1:
    c.match = _ints(match, n * m)
    c.in_r = <int *> malloc(n * sizeof(int))
    c.er = <int *> malloc(n * sizeof(int))
    c.in_c = <int *> malloc(m * sizeof(int))
    c.ec = <int *> malloc(m * sizeof(int))
    if c.in_r == NULL or c.er == NULL or c.in_c == NULL or c.ec == NULL:
        _clo_free(c)
        raise MemoryError()
    return 0


cdef void _clo_free(Clo *c) noexcept:
    free(c.match)
    free(c.in_r)
    free(c.er)
    free(c.in_c)
    free(c.ec)


def spanning_seed(match, int n, int m):
    cdef Clo c
    cdef int x, i, all_r, all_c
    _clo_alloc(&c, match, n, m)
    try:
        for x in range(n * m):
            if c.match[x] <= x:
                continue
            _closure(c.match, n, m, x, c.in_r, c.in_c, c.er, c.ec)
            all_r = 1
            for i in range(n):
                all_r &= c.in_r[i]
            all_c = 1
            for i in range(m):
                all_c &= c.in_c[i]
            if all_r or all_c:
                return x
        return -1
    finally:
        _clo_free(&c)


def conflict_seed(match, int n, int m):
    cdef Clo c
    cdef int x, y, z, w, i, j, k, l, a
    _clo_alloc(&c, match, n, m)
    try:
        for x in range(n * m):
            y = c.match[x]
            if y <= x or x // m == y // m or x % m == y % m:
                continue
            _closure(c.match, n, m, x, c.in_r, c.in_c, c.er, c.ec)
            for z in range(n * m):
                w = c.match[z]
                if w <= z:
                    continue
                i = z // m
                j = z % m
                k = w // m
                l = w % m
                if c.in_r[i] and c.in_c[j] and c.in_r[k] and c.in_c[l]:
                    if c.er[i] + c.ec[j] != c.er[k] + c.ec[l]:
                        return x, ("torsion", (z, w))
            # sorted keys put every column before every row
            for j in range(m):
                if not c.in_c[j]:
                    continue
                for a in range(j):
                    if c.in_c[a] and c.ec[a] == c.ec[j]:
                        return x, ("equal-cols", (a, j))
            for i in range(n):
                if not c.in_r[i]:
                    continue
                for a in range(i):
                    if c.in_r[a] and c.er[a] == c.er[i]:
                        return x, ("equal-rows", (a, i))
        return None
    finally:
        _clo_free(&c)


cdef struct Emb:
    int n
    int m
    int pm
    int *match
    int *rmap
    int *cmap
    int *rused
    int *cused
    int *ox
    int *oy
    int no
    int *ex
    int *ey
    int ne
    int *trail
    int top


cdef inline int _bind(Emb *e, int is_col, int s, int t) noexcept nogil:
    cdef int *maps = e.cmap if is_col else e.rmap
    cdef int *used = e.cused if is_col else e.rused
    if maps[s] == t:
        return 1
    if maps[s] >= 0 or used[t]:
        return 0
    maps[s] = t
    used[t] = 1
    e.trail[e.top] = s * 2 + is_col
    e.top += 1
    return 1


cdef inline void _undo(Emb *e, int top) noexcept nogil:
    cdef int s
    while e.top > top:
        e.top -= 1
        s = e.trail[e.top]
        if s & 1:
            e.cused[e.cmap[s >> 1]] = 0
            e.cmap[s >> 1] = -1
        else:
            e.rused[e.rmap[s >> 1]] = 0
            e.rmap[s >> 1] = -1


cdef inline int _place(Emb *e, int x, int y, int u, int v) noexcept nogil:
    cdef int pm = e.pm, m = e.m
    return (_bind(e, 0, x // pm, u // m) and _bind(e, 1, x % pm, u % m)
            and _bind(e, 0, y // pm, v // m) and _bind(e, 1, y % pm, v % m))


cdef int _emb_rec(Emb *e, int t) noexcept nogil:
    cdef int x, y, p, q, r, c, u, v, o, top
    if t == e.ne:
        return 1
    x = e.ex[t]
    y = e.ey[t]
    for o in range(2):
        p = x if o == 0 else y
        q = y if o == 0 else x
        r = e.rmap[p // e.pm]
        c = e.cmap[p % e.pm]
        if r >= 0 and c >= 0:
            u = r * e.m + c
            v = e.match[u]
            if v < 0:
                return 0
            top = e.top
            if _place(e, p, q, u, v) and _emb_rec(e, t + 1):
                return 1
            _undo(e, top)
            return 0
    for o in range(e.no):
        top = e.top
        if _place(e, x, y, e.ox[o], e.oy[o]) and _emb_rec(e, t + 1):
            return 1
        _undo(e, top)
    return 0


def embed_search(match, int n, int m, int pn, int pm, plans, int a, int b):
    cdef Emb e
    cdef int x, t, top, found = 0, longest = 1
    for plan in plans:
        longest = max(longest, len(plan))
    e.n = n
    e.m = m
    e.pm = pm
    e.match = _ints(match, n * m)
    e.rmap = <int *> malloc(pn * sizeof(int))
    e.cmap = <int *> malloc(pm * sizeof(int))
    e.rused = <int *> malloc(n * sizeof(int))
    e.cused = <int *> malloc(m * sizeof(int))
    e.ox = <int *> malloc(n * m * sizeof(int))
    e.oy = <int *> malloc(n * m * sizeof(int))
    e.ex = <int *> malloc(longest * sizeof(int))
    e.ey = <int *> malloc(longest * sizeof(int))
    e.trail = <int *> malloc((4 * longest + 4) * sizeof(int))
    e.top = 0
    try:
        if (e.rmap == NULL or e.cmap == NULL or e.rused == NULL or e.cused == NULL or e.ox == NULL
                or e.oy == NULL or e.ex == NULL or e.ey == NULL or e.trail == NULL):
            raise MemoryError()
        for x in range(pn):
            e.rmap[x] = -1
        for x in range(pm):
            e.cmap[x] = -1
        for x in range(n):
            e.rused[x] = 0
        for x in range(m):
            e.cused[x] = 0
        e.no = 0
        for x in range(n * m):
            if e.match[x] > x:
                e.ox[e.no] = x
                e.oy[e.no] = e.match[x]
                e.no += 1
        t = e.no
        for x in range(t):
            e.ox[e.no] = e.oy[x]
            e.oy[e.no] = e.ox[x]
            e.no += 1
        for plan in plans:
            e.ne = 0
            for x, y in plan:
                e.ex[e.ne] = x
                e.ey[e.ne] = y
                e.ne += 1
            if a < 0:
                if _emb_rec(&e, 0):
                    found = 1
                    break
                continue
            for t in range(2):
                top = e.top
                if _place(&e, e.ex[0], e.ey[0], a if t == 0 else b, b if t == 0 else a) and _emb_rec(&e, 1):
                    found = 1
                    break
                _undo(&e, top)
            if found:
                break
        if not found:
            return None
        return [e.rmap[x] for x in range(pn)], [e.cmap[x] for x in range(pm)]
    finally:
        free(e.match)
        free(e.rmap)
        free(e.cmap)
        free(e.rused)
        free(e.cused)
        free(e.ox)
        free(e.oy)
        free(e.ex)
        free(e.ey)
        free(e.trail)


cdef struct Seq:
    int n
    int m
    int limit
    int *match
    int *si
    int *sj
    int *qi
    int *qj
    int len


cdef int _extend(Seq *s, int p) noexcept nogil:
    # continue the periodic pattern after a prefix of length p; 1 if it closes
    cdef int t, i, ip, j, q, u
    s.len = p
    while s.len < s.limit:
        t = s.len
        i = s.si[t - p]
        ip = s.qi[t - p]
        j = s.qj[t - 1]
        for u in range(t):
            if s.sj[u] == j:
                return 0
        q = s.match[i * s.m + j]
        if q < 0 or q // s.m != ip:
            return 0
        s.si[t] = i
        s.sj[t] = j
        s.qi[t] = ip
        s.qj[t] = q % s.m
        s.len += 1
        if s.qj[t] == s.sj[0]:
            return s.len % p == 0
    return 0


cdef int _prefixes(Seq *s, int depth, int p) noexcept nogil:
    cdef int i, ip, jp, q, u
    if depth == p:
        if s.qi[p - 1] == s.si[0]:
            return 0  # the wrap-around step would re-enter row i_1
        if _extend(s, p) and s.len >= 2 * p:
            return 1
        return 0
    ip = s.qi[depth - 1]
    jp = s.qj[depth - 1]
    for u in range(depth):
        if s.sj[u] == jp:
            return 0
    for i in range(s.n):
        if i == ip:
            continue
        q = s.match[i * s.m + jp]
        if q < 0:
            continue
        s.si[depth] = i
        s.sj[depth] = jp
        s.qi[depth] = q // s.m
        s.qj[depth] = q % s.m
        if _prefixes(s, depth + 1, p):
            return 1
    return 0


def periodic_cycle(match, int n, int m, int limit, starts):
    cdef Seq s
    cdef int p, x, y, t
    cdef list st = list(starts)
    s.n = n
    s.m = m
    s.limit = limit
    s.match = _ints(match, n * m)
    s.si = <int *> malloc((limit + 1) * sizeof(int))
    s.sj = <int *> malloc((limit + 1) * sizeof(int))
    s.qi = <int *> malloc((limit + 1) * sizeof(int))
    s.qj = <int *> malloc((limit + 1) * sizeof(int))
    try:
        if s.si == NULL or s.sj == NULL or s.qi == NULL or s.qj == NULL:
            raise MemoryError()
        for p in range(1, limit // 2 + 1):
            for x in st:
                y = s.match[x]
                s.si[0] = x // m
                s.sj[0] = x % m
                s.qi[0] = y // m
                s.qj[0] = y % m
                if _prefixes(&s, 1, p):
                    steps = [((s.si[t], s.sj[t]), (s.qi[t], s.qj[t])) for t in range(s.len)]
                    return steps, p
        return None
    finally:
        free(s.match)
        free(s.si)
        free(s.sj)
        free(s.qi)
        free(s.qj)


cdef struct Par:
    int n
    int m
    int limit
    int *match
    int *start   # (limit + 1) x m thread starts per level
    int *cur
    int *cnt
    int *pi      # row pattern, one pair per step
    int *pip
    int closed
    int opened
    int level


cdef int _par_step(Par *s, int lev, int i, int ip) noexcept nogil:
    # threads of level lev + 1 after step (i -> ip); returns their count
    cdef int t, c, q, k = 0, m = s.m
    cdef int *st0 = s.start + lev * m
    cdef int *cu0 = s.cur + lev * m
    cdef int *st1 = s.start + (lev + 1) * m
    cdef int *cu1 = s.cur + (lev + 1) * m
    for t in range(s.cnt[lev]):
        c = cu0[t]
        q = s.match[i * m + c]
        if q >= 0 and q // m == ip:
            st1[k] = st0[t]
            cu1[k] = q % m
            k += 1
    s.cnt[lev + 1] = k
    return k


cdef int _par_rec(Par *s, int lev, int last_row) noexcept nogil:
    cdef int t, i, ip, m = s.m
    s.closed = -1
    s.opened = -1
    for t in range(s.cnt[lev]):
        if s.start[lev * m + t] == s.cur[lev * m + t]:
            if s.closed < 0:
                s.closed = t
        elif s.opened < 0:
            s.opened = t
    if s.closed >= 0 and s.opened >= 0:
        s.level = lev
        return 1
    if lev == s.limit:
        return 0
    for i in range(s.n):
        if i == last_row:
            continue
        for ip in range(s.n):
            if _par_step(s, lev, i, ip) >= 2:
                s.pi[lev] = i
                s.pip[lev] = ip
                if _par_rec(s, lev + 1, ip):
                    return 1
    return 0


cdef list _par_hist(Par *s, int j):
    cdef int t, q
    cdef list out = []
    for t in range(s.level):
        q = s.match[s.pi[t] * s.m + j]
        out.append(((s.pi[t], j), (q // s.m, q % s.m)))
        j = q % s.m
    return out


def mismatched_parallel(match, int n, int m, int limit):
    cdef Par s
    cdef int i, ip, j
    s.n = n
    s.m = m
    s.limit = limit
    s.match = _ints(match, n * m)
    s.start = <int *> malloc((limit + 1) * m * sizeof(int))
    s.cur = <int *> malloc((limit + 1) * m * sizeof(int))
    s.cnt = <int *> malloc((limit + 1) * sizeof(int))
    s.pi = <int *> malloc((limit + 1) * sizeof(int))
    s.pip = <int *> malloc((limit + 1) * sizeof(int))
    try:
        if s.start == NULL or s.cur == NULL or s.cnt == NULL or s.pi == NULL or s.pip == NULL:
            raise MemoryError()
        for j in range(m):
            s.start[j] = j
            s.cur[j] = j
        s.cnt[0] = m
        for i in range(n):
            for ip in range(n):
                if _par_step(&s, 0, i, ip) >= 2:
                    s.pi[0] = i
                    s.pip[0] = ip
                    if _par_rec(&s, 1, ip):
                        return (_par_hist(&s, s.start[s.level * m + s.closed]),
                                _par_hist(&s, s.start[s.level * m + s.opened]))
        return None
    finally:
        free(s.match)
        free(s.start)
        free(s.cur)
        free(s.cnt)
        free(s.pi)
        free(s.pip)
