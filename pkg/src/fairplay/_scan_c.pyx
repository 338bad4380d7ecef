# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: same three entry points and semantics as
``_scan_py``, with the odometer walk and per-leaf statistics in C.

Each day's subsets arrive pre-materialized; the walk advances the last day
fastest and keeps games-per-player plus its histogram incrementally, so a
leaf costs O(subset size) plus the statistic."""

from libc.stdlib cimport calloc, free

NAME = "compiled"

_NO_LEAVES = -1


cdef struct Days:
    int m
    int* size      # subsets per day
    int* take      # players per subset
    int** flat     # day -> size*take player indices
    int* ci        # odometer digits


cdef int _days_init(Days* d, object combos) except -1:
    cdef int m = len(combos)
    cdef int k, s, t, j
    d.m = m
    d.size = <int*> calloc(m if m else 1, sizeof(int))
    d.take = <int*> calloc(m if m else 1, sizeof(int))
    d.flat = <int**> calloc(m if m else 1, sizeof(int*))
    d.ci = <int*> calloc(m if m else 1, sizeof(int))
    if not (d.size and d.take and d.flat and d.ci):
        raise MemoryError()
    for k in range(m):
        day = combos[k]
        s = len(day)
        t = len(day[0]) if s else 0
        d.size[k] = s
        d.take[k] = t
        d.flat[k] = <int*> calloc(s * t if s * t else 1, sizeof(int))
        if not d.flat[k]:
            raise MemoryError()
        for j in range(s):
            combo = day[j]
            for i in range(t):
                d.flat[k][j * t + i] = combo[i]
    return 0


cdef void _days_free(Days* d):
    cdef int k
    if d.flat:
        for k in range(d.m):
            if d.flat[k]:
                free(d.flat[k])
        free(d.flat)
    if d.size:
        free(d.size)
    if d.take:
        free(d.take)
    if d.ci:
        free(d.ci)


cdef inline void _apply(Days* d, int k, int* games, int* cnt, int sign):
    cdef int t = d.take[k]
    cdef int* row = d.flat[k] + d.ci[k] * t
    cdef int i, p
    if cnt != NULL:
        for i in range(t):
            p = row[i]
            cnt[games[p]] -= 1
            games[p] += sign
            cnt[games[p]] += 1
    else:
        for i in range(t):
            games[row[i]] += sign


cdef inline int _advance(Days* d, int* games, int* cnt):
    """Move the odometer one leaf forward; 0 when the walk has wrapped."""
    cdef int k = d.m - 1
    while k >= 0:
        _apply(d, k, games, cnt, -1)
        d.ci[k] += 1
        if d.ci[k] == d.size[k]:
            d.ci[k] = 0
            _apply(d, k, games, cnt, 1)
            k -= 1
        else:
            _apply(d, k, games, cnt, 1)
            return 1
    return 0


def scan_fair(combos, int n, long long budget):
    """See _scan_py.scan_fair."""
    cdef int m = len(combos)
    if m == 0:
        return 0, True, None, None, _NO_LEAVES
    for day in combos:
        if not day:
            return 0, True, None, None, _NO_LEAVES

    cdef Days d
    _days_init(&d, combos)
    cdef int* games = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* cnt = <int*> calloc(m + 2, sizeof(int))
    cdef int* best = <int*> calloc(m, sizeof(int))
    cdef int* best_ci = <int*> calloc(m, sizeof(int))
    cdef long long scanned = 0, best_index = -1
    cdef bint truncated = 0, have_best = 0
    cdef int k, t, cur, g
    try:
        if not (games and cnt and best and best_ci):
            raise MemoryError()
        cnt[0] = n
        for k in range(m):
            best[k] = -1
        for k in range(m):
            _apply(&d, k, games, cnt, 1)
        while True:
            if scanned >= budget:
                truncated = 1
                break
            scanned += 1
            cur = n - cnt[0]
            t = 0
            while t < m and cur == best[t]:
                t += 1
                if t < m:
                    cur -= cnt[t]
            if t < m and cur > best[t]:
                g = n - cnt[0]
                for k in range(m):
                    best[k] = g
                    g -= cnt[k + 1]
                for k in range(m):
                    best_ci[k] = d.ci[k]
                best_index = scanned - 1
                have_best = 1
            if not _advance(&d, games, cnt):
                break
        best_g = tuple(best[k] for k in range(m)) if have_best else None
        best_choice = tuple(best_ci[k] for k in range(m)) if have_best else None
        return scanned, not truncated, best_g, best_choice, best_index
    finally:
        free(games)
        free(cnt)
        free(best)
        free(best_ci)
        _days_free(&d)


cdef int _prep_order(int n, object avail, int** order_out, int** starts_out,
                     int* nblocks_out) except -1:
    order_py = sorted(range(n), key=lambda i: (-avail[i], i))
    starts_py = []
    for pos in range(n):
        if pos == 0 or avail[order_py[pos]] != avail[order_py[pos - 1]]:
            starts_py.append(pos)
    starts_py.append(n)
    cdef int* order = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* starts = <int*> calloc(len(starts_py), sizeof(int))
    if not (order and starts):
        raise MemoryError()
    cdef int i
    for i in range(n):
        order[i] = order_py[i]
    for i in range(len(starts_py)):
        starts[i] = starts_py[i]
    order_out[0] = order
    starts_out[0] = starts
    nblocks_out[0] = len(starts_py) - 1
    return 0


cdef inline bint _is_ef(int* games, int* order, int* starts, int nblocks):
    cdef int b, q, g
    cdef int min_higher = -1  # -1: no higher block yet
    for b in range(nblocks):
        if min_higher >= 0:
            for q in range(starts[b], starts[b + 1]):
                if games[order[q]] > min_higher:
                    return 0
        for q in range(starts[b], starts[b + 1]):
            g = games[order[q]]
            if min_higher < 0 or g < min_higher:
                min_higher = g
    return 1


cdef inline long long _count_pairs(int* games, int* order, int* starts,
                                   int nblocks, long long cap):
    cdef long long count = 0
    cdef int b_hi, p, q, gp
    for b_hi in range(nblocks - 1):
        for p in range(starts[b_hi], starts[b_hi + 1]):
            gp = games[order[p]]
            for q in range(starts[b_hi + 1], starts[nblocks]):
                if gp < games[order[q]]:
                    count += 1
                    if count >= cap:
                        return count
    return count


def scan_first_ef(combos, int n, avail, long long budget):
    """See _scan_py.scan_first_ef."""
    cdef int m = len(combos)
    if m == 0:
        return 0, True, None, _NO_LEAVES
    for day in combos:
        if not day:
            return 0, True, None, _NO_LEAVES

    cdef Days d
    _days_init(&d, combos)
    cdef int* games = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* order = NULL
    cdef int* starts = NULL
    cdef int nblocks = 0
    cdef long long scanned = 0, found_index = -1
    cdef bint truncated = 0
    cdef int k
    found = None
    try:
        if not games:
            raise MemoryError()
        _prep_order(n, avail, &order, &starts, &nblocks)
        for k in range(m):
            _apply(&d, k, games, NULL, 1)
        while True:
            if scanned >= budget:
                truncated = 1
                break
            scanned += 1
            if _is_ef(games, order, starts, nblocks):
                found = tuple(d.ci[k] for k in range(m))
                found_index = scanned - 1
                break
            if not _advance(&d, games, NULL):
                break
        conclusive = found is not None or not truncated
        return scanned, conclusive, found, found_index
    finally:
        free(games)
        if order:
            free(order)
        if starts:
            free(starts)
        _days_free(&d)


def scan_verify(combos, int n, avail, long long budget, bint stop_on_ef=True):
    """See _scan_py.scan_verify."""
    cdef int m = len(combos)
    if m == 0:
        return 0, True, False, None, _NO_LEAVES
    for day in combos:
        if not day:
            return 0, True, False, None, _NO_LEAVES

    cdef Days d
    _days_init(&d, combos)
    cdef int* games = <int*> calloc(n if n else 1, sizeof(int))
    cdef int* order = NULL
    cdef int* starts = NULL
    cdef int nblocks = 0
    cdef long long scanned = 0
    cdef long long min_envy = <long long> n * n + 1
    cdef long long count
    cdef bint truncated = 0
    cdef int k
    ef_choice = None
    try:
        if not games:
            raise MemoryError()
        _prep_order(n, avail, &order, &starts, &nblocks)
        for k in range(m):
            _apply(&d, k, games, NULL, 1)
        while True:
            if scanned >= budget:
                truncated = 1
                break
            scanned += 1
            count = _count_pairs(games, order, starts, nblocks, min_envy)
            if count < min_envy:
                min_envy = count
                if count == 0:
                    ef_choice = tuple(d.ci[k] for k in range(m))
                    if stop_on_ef:
                        break
            if not _advance(&d, games, NULL):
                break
        ef_found = ef_choice is not None
        conclusive = ef_found or not truncated
        return scanned, conclusive, ef_found, ef_choice, min_envy
    finally:
        free(games)
        if order:
            free(order)
        if starts:
            free(starts)
        _days_free(&d)
