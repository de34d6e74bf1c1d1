"""Numba kernels on int64 adjacency bitsets (n <= 63).

Everything here works on ``adj``, a 1-d int64 array where bit ``w`` of
``adj[v]`` is set iff ``vw`` is an edge.  Graph codes are the graph6 bit
string of the upper triangle (column-major, first bit most significant)
read as an integer, so they fit an int64 for n <= 11.
"""

import numpy as np
from numba import njit

MAX_KERNEL_N = 63
MAX_CODE_N = 11


@njit(cache=True, inline="always")
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, inline="always")
def _ctz(low):
    # index of the single set bit in ``low``
    return _popcount(low - 1)


@njit(cache=True)
def _reach(adj, start, allowed):
    seen = np.int64(1) << start
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[_ctz(low)]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@njit(cache=True)
def _connected_within(adj, allowed):
    if allowed == 0:
        return True
    low = allowed & -allowed
    return _reach(adj, _ctz(low), allowed) == allowed


@njit(cache=True)
def conn_level(adj, n, cap):
    """Vertex connectivity capped at ``cap`` (0 = disconnected, ..., 3)."""
    full = (np.int64(1) << n) - 1
    if not _connected_within(adj, full):
        return 0
    if cap <= 1 or n < 3:
        return 1
    for v in range(n):
        if not _connected_within(adj, full & ~(np.int64(1) << v)):
            return 1
    if cap <= 2 or n < 4:
        return 2
    for u in range(n):
        for v in range(u + 1, n):
            if not _connected_within(adj, full & ~(np.int64(1) << u) & ~(np.int64(1) << v)):
                return 2
    return 3


@njit(cache=True)
def min_degree(adj, n):
    best = n
    for v in range(n):
        d = _popcount(adj[v])
        if d < best:
            best = d
    return best


@njit(cache=True)
def is_wheel(adj, n):
    if n < 4:
        return False
    full = (np.int64(1) << n) - 1
    for u in range(n):
        if adj[u] != full & ~(np.int64(1) << u):
            continue
        ok = True
        for v in range(n):
            if v != u and _popcount(adj[v]) != 3:
                ok = False
                break
        if ok and _connected_within(adj, full & ~(np.int64(1) << u)):
            return True
    return False


# -- longest cycles -----------------------------------------------------------


@njit(cache=True)
def _longest_cycle_from(adj, n, s, best, path, out):
    """Best cycle whose minimum vertex is ``s``; beats ``best`` or returns it."""
    full = (np.int64(1) << n) - 1
    allowed = full & ~((np.int64(1) << (s + 1)) - 1)
    limit = n - s
    adjs = adj[s]
    cand = np.empty(n, np.int64)
    path[0] = s
    visited = np.int64(1) << s
    cand[0] = adjs & allowed
    d = 1
    while d > 0:
        c = cand[d - 1]
        if c == 0:
            d -= 1
            visited ^= np.int64(1) << path[d]
            continue
        low = c & -c
        cand[d - 1] = c ^ low
        w = _ctz(low)
        d2 = d + 1
        if d2 >= 3 and (adjs & low) and d2 > best:
            best = d2
            for i in range(d):
                out[i] = path[i]
            out[d] = w
            if best >= limit:
                return best
        free = allowed & ~visited & ~low
        r = _reach(adj, w, free | low) & ~low
        if d2 + _popcount(r) <= best or (adjs & r) == 0:
            continue
        path[d] = w
        visited |= low
        cand[d] = adj[w] & free
        d = d2
    return best


@njit(cache=True)
def _exact_cycle_from(adj, n, s, length, path, out):
    """First cycle (lex order) of exactly ``length`` with minimum vertex ``s``
    and second vertex smaller than last; writes it to ``out``."""
    full = (np.int64(1) << n) - 1
    allowed = full & ~((np.int64(1) << (s + 1)) - 1)
    adjs = adj[s]
    cand = np.empty(n, np.int64)
    path[0] = s
    visited = np.int64(1) << s
    cand[0] = adjs & allowed
    d = 1
    while d > 0:
        c = cand[d - 1]
        if c == 0:
            d -= 1
            visited ^= np.int64(1) << path[d]
            continue
        low = c & -c
        cand[d - 1] = c ^ low
        w = _ctz(low)
        d2 = d + 1
        if d2 == length:
            if (adjs & low) and path[1] < w:
                for i in range(d):
                    out[i] = path[i]
                out[d] = w
                return True
            continue
        free = allowed & ~visited & ~low
        r = _reach(adj, w, free | low) & ~low
        if d2 + _popcount(r) < length:
            continue
        closers = adjs & r
        if d2 >= 2:
            first = path[1] if d >= 2 else w
            closers &= ~((np.int64(1) << (first + 1)) - 1)
        if closers == 0:
            continue
        path[d] = w
        visited |= low
        cand[d] = adj[w] & free
        d = d2
    return False


@njit(cache=True)
def circumference(adj, n, out):
    """Length of a longest cycle (0 if acyclic); some witness goes to ``out``."""
    path = np.empty(n, np.int64)
    if n >= 3 and _exact_cycle_from(adj, n, 0, n, path, out):
        return n
    best = 2
    for s in range(n):
        if n - s <= best:
            break
        best = _longest_cycle_from(adj, n, s, best, path, out)
    return best if best >= 3 else 0


@njit(cache=True)
def first_cycle_of_length(adj, n, length, out):
    """Lexicographically least canonical cycle of the given length."""
    path = np.empty(n, np.int64)
    for s in range(n - length + 1):
        if _exact_cycle_from(adj, n, s, length, path, out):
            return True
    return False


@njit(cache=True)
def is_hamiltonian(adj, n):
    if n < 3:
        return False
    path = np.empty(n, np.int64)
    out = np.empty(n, np.int64)
    return _exact_cycle_from(adj, n, 0, n, path, out)


# -- longest induced cycles ---------------------------------------------------


@njit(cache=True)
def _induced_search(adj, n, s, best, length, path, out):
    """Induced-cycle DFS from minimum vertex ``s``.

    With ``length == 0`` it maximises (returns the new best, witness in
    ``out``); otherwise it returns ``length`` for the first lex-least
    canonical induced cycle of that length, or 0.
    """
    full = (np.int64(1) << n) - 1
    allowed = full & ~((np.int64(1) << (s + 1)) - 1)
    adjs = adj[s]
    cand = np.empty(n, np.int64)
    forb = np.empty(n, np.int64)
    path[0] = s
    visited = np.int64(1) << s
    cand[0] = adjs & allowed
    forb[0] = 0
    d = 1
    exact = length > 0
    limit = n - s
    while d > 0:
        c = cand[d - 1]
        if c == 0:
            d -= 1
            visited ^= np.int64(1) << path[d]
            continue
        low = c & -c
        cand[d - 1] = c ^ low
        w = _ctz(low)
        d2 = d + 1
        if d >= 2 and (adjs & low):
            # w closes the cycle; extending past it would create a chord
            if exact:
                if d2 == length and path[1] < w:
                    for i in range(d):
                        out[i] = path[i]
                    out[d] = w
                    return length
            elif d2 > best:
                best = d2
                for i in range(d):
                    out[i] = path[i]
                out[d] = w
                if best >= limit:
                    return best
            continue
        if exact and d2 >= length:
            continue
        nf = forb[d - 1]
        if d >= 2:
            nf |= adj[path[d - 1]]
        free = allowed & ~visited & ~low & ~nf
        r = _reach(adj, w, free | low) & ~low
        room = d2 + _popcount(r)
        if exact:
            if room < length:
                continue
        elif room <= best:
            continue
        if (adjs & r) == 0:
            continue
        path[d] = w
        visited |= low
        forb[d] = nf
        cand[d] = adj[w] & free
        d = d2
    return 0 if exact else best


@njit(cache=True)
def induced_circumference(adj, n, out):
    path = np.empty(n, np.int64)
    best = 2
    for s in range(n):
        if n - s <= best:
            break
        best = _induced_search(adj, n, s, best, 0, path, out)
    return best if best >= 3 else 0


@njit(cache=True)
def first_induced_cycle_of_length(adj, n, length, out):
    path = np.empty(n, np.int64)
    for s in range(n - length + 1):
        if _induced_search(adj, n, s, 0, length, path, out):
            return True
    return False


@njit(cache=True)
def hole_length_mask(adj, n, max_len, stop_at_two):
    """Bitmask of the lengths (>= 4) of all holes up to ``max_len``.

    With ``stop_at_two`` the search ends as soon as two distinct lengths have
    been seen, which is all an ell-holed test needs.
    """
    full = (np.int64(1) << n) - 1
    mask = np.int64(0)
    path = np.empty(n, np.int64)
    cand = np.empty(n, np.int64)
    forb = np.empty(n, np.int64)
    for s in range(n):
        allowed = full & ~((np.int64(1) << (s + 1)) - 1)
        adjs = adj[s]
        path[0] = s
        visited = np.int64(1) << s
        cand[0] = adjs & allowed
        forb[0] = 0
        d = 1
        while d > 0:
            c = cand[d - 1]
            if c == 0:
                d -= 1
                visited ^= np.int64(1) << path[d]
                continue
            low = c & -c
            cand[d - 1] = c ^ low
            w = _ctz(low)
            d2 = d + 1
            if d >= 2 and (adjs & low):
                if d2 >= 4 and path[1] < w:
                    mask |= np.int64(1) << d2
                    if stop_at_two and _popcount(mask) >= 2:
                        return mask
                continue
            if d2 >= max_len:
                continue
            nf = forb[d - 1]
            if d >= 2:
                nf |= adj[path[d - 1]]
            free = allowed & ~visited & ~low & ~nf
            path[d] = w
            visited |= low
            forb[d] = nf
            cand[d] = adj[w] & free
            d = d2
    return mask


# -- codes and canonical form ----------------------------------------------------


@njit(cache=True)
def decode(code, n, adj):
    for v in range(n):
        adj[v] = 0
    k = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
            k -= 1


@njit(cache=True)
def encode(adj, n):
    code = np.int64(0)
    for j in range(1, n):
        a = adj[j]
        for i in range(j):
            code = (code << 1) | ((a >> i) & 1)
    return code


@njit(cache=True)
def _encode_perm(adj, n, inv):
    code = np.int64(0)
    for j in range(1, n):
        a = adj[inv[j]]
        for i in range(j):
            code = (code << 1) | ((a >> inv[i]) & 1)
    return code


@njit(cache=True)
def _key_cmp(a, b, cellof, counts, k):
    if cellof[a] != cellof[b]:
        return cellof[a] - cellof[b]
    for c in range(k):
        if counts[a, c] != counts[b, c]:
            return counts[a, c] - counts[b, c]
    return 0


@njit(cache=True)
def _refine(adj, n, cellof, k, counts, order, newcell, cm):
    """Equitable refinement of an ordered partition, label-invariant."""
    while k < n:
        for c in range(k):
            cm[c] = 0
        for v in range(n):
            cm[cellof[v]] |= np.int64(1) << v
        for v in range(n):
            a = adj[v]
            for c in range(k):
                counts[v, c] = _popcount(a & cm[c])
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0 and _key_cmp(order[j], x, cellof, counts, k) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = x
        nk = 0
        newcell[order[0]] = 0
        for i in range(1, n):
            if _key_cmp(order[i - 1], order[i], cellof, counts, k) != 0:
                nk += 1
            newcell[order[i]] = nk
        nk += 1
        for v in range(n):
            cellof[v] = newcell[v]
        if nk == k:
            break
        k = nk
    return k


@njit(cache=True)
def _target_reps(adj, n, cellof, k):
    """First non-singleton cell, and its members up to twin swaps."""
    sizes = np.zeros(k, np.int64)
    for v in range(n):
        sizes[cellof[v]] += 1
    t = 0
    while sizes[t] == 1:
        t += 1
    reps = np.int64(0)
    for u in range(n):
        if cellof[u] != t:
            continue
        bu = np.int64(1) << u
        twin = False
        r = reps
        while r:
            low = r & -r
            x = _ctz(low)
            if (adj[u] & ~low) == (adj[x] & ~bu):
                twin = True
                break
            r ^= low
        if not twin:
            reps |= bu
    return t, reps


@njit(cache=True)
def canonical_code(adj, n):
    """Minimum code over the leaves of an individualisation-refinement tree.

    Twins inside the target cell are interchangeable by an automorphism that
    fixes the partition, so only one of each is individualised.
    """
    if n <= 1:
        return np.int64(0)
    parts = np.empty((n + 1, n), np.int64)
    ks = np.empty(n + 1, np.int64)
    tcell = np.empty(n + 1, np.int64)
    cands = np.empty(n + 1, np.int64)
    counts = np.empty((n, n), np.int64)
    order = np.empty(n, np.int64)
    newcell = np.empty(n, np.int64)
    cm = np.empty(n, np.int64)
    inv = np.empty(n, np.int64)
    for v in range(n):
        parts[0, v] = 0
    k = _refine(adj, n, parts[0], 1, counts, order, newcell, cm)
    if k == n:
        for v in range(n):
            inv[parts[0, v]] = v
        return _encode_perm(adj, n, inv)
    ks[0] = k
    t0, r0 = _target_reps(adj, n, parts[0], k)
    tcell[0] = t0
    cands[0] = r0
    best = np.int64(-1)
    depth = 0
    while depth >= 0:
        c = cands[depth]
        if c == 0:
            depth -= 1
            continue
        low = c & -c
        cands[depth] = c ^ low
        v = _ctz(low)
        t = tcell[depth]
        child = parts[depth + 1]
        for w in range(n):
            cw = parts[depth, w]
            if cw > t or (cw == t and w != v):
                child[w] = cw + 1
            else:
                child[w] = cw
        kk = _refine(adj, n, child, ks[depth] + 1, counts, order, newcell, cm)
        if kk == n:
            for w in range(n):
                inv[child[w]] = w
            code = _encode_perm(adj, n, inv)
            if best < 0 or code < best:
                best = code
            continue
        depth += 1
        ks[depth] = kk
        tt, rr = _target_reps(adj, n, child, kk)
        tcell[depth] = tt
        cands[depth] = rr
    return best


@njit(cache=True)
def canonical_codes(codes, n):
    out = np.empty(len(codes), np.int64)
    adj = np.empty(n, np.int64)
    for i in range(len(codes)):
        decode(codes[i], n, adj)
        out[i] = canonical_code(adj, n)
    return out


# -- one level of vertex-extension generation ------------------------------------


@njit(cache=True)
def _vertex_key(adj, n, v):
    a = adj[v]
    s = 0
    while a:
        low = a & -a
        s += _popcount(adj[_ctz(low)])
        a ^= low
    return _popcount(adj[v]) * 4096 + s


@njit(cache=True)
def extend_chunk(parents, m, min_deg, conn, out):
    """Canonical codes of all graphs on ``m + 1`` vertices in class
    ``(conn, min_deg)`` obtained by adding a vertex to a parent on ``m``.

    The new vertex must maximise ``_vertex_key`` among the vertices whose
    deletion stays inside the parent class; every target graph has such a
    vertex, so completeness only needs the parent level to be complete.
    Duplicates are left for the caller to remove.
    """
    n = m + 1
    adj = np.empty(n, np.int64)
    base = np.empty(m, np.int64)
    deg = np.empty(m, np.int64)
    full = (np.int64(1) << n) - 1
    cnt = 0
    for p in range(len(parents)):
        decode(parents[p], m, base)
        must = np.int64(0)
        ok = True
        for v in range(m):
            deg[v] = _popcount(base[v])
            if deg[v] < min_deg - 1:
                ok = False
            elif deg[v] == min_deg - 1:
                must |= np.int64(1) << v
        if not ok:
            continue
        for s in range(np.int64(1) << m):
            if (s & must) != must:
                continue
            if _popcount(s) < min_deg:
                continue
            if conn >= 1 and s == 0:
                continue
            for v in range(m):
                adj[v] = base[v] | (((s >> v) & 1) << m)
            adj[m] = s
            knew = _vertex_key(adj, n, m)
            beaten = False
            for v in range(m):
                if _vertex_key(adj, n, v) > knew:
                    if conn != 1 or _connected_within(adj, full & ~(np.int64(1) << v)):
                        beaten = True
                        break
            if beaten:
                continue
            if conn >= 2 and conn_level(adj, n, conn) < conn:
                continue
            out[cnt] = canonical_code(adj, n)
            cnt += 1
    return cnt


# -- batch statistics for scans ----------------------------------------------------

STAT_CONN = 0
STAT_MINDEG = 1
STAT_C = 2
STAT_CI = 3
STAT_HAM = 4
STAT_WHEEL = 5
STAT_HOLES = 6
NUM_STATS = 7


@njit(cache=True)
def batch_stats(codes, n, out):
    """Per-graph (connectivity<=3, min degree, c, c', hamiltonian, wheel,
    hole-length mask).  The hole mask is only computed (else -1) for
    2-connected non-hamiltonian graphs with min degree >= 3."""
    adj = np.empty(n, np.int64)
    w = np.empty(n, np.int64)
    for i in range(len(codes)):
        decode(codes[i], n, adj)
        conn = conn_level(adj, n, 3)
        md = min_degree(adj, n)
        c = circumference(adj, n, w)
        ci = induced_circumference(adj, n, w)
        ham = 1 if c == n else 0
        out[i, STAT_CONN] = conn
        out[i, STAT_MINDEG] = md
        out[i, STAT_C] = c
        out[i, STAT_CI] = ci
        out[i, STAT_HAM] = ham
        out[i, STAT_WHEEL] = 1 if is_wheel(adj, n) else 0
        if conn >= 2 and md >= 3 and ham == 0:
            out[i, STAT_HOLES] = hole_length_mask(adj, n, n, True)
        else:
            out[i, STAT_HOLES] = -1


def to_array(adj_masks) -> np.ndarray:
    return np.asarray(adj_masks, dtype=np.int64)
