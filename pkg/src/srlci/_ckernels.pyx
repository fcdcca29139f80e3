# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; must match ``_pykernels`` exactly (masks fit in 64 bits)."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t

cdef uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline uint64_t mix64(uint64_t x) nogil:
    x = x + GOLDEN
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL
    return x ^ (x >> 31)


cdef inline int64_t modpow(int64_t b, int64_t e, int64_t m) nogil:
    cdef int64_t r = 1
    b %= m
    while e > 0:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef void _refine(int n, int nf, uint64_t* facets, int* colors):
    cdef int* newc = <int*>malloc(n * sizeof(int))
    cdef uint64_t* mixed = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef uint64_t* acc = <uint64_t*>malloc(n * sizeof(uint64_t))
    cdef int classes = 1, rounds, v, u, j, distinct, rank, seen
    cdef uint64_t s, hf, f
    for v in range(n):
        colors[v] = 0
    for rounds in range(n + 1):
        for v in range(n):
            mixed[v] = mix64(<uint64_t>colors[v])
            acc[v] = 0
        for j in range(nf):
            f = facets[j]
            s = (<uint64_t>popcount(f)) * GOLDEN
            for v in range(n):
                if (f >> v) & 1:
                    s = s + mixed[v]
            hf = mix64(s)
            for v in range(n):
                if (f >> v) & 1:
                    acc[v] = acc[v] + mix64(hf ^ mixed[v])
        # rank of key (colors[v], acc[v]) among distinct keys
        distinct = 0
        for v in range(n):
            seen = 0
            for u in range(v):
                if colors[u] == colors[v] and acc[u] == acc[v]:
                    seen = 1
                    break
            if not seen:
                distinct += 1
        for v in range(n):
            rank = 0
            for u in range(n):
                if colors[u] < colors[v] or (colors[u] == colors[v] and acc[u] < acc[v]):
                    # count distinct smaller keys: only the first occurrence
                    seen = 0
                    for j in range(u):
                        if colors[j] == colors[u] and acc[j] == acc[u]:
                            seen = 1
                            break
                    if not seen:
                        rank += 1
            newc[v] = rank
        for v in range(n):
            colors[v] = newc[v]
        if distinct == classes:
            break
        classes = distinct
    free(newc)
    free(mixed)
    free(acc)


def refine_colors(int n, facets):
    cdef int nf = len(facets)
    cdef uint64_t* fs = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    cdef int* colors = <int*>malloc((n + 1) * sizeof(int))
    cdef int j
    try:
        for j in range(nf):
            fs[j] = facets[j]
        _refine(n, nf, fs, colors)
        return [colors[j] for j in range(n)]
    finally:
        free(fs)
        free(colors)


cdef struct CanonState:
    int n
    int nf
    uint64_t* facets
    int* order
    int* block_end
    int* pos
    int* used
    uint64_t* image
    uint64_t* best
    int have_best


cdef void _sort_u64(uint64_t* a, int k) nogil:
    cdef int i, j
    cdef uint64_t x
    for i in range(1, k):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x


cdef void _leaf(CanonState* st) nogil:
    cdef int j, v, cmp
    cdef uint64_t f, m
    for j in range(st.nf):
        f = st.facets[j]
        m = 0
        for v in range(st.n):
            if (f >> v) & 1:
                m |= (<uint64_t>1) << st.pos[v]
        st.image[j] = m
    _sort_u64(st.image, st.nf)
    if not st.have_best:
        cmp = -1
    else:
        cmp = 0
        for j in range(st.nf):
            if st.image[j] != st.best[j]:
                cmp = -1 if st.image[j] < st.best[j] else 1
                break
    if cmp < 0:
        for j in range(st.nf):
            st.best[j] = st.image[j]
        st.have_best = 1


cdef void _assign(CanonState* st, int t, int lo) nogil:
    # order[t] gets a free position in [lo, block_end[t])
    cdef int p, nxt
    if t == st.n:
        _leaf(st)
        return
    for p in range(lo, st.block_end[t]):
        if not st.used[p]:
            st.used[p] = 1
            st.pos[st.order[t]] = p
            if t + 1 < st.n and st.block_end[t + 1] != st.block_end[t]:
                nxt = st.block_end[t]
            else:
                nxt = lo
            _assign(st, t + 1, nxt)
            st.used[p] = 0


def canonical_form(int n, facets):
    cdef CanonState st
    cdef int nf = len(facets)
    cdef int j, v, t, start, end
    cdef int* colors = <int*>malloc((n + 1) * sizeof(int))
    st.n = n
    st.nf = nf
    st.facets = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.order = <int*>malloc((n + 1) * sizeof(int))
    st.block_end = <int*>malloc((n + 1) * sizeof(int))
    st.pos = <int*>malloc((n + 1) * sizeof(int))
    st.used = <int*>malloc((n + 1) * sizeof(int))
    st.image = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.best = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.have_best = 0
    try:
        for j in range(nf):
            st.facets[j] = facets[j]
        _refine(n, nf, st.facets, colors)
        # vertices sorted by (colour, index)
        t = 0
        for j in range(n):
            for v in range(n):
                if colors[v] == j:
                    st.order[t] = v
                    t += 1
        start = 0
        while start < n:
            end = start
            while end < n and colors[st.order[end]] == colors[st.order[start]]:
                end += 1
            for t in range(start, end):
                st.block_end[t] = end
            start = end
        for v in range(n):
            st.used[v] = 0
        if n == 0:
            _leaf(&st)
        else:
            _assign(&st, 0, 0)
        return tuple([st.best[j] for j in range(nf)])
    finally:
        free(colors)
        free(st.facets)
        free(st.order)
        free(st.block_end)
        free(st.pos)
        free(st.used)
        free(st.image)
        free(st.best)


def rank_mod_p(rows, int ncols, int64_t p):
    cdef int nrows = len(rows)
    cdef int64_t* mat = <int64_t*>malloc((nrows * ncols + 1) * sizeof(int64_t))
    cdef int r, c, k, piv, rank = 0
    cdef int64_t x, f, inv, tmp
    try:
        for r in range(nrows):
            row = rows[r]
            for c in range(ncols):
                mat[r * ncols + c] = (<int64_t>row[c]) % p
                if mat[r * ncols + c] < 0:
                    mat[r * ncols + c] += p
        for c in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if mat[r * ncols + c] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for k in range(ncols):
                    tmp = mat[rank * ncols + k]
                    mat[rank * ncols + k] = mat[piv * ncols + k]
                    mat[piv * ncols + k] = tmp
            inv = modpow(mat[rank * ncols + c], p - 2, p)
            for r in range(rank + 1, nrows):
                x = mat[r * ncols + c]
                if x != 0:
                    f = x * inv % p
                    for k in range(c, ncols):
                        if mat[rank * ncols + k] != 0:
                            mat[r * ncols + k] = (mat[r * ncols + k] - f * mat[rank * ncols + k]) % p
                            if mat[r * ncols + k] < 0:
                                mat[r * ncols + k] += p
            rank += 1
            if rank == nrows:
                break
        return rank
    finally:
        free(mat)


def filter_faces(faces, uint64_t must_contain, witnesses):
    cdef int nw = len(witnesses)
    cdef uint64_t* ws = <uint64_t*>malloc((nw + 1) * sizeof(uint64_t))
    cdef uint64_t L
    cdef int j, ok
    out = []
    try:
        for j in range(nw):
            ws[j] = witnesses[j]
        for face in faces:
            L = face
            if L & must_contain != must_contain:
                continue
            ok = 1
            for j in range(nw):
                if ws[j] & ~L == 0:
                    ok = 0
                    break
            if ok:
                out.append(face)
        return out
    finally:
        free(ws)
