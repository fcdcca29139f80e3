"""Pure-Python versions of the hot kernels.

These must agree bit-for-bit with ``_ckernels.pyx``; the 64-bit arithmetic
below is masked to emulate unsigned overflow.
"""

from itertools import permutations, product

M64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(x):
    x = (x + GOLDEN) & M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & M64
    return x ^ (x >> 31)


def refine_colors(n, facets):
    """Isomorphism-invariant vertex colouring by iterated facet hashing.

    Each round re-ranks vertices by (old colour, hash of incident facets),
    so the partition only ever gets finer.
    """
    colors = [0] * n
    classes = 1
    verts = [[v for v in range(n) if f >> v & 1] for f in facets]
    for _ in range(n + 1):
        mixed = [mix64(c) for c in colors]
        acc = [0] * n
        for f, vs in zip(facets, verts):
            s = len(vs) * GOLDEN & M64
            for v in vs:
                s = (s + mixed[v]) & M64
            hf = mix64(s)
            for v in vs:
                acc[v] = (acc[v] + mix64(hf ^ mixed[v])) & M64
        keys = [(colors[v], acc[v]) for v in range(n)]
        distinct = sorted(set(keys))
        rank = {k: i for i, k in enumerate(distinct)}
        colors = [rank[k] for k in keys]
        if len(distinct) == classes:
            break
        classes = len(distinct)
    return colors


def canonical_form(n, facets):
    """Lexicographically least sorted facet tuple over colour-respecting relabelings."""
    facets = list(facets)
    colors = refine_colors(n, facets)
    order = sorted(range(n), key=lambda v: (colors[v], v))
    blocks = []
    start = 0
    while start < n:
        end = start
        while end < n and colors[order[end]] == colors[order[start]]:
            end += 1
        blocks.append((order[start:end], list(range(start, end))))
        start = end
    verts = [[v for v in range(n) if f >> v & 1] for f in facets]
    best = None
    block_perms = [list(permutations(pos)) for _, pos in blocks]
    for choice in product(*block_perms):
        pos = [0] * n
        for (vs, _), ps in zip(blocks, choice):
            for v, p in zip(vs, ps):
                pos[v] = p
        image = []
        for vs in verts:
            m = 0
            for v in vs:
                m |= 1 << pos[v]
            image.append(m)
        image.sort()
        if best is None or image < best:
            best = image
    return tuple(best)


def rank_mod_p(rows, ncols, p):
    """Rank of an integer matrix reduced modulo the prime ``p``."""
    mat = [[x % p for x in r] for r in rows]
    rank = 0
    nrows = len(mat)
    for c in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if mat[r][c]:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        inv = pow(prow[c], p - 2, p)
        for r in range(rank + 1, nrows):
            x = mat[r][c]
            if x:
                f = x * inv % p
                row = mat[r]
                for k in range(c, ncols):
                    if prow[k]:
                        row[k] = (row[k] - f * prow[k]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def filter_faces(faces, must_contain, witnesses):
    """Faces ``L ⊇ must_contain`` such that every witness mask meets the complement of ``L``."""
    out = []
    for L in faces:
        if L & must_contain != must_contain:
            continue
        for w in witnesses:
            if not w & ~L:
                break
        else:
            out.append(L)
    return out
