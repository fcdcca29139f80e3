"""Exhaustive enumeration of small complexes up to vertex relabeling.

Every complex containing all singletons of ``[n]`` is reached from the
discrete complex by repeatedly adding one minimal non-face.  Each level is
deduplicated by canonical form, so a class appears exactly once.
"""

from __future__ import annotations

from collections.abc import Iterator

from ._kernels import canonical_form
from .complex import SimplicialComplex, maximal_masks


def canonical_key(delta: SimplicialComplex) -> tuple[int, tuple[int, ...]]:
    return delta.n, canonical_form(delta.n, list(delta.facets))


def complexes_up_to_iso(n: int, max_dim: int | None = None) -> Iterator[SimplicialComplex]:
    """One representative per isomorphism class of complexes on ``[n]``.

    ``max_dim`` caps the dimension; ``max_dim=1`` enumerates graphs.
    """
    top = n if max_dim is None else max_dim + 1
    level = {canonical_form(n, [1 << v for v in range(n)]): None}
    while level:
        nxt = {}
        for facets in level:
            delta = SimplicialComplex._build(n, facets, tuple(range(1, n + 1)))
            yield delta
            for nonface in delta.minimal_nonface_masks():
                if nonface.bit_count() > top:
                    continue
                child = maximal_masks(list(facets) + [nonface])
                key = canonical_form(n, child)
                if key not in nxt:
                    nxt[key] = None
        level = nxt


def connected_complexes_up_to_iso(n: int, max_dim: int | None = None) -> Iterator[SimplicialComplex]:
    for delta in complexes_up_to_iso(n, max_dim):
        if delta.is_connected:
            yield delta
