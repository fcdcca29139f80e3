"""Reduced simplicial homology dimensions over Q or GF(p).

Only ranks of boundary maps are computed.  Over Q the ranks come from
fraction-free (Bareiss) elimination on Python integers, so they are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .errors import InputError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``characteristic == 0`` means Q, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise InputError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Accept ``q`` (rationals) or ``p:<prime>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        if t.startswith("p:"):
            try:
                return cls(int(t[2:]))
            except ValueError:
                pass
        raise InputError(f"unknown field {text!r}; use 'q' or 'p:<prime>'")

    def rank(self, rows: list[list[int]], ncols: int) -> int:
        if not rows or not ncols:
            return 0
        if self.characteristic:
            return _kernels.rank_mod_p(rows, ncols, self.characteristic)
        return bareiss_rank(rows, ncols)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def bareiss_rank(rows: list[list[int]], ncols: int) -> int:
    m = [list(r) for r in rows]
    nrows = len(m)
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            x = row[c]
            for k in range(c + 1, ncols):
                row[k] = (row[k] * p - x * prow[k]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def all_faces(facets) -> list[int]:
    seen = set()
    for f in facets:
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return sorted(seen, key=lambda m: (m.bit_count(), m))


def _boundary_rows(faces_k: list[int], index_km1: dict[int, int]) -> list[list[int]]:
    rows = []
    width = len(index_km1)
    for f in faces_k:
        row = [0] * width
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[index_km1[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rows


@lru_cache(maxsize=65536)
def _homology_cached(facets: tuple[int, ...], field: Field) -> tuple[tuple[int, int], ...]:
    if not facets:
        return ()
    faces = all_faces(facets)
    top = max(f.bit_count() for f in faces) - 1
    by_dim: list[list[int]] = [[] for _ in range(top + 2)]  # slot k+1 holds dimension k
    for f in faces:
        by_dim[f.bit_count()].append(f)
    ranks = [0] * (top + 3)  # ranks[k+1] = rank of boundary from dim k to k-1
    for k in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim[k])}
        ranks[k + 1] = field.rank(_boundary_rows(by_dim[k + 1], lower), len(lower))
    out = []
    for k in range(-1, top + 1):
        out.append((k, len(by_dim[k + 1]) - ranks[k + 1] - ranks[k + 2]))
    return tuple(out)


def reduced_homology(complex_or_facets, field: Field = QQ) -> dict[int, int]:
    """``{k: dim H̃_k}`` for ``k = -1 .. dim``.

    Accepts anything with a ``facets`` attribute, or a facet-mask sequence.
    The void complex (no faces) gives ``{}``; ``{∅}`` gives ``{-1: 1}``.
    """
    facets = getattr(complex_or_facets, "facets", complex_or_facets)
    return dict(_homology_cached(tuple(sorted(facets)), field))


def reduced_euler_characteristic(facets) -> int:
    """``Σ (-1)^k f_k`` over faces, counting ``∅`` in degree -1."""
    if not facets:
        return 0
    return sum((-1) ** (f.bit_count() - 1) for f in all_faces(facets))
