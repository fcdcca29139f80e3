"""Finite simplicial complexes stored as facet bit masks.

Vertices are held internally as indices ``0..n-1``; every complex also
carries ``labels``, the 1-based names its vertices had in the complex it was
cut out of (links, restrictions and components are re-indexed onto their own
vertex sets).  All public arguments and results that name vertices use these
labels.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import EmptyInput, NotAFace, UncoveredVertex, VertexOutOfRange

__all__ = ["SimplicialComplex", "from_facets", "members", "mask_of", "maximal_masks"]


def members(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks`` (duplicates removed)."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def _facet_key(mask: int):
    return members(mask)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facets.

    ``n == 0`` with ``facets == (0,)`` is the complex ``{∅}`` whose only face
    is the empty set; it is what the link of a facet looks like.
    """

    n: int
    facets: tuple[int, ...]
    labels: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Build a complex on ``{1..n}`` from 1-based vertex sets.

        The inclusion-maximal inputs become the facets.  Every vertex must be
        covered by some input set.
        """
        if n < 1:
            raise VertexOutOfRange(f"vertex count must be positive, got {n}")
        masks = []
        for f in facets:
            m = 0
            for v in f:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise VertexOutOfRange(f"vertex {v!r} outside 1..{n}")
                m |= 1 << (v - 1)
            masks.append(m)
        if not masks:
            raise EmptyInput("no facets given")
        covered = 0
        for m in masks:
            covered |= m
        for i in range(n):
            if not covered >> i & 1:
                raise UncoveredVertex(i + 1)
        return cls._build(n, masks, tuple(range(1, n + 1)))

    @classmethod
    def empty(cls) -> SimplicialComplex:
        return cls(0, (0,), ())

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, ((1 << n) - 1,))

    @classmethod
    def _build(cls, n: int, masks: Iterable[int], labels: tuple[int, ...]) -> SimplicialComplex:
        facets = tuple(sorted(maximal_masks(masks), key=_facet_key))
        return cls(n, facets, labels)

    @classmethod
    def _reindexed(cls, masks: Sequence[int], labels: Sequence[int]) -> SimplicialComplex:
        """Complex on the union of ``masks``, renumbered onto that union."""
        support = 0
        for m in masks:
            support |= m
        if support == 0:
            return cls.empty()
        old = members(support)
        pos = {o: k for k, o in enumerate(old)}
        new_masks = [mask_of(pos[i] for i in members(m)) for m in masks]
        return cls._build(len(old), new_masks, tuple(labels[i] for i in old))

    # -- basic queries ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        """True for the complex ``{∅}``."""
        return self.n == 0

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def krull_dim(self) -> int:
        return self.dim + 1

    @property
    def is_pure(self) -> bool:
        return len({f.bit_count() for f in self.facets}) == 1

    def mask(self, labels: Iterable[int]) -> int:
        """Translate vertex labels into an internal mask."""
        index = {lab: i for i, lab in enumerate(self.labels)}
        m = 0
        for v in labels:
            if v not in index:
                raise VertexOutOfRange(f"{v!r} is not a vertex of this complex")
            m |= 1 << index[v]
        return m

    def names(self, mask: int) -> tuple[int, ...]:
        """Translate an internal mask into sorted vertex labels."""
        return tuple(sorted(self.labels[i] for i in members(mask)))

    def is_face_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def is_face(self, labels: Iterable[int]) -> bool:
        try:
            m = self.mask(labels)
        except VertexOutOfRange:
            return False
        return self.is_face_mask(m)

    def faces(self) -> list[int]:
        """All face masks, ordered by size then value (``∅`` first)."""
        seen = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return sorted(seen, key=lambda m: (m.bit_count(), m))

    def facet_labels(self) -> list[tuple[int, ...]]:
        return [self.names(f) for f in self.facets]

    # -- derived complexes ------------------------------------------------

    def link(self, face: Iterable[int] = ()) -> SimplicialComplex:
        """``link(F) = {G ∈ Δ : G ∪ F ∈ Δ, G ∩ F = ∅}``, re-indexed."""
        fm = self.mask(face)
        return self.link_mask(fm)

    def link_mask(self, fm: int) -> SimplicialComplex:
        if fm == 0:
            return self
        star = [f & ~fm for f in self.facets if fm & ~f == 0]
        if not star:
            raise NotAFace(f"{self.names(fm)} is not a face")
        return SimplicialComplex._reindexed(star, self.labels)

    def restriction(self, vertices: Iterable[int]) -> SimplicialComplex:
        """``Δ_W = {G ∈ Δ : G ⊆ W}``, re-indexed onto ``W``."""
        return self.restriction_mask(self.mask(vertices))

    def restriction_mask(self, wm: int) -> SimplicialComplex:
        if wm == 0:
            return SimplicialComplex.empty()
        return SimplicialComplex._reindexed([f & wm for f in self.facets], self.labels)

    def connected_components(self) -> list[SimplicialComplex]:
        """Components ordered by their least vertex label."""
        if self.is_empty:
            return []
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.facets:
            vs = members(f)
            for v in vs[1:]:
                a, b = find(vs[0]), find(v)
                if a != b:
                    parent[b] = a
        groups: dict[int, int] = {}
        for v in range(self.n):
            r = find(v)
            groups[r] = groups.get(r, 0) | (1 << v)
        comps = [self.restriction_mask(m) for m in groups.values()]
        return sorted(comps, key=lambda c: min(c.labels))

    @property
    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def minimal_nonface_masks(self) -> list[int]:
        found = set()
        for g in self.faces():
            for v in range(self.n):
                bit = 1 << v
                if g & bit:
                    continue
                cand = g | bit
                if cand in found or self.is_face_mask(cand):
                    continue
                if all(self.is_face_mask(cand & ~(1 << u)) for u in members(cand)):
                    found.add(cand)
        return sorted(found, key=lambda m: (m.bit_count(), members(m)))

    def minimal_nonfaces(self) -> list[tuple[int, ...]]:
        return [self.names(m) for m in self.minimal_nonface_masks()]

    def vertex_degrees(self) -> list[int]:
        """Number of facets through each internal vertex."""
        return [sum(1 for f in self.facets if f >> v & 1) for v in range(self.n)]

    # -- conversions --------------------------------------------------------

    def relabeled(self, perm: dict[int, int]) -> SimplicialComplex:
        """Apply a permutation of ``1..n`` (positions, not labels) given as ``{old: new}``."""
        return SimplicialComplex.from_facets(self.n, [[perm[v] for v in f] for f in self.to_document()["facets"]])

    def to_document(self) -> dict:
        return {"vertices": self.n, "facets": [[i + 1 for i in members(f)] for f in self.facets]}

    def __repr__(self):
        if self.is_empty:
            return "SimplicialComplex({∅})"
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_labels())
        return f"SimplicialComplex(n={self.n}, <{body}>)"


def from_facets(n: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, facets)


def gon(m: int) -> SimplicialComplex:
    """The m-gon: edges ``{i, i+1}`` and ``{m, 1}``."""
    return from_facets(m, [(i, i % m + 1) for i in range(1, m + 1)])


def pointed_path(m: int) -> SimplicialComplex:
    return from_facets(m, [(i, i + 1) for i in range(1, m)])


def disjoint_union(*parts: SimplicialComplex) -> SimplicialComplex:
    """Place the parts side by side on consecutive vertex blocks."""
    facets = []
    offset = 0
    for p in parts:
        facets.extend([v + offset for v in f] for f in p.to_document()["facets"])
        offset += p.n
    return from_facets(offset, facets)
