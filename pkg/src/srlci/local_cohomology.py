"""Graded local cohomology of ``S/I_Δ^ℓ`` through degree complexes.

For a degree ``a ∈ Z^n`` with negative part ``G_a``, the degree complex

    Δ_a = { L ∖ G_a : G_a ⊆ L ∈ Δ, every m ∈ G(I^ℓ) has some i ∉ L with ν_i(m) > a_i }

has reduced homology ``H̃_{i-|G_a|-1}(Δ_a)`` equal to the ``a``-graded piece
of ``H^i_m(S/I^ℓ)``; only ``a_j ≤ ℓ-1`` contribute.  Negative coordinates
never serve as witnesses, so each class is represented with ``-1`` there.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from ._kernels import filter_faces
from .complex import SimplicialComplex, mask_of, maximal_masks, members
from .errors import DimensionMismatch, InputError
from .homology import QQ, Field, reduced_homology
from .monomial import MonomialIdeal, power_generators, stanley_reisner_ideal

DegreeVector = tuple[int, ...]


def negative_support(a: DegreeVector) -> int:
    return mask_of(i for i, x in enumerate(a) if x < 0)


def canonical_degree(a: DegreeVector) -> DegreeVector:
    return tuple(-1 if x < 0 else x for x in a)


@dataclass(frozen=True)
class DegreeComplex:
    """A subcomplex of Δ on the ambient vertex indices ``0..n-1``.

    ``facets == ()`` is the void complex (no faces at all) and
    ``facets == (0,)`` is ``{∅}``; the two are different.
    """

    n: int
    facets: tuple[int, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_face_only(self) -> bool:
        return self.facets == (0,)

    def facet_labels(self) -> list[tuple[int, ...]]:
        return [tuple(i + 1 for i in members(f)) for f in self.facets]

    def component_count(self) -> int:
        verts = 0
        for f in self.facets:
            verts |= f
        comps: list[int] = []
        for f in self.facets:
            if not f:
                continue
            merged = f
            rest = []
            for c in comps:
                if c & merged:
                    merged |= c
                else:
                    rest.append(c)
            comps = rest + [merged]
        return len(comps)

    @property
    def is_disconnected(self) -> bool:
        return self.component_count() >= 2


def _witness_masks(gens: tuple, a: DegreeVector) -> list[int]:
    out = []
    for m in gens:
        w = 0
        for i, (e, x) in enumerate(zip(m, a)):
            if e > x:
                w |= 1 << i
        out.append(w)
    return out


def _degree_facets(faces: list[int], n: int, gens: tuple, a: DegreeVector) -> tuple[int, ...]:
    g = negative_support(a)
    good = filter_faces(faces, g, _witness_masks(gens, a), n)
    if not good:
        return ()
    return tuple(sorted(maximal_masks(L & ~g for L in good)))


def degree_complex(delta: SimplicialComplex, gens: MonomialIdeal, a: DegreeVector) -> DegreeComplex:
    """``Δ_a`` for the ideal generated by ``gens`` (normally ``G(I_Δ^ℓ)``)."""
    if len(a) != delta.n or gens.n_vars != delta.n:
        raise DimensionMismatch(f"degree of length {len(a)} for {delta.n} vertices / {gens.n_vars} variables")
    return DegreeComplex(delta.n, _degree_facets(delta.faces(), delta.n, gens.gens, tuple(a)))


def reduced_homology_dims(c: DegreeComplex | SimplicialComplex, field: Field = QQ) -> dict[int, int]:
    return reduced_homology(c, field)


@dataclass(frozen=True)
class Contribution:
    degree: DegreeVector
    face: tuple[int, ...]
    homology_index: int
    dim: int

    def to_dict(self) -> dict:
        return {"degree": list(self.degree), "face": list(self.face),
                "homology_index": self.homology_index, "dim": self.dim}


@dataclass(frozen=True)
class CohomologyPiece:
    """``H^i_m(S/I^ℓ)``: finite length iff every contribution has ``G_a = ∅``."""

    index: int
    finite: bool
    total_dim: int | None
    contributions: list[Contribution] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"i": self.index, "finite": self.finite, "total_dim": self.total_dim,
                "contributions": [c.to_dict() for c in self.contributions]}


@dataclass(frozen=True)
class CohomologyReport:
    n: int
    power: int
    field: str
    dim: int
    pieces: list[CohomologyPiece]
    depth: int
    is_cm: bool

    @property
    def is_flc(self) -> bool:
        return all(p.finite for p in self.pieces)

    def piece(self, i: int) -> CohomologyPiece:
        return self.pieces[i]

    def to_dict(self) -> dict:
        return {"n": self.n, "power": self.power, "field": self.field, "dim": self.dim,
                "depth": self.depth, "is_cm": self.is_cm, "flc": self.is_flc,
                "pieces": [p.to_dict() for p in self.pieces]}


def _degrees_for_face(n: int, f: int, power: int):
    off = [i for i in range(n) if not f >> i & 1]
    for vals in product(range(power), repeat=len(off)):
        a = [-1] * n
        for i, v in zip(off, vals):
            a[i] = v
        yield tuple(a)


def _contributions_for_faces(args):
    facets, n, labels, gens, power, d, char, face_batch = args
    delta = SimplicialComplex(n, facets, labels)
    faces = delta.faces()
    fld = Field(char)
    found = []
    for f in face_batch:
        size = f.bit_count()
        face_names = delta.names(f)
        for a in _degrees_for_face(n, f, power):
            dims = reduced_homology(_degree_facets(faces, n, gens, a), fld)
            for i in range(d):
                k = i - size - 1
                dk = dims.get(k, 0)
                if dk:
                    found.append((i, Contribution(a, face_names, k, dk)))
    return found


def _face_order(f: int):
    return (f.bit_count(), members(f))


def cohomology(delta: SimplicialComplex, power: int, field: Field = QQ, jobs: int = 1) -> CohomologyReport:
    """Dimensions of ``H^i_m(S/I_Δ^power)`` for ``i < dim S/I_Δ``.

    ``jobs > 1`` spreads faces over worker processes; the report is the same.
    """
    if power < 1:
        raise InputError("power must be at least 1")
    n = delta.n
    d = delta.dim + 1
    gens = power_generators(stanley_reisner_ideal(delta), power).gens
    faces = sorted(delta.faces(), key=_face_order)
    base = (delta.facets, n, delta.labels, gens, power, d, field.characteristic)
    if jobs <= 1:
        found = _contributions_for_faces(base + (faces,))
    else:
        batches = [faces[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            found = [x for part in ex.map(_contributions_for_faces, [base + (b,) for b in batches]) for x in part]
    pieces = []
    for i in range(d):
        contribs = sorted((c for j, c in found if j == i),
                          key=lambda c: (len(c.face), c.face, c.degree))
        finite = all(not c.face for c in contribs)
        total = sum(c.dim for c in contribs) if finite else None
        pieces.append(CohomologyPiece(i, finite, total, contribs))
    depth = next((p.index for p in pieces if p.contributions), d)
    return CohomologyReport(n, power, str(field), d, pieces, depth, depth == d)


def depth(delta: SimplicialComplex, power: int, field: Field = QQ) -> int:
    return cohomology(delta, power, field).depth


def a_sets_for_h1(delta: SimplicialComplex, power: int, field: Field = QQ):
    """Degrees feeding ``H^1``.

    Returns ``(A, A_i)``: ``A`` lists ``a ∈ [0, ℓ-1]^n`` with disconnected
    ``Δ_a``; ``A_i`` maps each vertex label to the canonical degrees
    (``a_i = -1``) with ``Δ_a = {∅}``.  Any nonempty ``A_i`` means ``H^1`` has
    infinite length.  Connectivity does not depend on ``field``.
    """
    n = delta.n
    gens = power_generators(stanley_reisner_ideal(delta), power).gens
    faces = delta.faces()
    disconnected = []
    for a in product(range(power), repeat=n):
        if DegreeComplex(n, _degree_facets(faces, n, gens, a)).is_disconnected:
            disconnected.append(a)
    per_vertex = {}
    for v in range(n):
        hits = []
        for a in _degrees_for_face(n, 1 << v, power):
            if _degree_facets(faces, n, gens, a) == (0,):
                hits.append(a)
        per_vertex[delta.labels[v]] = hits
    return disconnected, per_vertex
