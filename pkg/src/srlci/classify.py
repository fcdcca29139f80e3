"""Complete-intersection and locally-complete-intersection decisions.

Connected locally CI complexes are complete intersections in dimension at
least two, and m-gons or pointed paths in dimension one; ``classify``
labels each connected component accordingly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .complex import SimplicialComplex
from .errors import PreconditionFailed, WrongDimension
from .monomial import complete_intersection_blocks, is_complete_intersection, stanley_reisner_ideal


class Kind(str, enum.Enum):
    CI_DIM_GE_2 = "ci"
    M_GON = "gon"
    POINTED_PATH = "pointed_path"
    POINT = "point"
    NOT_LCI = "not_lci"


@dataclass(frozen=True)
class ComponentLabel:
    kind: Kind
    vertices: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.vertices)

    def __post_init__(self):
        if self.kind is Kind.M_GON and self.m < 3:
            raise ValueError("an m-gon needs m >= 3")
        if self.kind is Kind.POINTED_PATH and self.m < 2:
            raise ValueError("a pointed path needs at least 2 vertices")

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "m": self.m, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class ClassificationReport:
    """Structure of a complex.

    ``cm`` and ``buchsbaum`` are ``None`` when the complex is not locally CI:
    the component classification gives no answer for them.
    """

    components: list[ComponentLabel]
    dim: int
    is_connected: bool
    is_pure: bool
    is_ci: bool
    is_lci: bool
    is_gci: bool
    is_s2: bool
    cm: bool | None
    buchsbaum: bool | None
    witness_vertex: int | None = None
    ci_blocks: list[tuple[int, ...]] | None = field(default=None)

    def to_dict(self) -> dict:
        return {
            "components": [c.to_dict() for c in self.components],
            "dim": self.dim,
            "connected": self.is_connected,
            "pure": self.is_pure,
            "ci": self.is_ci,
            "lci": self.is_lci,
            "gci": self.is_gci,
            "s2": self.is_s2,
            "cm": self.cm,
            "buchsbaum": self.buchsbaum,
            "witness_vertex": self.witness_vertex,
            "ci_blocks": [list(b) for b in self.ci_blocks] if self.ci_blocks is not None else None,
        }


def is_ci_complex(delta: SimplicialComplex) -> bool:
    return is_complete_intersection(stanley_reisner_ideal(delta))


def lci_witness(delta: SimplicialComplex) -> int | None:
    """Label of the first vertex whose link is not a complete intersection."""
    for v in range(delta.n):
        if not is_ci_complex(delta.link_mask(1 << v)):
            return delta.labels[v]
    return None


def is_locally_ci(delta: SimplicialComplex) -> bool:
    return lci_witness(delta) is None


def is_s2(delta: SimplicialComplex) -> bool:
    """Pure, and every link of dimension at least one is connected."""
    if not delta.is_pure:
        return False
    for f in delta.faces():
        lk = delta.link_mask(f)
        if not lk.is_empty and lk.dim >= 1 and not lk.is_connected:
            return False
    return True


def _require_dim1_connected(delta: SimplicialComplex):
    if delta.is_empty or delta.dim != 1:
        raise WrongDimension(f"expected a 1-dimensional complex, got dimension {delta.dim}")
    if not delta.is_connected:
        raise PreconditionFailed("expected a connected complex")


def recognize_gon_or_path(delta: SimplicialComplex) -> ComponentLabel:
    """Label a connected 1-dimensional complex by its vertex degrees."""
    _require_dim1_connected(delta)
    degs = delta.vertex_degrees()
    verts = tuple(sorted(delta.labels))
    if all(d == 2 for d in degs):
        return ComponentLabel(Kind.M_GON, verts)
    if sorted(degs)[:2] == [1, 1] and all(d in (1, 2) for d in degs) and degs.count(1) == 2:
        return ComponentLabel(Kind.POINTED_PATH, verts)
    return ComponentLabel(Kind.NOT_LCI, verts)


def is_locally_gorenstein_dim1(delta: SimplicialComplex) -> bool:
    """For 1-dimensional complexes: every vertex link has at most two points."""
    _require_dim1_connected(delta)
    return all(delta.link_mask(1 << v).n <= 2 for v in range(delta.n))


def dim1_connected_lci_classification(delta: SimplicialComplex) -> Kind:
    return recognize_gon_or_path(delta).kind


def s2_links_ci_condition(delta: SimplicialComplex) -> bool:
    """Every face whose link is 1-dimensional has a complete-intersection link.

    Only defined for S2 complexes of dimension at least two, where it is
    equivalent to the complex itself being a complete intersection.
    """
    if delta.dim < 2:
        raise PreconditionFailed(f"needs dimension >= 2, got {delta.dim}")
    if not is_s2(delta):
        raise PreconditionFailed("complex does not satisfy S2")
    for f in delta.faces():
        lk = delta.link_mask(f)
        if not lk.is_empty and lk.dim == 1 and not is_ci_complex(lk):
            return False
    return True


def _label_component(comp: SimplicialComplex) -> ComponentLabel:
    verts = tuple(sorted(comp.labels))
    if not is_locally_ci(comp):
        return ComponentLabel(Kind.NOT_LCI, verts)
    if comp.n == 1:
        return ComponentLabel(Kind.POINT, verts)
    if comp.dim == 1:
        label = recognize_gon_or_path(comp)
        if label.kind is Kind.NOT_LCI:
            raise RuntimeError(f"locally CI 1-dimensional component {comp} is neither gon nor path")
        return label
    if not is_ci_complex(comp):
        raise RuntimeError(f"connected locally CI component {comp} of dimension >= 2 is not CI")
    return ComponentLabel(Kind.CI_DIM_GE_2, verts)


def classify(delta: SimplicialComplex) -> ClassificationReport:
    components = [_label_component(c) for c in delta.connected_components()]
    witness = lci_witness(delta)
    lci = witness is None
    blocks = complete_intersection_blocks(stanley_reisner_ideal(delta))
    if blocks is not None:
        blocks = [tuple(delta.labels[i - 1] for i in b) for b in blocks]
    connected = len(components) == 1
    pure = delta.is_pure
    return ClassificationReport(
        components=components,
        dim=delta.dim,
        is_connected=connected,
        is_pure=pure,
        is_ci=blocks is not None,
        is_lci=lci,
        is_gci=lci and pure,
        is_s2=is_s2(delta),
        cm=(delta.dim == 0 or connected) if lci else None,
        buchsbaum=pure if lci else None,
        witness_vertex=witness,
        ci_blocks=blocks,
    )
