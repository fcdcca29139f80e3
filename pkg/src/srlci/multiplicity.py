"""Multiplicities of ``S/I_Δ^ℓ`` and the multiplicity test for Buchsbaum powers.

All arithmetic is exact (integers and ``Fraction``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from .classify import is_ci_complex, is_locally_ci
from .complex import SimplicialComplex
from .errors import DimensionMismatch, InfiniteCohomology, NotCI, PreconditionFailed
from .monomial import complete_intersection_blocks, indeg, stanley_reisner_ideal


@dataclass(frozen=True)
class IdealNumerics:
    n: int
    d: int
    c: int
    q: int | None  # None for the zero ideal (Δ a simplex)
    e: int


def numerics(delta: SimplicialComplex) -> IdealNumerics:
    ideal = stanley_reisner_ideal(delta)
    d = delta.dim + 1
    e = sum(1 for f in delta.facets if f.bit_count() == d)
    return IdealNumerics(delta.n, d, delta.n - d, None if ideal.is_zero else indeg(ideal), e)


def power_multiplicity(e: int, c: int, power: int) -> int:
    """``e(S/I^ℓ) = e * C(c+ℓ-1, c)``."""
    if e < 1 or c < 0 or power < 1:
        raise PreconditionFailed(f"need e >= 1, c >= 0, power >= 1 (got {e}, {c}, {power})")
    return e * comb(c + power - 1, c)


def gy_lower_bound(c: int, q: int, d: int, cohdims: Sequence[int | None]) -> int:
    """Lower bound on ``e(S/I)`` for a Buchsbaum ``S/I``.

    ``cohdims[i-1]`` is ``dim H^i_m(S/I)`` for ``i = 1..d-1``; ``None`` marks
    an infinite-length module, for which the bound does not apply.
    """
    if c < 2 or q < 2 or d < 1:
        raise PreconditionFailed(f"need c >= 2, q >= 2, d >= 1 (got {c}, {q}, {d})")
    if len(cohdims) != d - 1:
        raise DimensionMismatch(f"expected {d - 1} cohomology dimensions, got {len(cohdims)}")
    if any(h is None for h in cohdims):
        raise InfiniteCohomology("a local cohomology module has infinite length")
    return comb(c + q - 2, c) + sum(comb(d - 1, i - 1) * h for i, h in enumerate(cohdims, start=1))


def buchsbaum_power_bound(c: int, q: int, power: int) -> Fraction:
    """``C(c+qℓ-2, c) / C(c+ℓ-1, c)``: what Buchsbaum ``S/I^ℓ`` forces on ``e(S/I)``."""
    if c < 2 or q < 2 or power < 1:
        raise PreconditionFailed(f"need c >= 2, q >= 2, power >= 1 (got {c}, {q}, {power})")
    return Fraction(comb(c + q * power - 2, c), comb(c + power - 1, c))


class Verdict(str, enum.Enum):
    RULED_OUT = "ruled_out"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ScreenRow:
    power: int
    bound: Fraction
    verdict: Verdict

    def to_dict(self) -> dict:
        return {"power": self.power, "bound": str(self.bound), "verdict": self.verdict.value}


def screen_buchsbaum_powers(delta: SimplicialComplex, max_power: int) -> list[ScreenRow]:
    """Powers whose Buchsbaumness the multiplicity bound excludes.

    Only strict ``e < bound`` rules a power out; the bound is necessary,
    never sufficient.
    """
    if max_power < 1:
        raise PreconditionFailed("max_power must be at least 1")
    num = numerics(delta)
    if num.c < 2 or num.q is None or num.q < 2:
        raise PreconditionFailed(f"screening needs codimension >= 2 (c = {num.c})")
    rows = []
    for power in range(1, max_power + 1):
        bound = buchsbaum_power_bound(num.c, num.q, power)
        verdict = Verdict.RULED_OUT if num.e < bound else Verdict.INCONCLUSIVE
        rows.append(ScreenRow(power, bound, verdict))
    return rows


def ci_multiplicity(delta: SimplicialComplex) -> int:
    """Product of the generator degrees of a complete-intersection ``I_Δ``."""
    blocks = complete_intersection_blocks(stanley_reisner_ideal(delta))
    if blocks is None:
        raise NotCI("Stanley-Reisner ideal is not a complete intersection")
    return prod(len(b) for b in blocks)


def ci_multiplicity_bound_holds(delta: SimplicialComplex) -> bool:
    """``e ≤ 2^d`` for a complete-intersection complex."""
    e = ci_multiplicity(delta)
    return e <= 2 ** numerics(delta).d


def lci_strict_bound_holds(delta: SimplicialComplex) -> bool:
    """``e < 2^c`` for pure, locally CI, non-CI complexes."""
    if not delta.is_pure or not is_locally_ci(delta) or is_ci_complex(delta):
        raise PreconditionFailed("needs a pure locally CI complex that is not CI")
    num = numerics(delta)
    return num.e < 2 ** num.c
