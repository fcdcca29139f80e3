"""Monomial ideals given by minimal generators.

A monomial is a tuple of nonnegative exponents.  Variable ``X_{i+1}``
corresponds to internal vertex ``i`` of the complex the ideal came from.
"""

from __future__ import annotations

import re
from itertools import product
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .complex import SimplicialComplex, mask_of, members
from .errors import DegreeOneGenerator, DimensionMismatch, InputError, NotSquarefree, ZeroIdeal

Monomial = tuple[int, ...]


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def support(m: Monomial) -> int:
    """Bit mask of the variables occurring in ``m``."""
    return mask_of(i for i, e in enumerate(m) if e)


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def minimalize(monos: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by another one; canonical order."""
    cands = sorted(set(monos), key=lambda m: (sum(m), m))
    kept: list[Monomial] = []
    for m in cands:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return sorted(kept, reverse=True)


_TOKEN = re.compile(r"^\s*[xX](\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``"x1*x3^2"`` into an exponent vector of length ``n``."""
    exps = [0] * n
    text = text.strip()
    if text == "1":
        return tuple(exps)
    for tok in text.split("*"):
        mt = _TOKEN.match(tok)
        if not mt:
            raise InputError(f"cannot parse monomial factor {tok!r} in {text!r}")
        k = int(mt.group(1))
        if not 1 <= k <= n:
            raise InputError(f"variable x{k} outside x1..x{n}")
        exps[k - 1] += int(mt.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of ``K[X_1..X_n]`` with a minimal monomial generating set.

    Generators are kept in descending lexicographic order of exponent
    vectors.
    """

    n_vars: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, n_vars: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        gl = []
        for g in gens:
            g = tuple(int(e) for e in g)
            if len(g) != n_vars:
                raise DimensionMismatch(f"generator {g} has {len(g)} exponents, expected {n_vars}")
            if any(e < 0 for e in g):
                raise InputError(f"negative exponent in {g}")
            gl.append(g)
        return cls(n_vars, tuple(minimalize(gl)))

    @classmethod
    def zero(cls, n_vars: int) -> MonomialIdeal:
        return cls(n_vars, ())

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    n = delta.n
    gens = [tuple(1 if m >> i & 1 else 0 for i in range(n)) for m in delta.minimal_nonface_masks()]
    return MonomialIdeal(n, tuple(sorted(gens, reverse=True)))


def complex_from_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the vertex sets supporting no generator."""
    n = ideal.n_vars
    supports = []
    for g in ideal.gens:
        if not is_squarefree(g):
            raise NotSquarefree(f"{format_monomial(g)} is not squarefree")
        if degree(g) < 2:
            raise DegreeOneGenerator(f"{format_monomial(g)} has degree {degree(g)}")
        supports.append(support(g))
    # grow faces level by level; a set is a face iff it contains no support
    faces = {0}
    frontier = [0]
    while frontier:
        nxt = set()
        for f in frontier:
            for v in range(n):
                g = f | (1 << v)
                if g == f or g in faces or g in nxt:
                    continue
                if not any(s & ~g == 0 for s in supports):
                    nxt.add(g)
        faces |= nxt
        frontier = list(nxt)
    return SimplicialComplex._build(n, faces, tuple(range(1, n + 1)))


def power_generators(ideal: MonomialIdeal, power: int) -> MonomialIdeal:
    """Minimal generators of ``I^power``, pruning after each multiplication."""
    if power < 1:
        raise InputError("power must be at least 1")
    if ideal.is_zero:
        return ideal
    current = list(ideal.gens)
    for _ in range(power - 1):
        current = minimalize(multiply(a, b) for a in current for b in ideal.gens)
    return MonomialIdeal(ideal.n_vars, tuple(current))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != ideal.n_vars:
        raise DimensionMismatch(f"monomial has {len(m)} exponents, ideal has {ideal.n_vars} variables")
    return any(divides(g, m) for g in ideal.gens)


def in_colon_by_max_ideal(ideal: MonomialIdeal, m: Monomial) -> bool:
    """True iff ``X_i * m`` lies in the ideal for every variable."""
    for i in range(ideal.n_vars):
        bumped = m[:i] + (m[i] + 1,) + m[i + 1 :]
        if not contains(ideal, bumped):
            return False
    return True


def complete_intersection_blocks(ideal: MonomialIdeal) -> list[tuple[int, ...]] | None:
    """Variable blocks (1-based) of a squarefree complete intersection, else None.

    A squarefree monomial ideal is a complete intersection exactly when its
    minimal generators have pairwise disjoint supports.
    """
    if not ideal.is_squarefree:
        raise NotSquarefree("complete-intersection test needs a squarefree ideal")
    seen = 0
    blocks = []
    for g in ideal.gens:
        s = support(g)
        if s & seen:
            return None
        seen |= s
        blocks.append(tuple(i + 1 for i in members(s)))
    return sorted(blocks)


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    return complete_intersection_blocks(ideal) is not None


def indeg(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ZeroIdeal("initial degree of the zero ideal is undefined")
    return min(degree(g) for g in ideal.gens)


def max_generator_degree(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        raise ZeroIdeal("zero ideal has no generators")
    return max(degree(g) for g in ideal.gens)


def find_socle_witness(ideal: MonomialIdeal, max_exp: int) -> Monomial | None:
    """First monomial (exponents ≤ max_exp) outside the ideal but in ``I : m``."""
    for m in product(range(max_exp + 1), repeat=ideal.n_vars):
        if not contains(ideal, m) and in_colon_by_max_ideal(ideal, m):
            return m
    return None
