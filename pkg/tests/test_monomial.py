import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import all_complexes, as_oracle_input, complexes
from srlci.classify import is_locally_ci
from srlci.complex import SimplicialComplex, from_facets, gon, pointed_path
from srlci.errors import DegreeOneGenerator, NotSquarefree, ZeroIdeal
from srlci.monomial import (
    MonomialIdeal,
    complete_intersection_blocks,
    complex_from_ideal,
    contains,
    degree,
    in_colon_by_max_ideal,
    indeg,
    is_complete_intersection,
    max_generator_degree,
    parse_monomial,
    power_generators,
    stanley_reisner_ideal,
)

PATH4_SQUARE = [
    (2, 0, 2, 0),
    (2, 0, 1, 1),
    (2, 0, 0, 2),
    (1, 1, 1, 1),
    (1, 1, 0, 2),
    (0, 2, 0, 2),
]


def ideal(n, *texts):
    return MonomialIdeal.from_generators(n, [parse_monomial(t, n) for t in texts])


def test_stanley_reisner_examples(path4, gon5):
    assert stanley_reisner_ideal(path4) == ideal(4, "x1*x3", "x1*x4", "x2*x4")
    g = stanley_reisner_ideal(gon5)
    assert g == ideal(5, "x1*x3", "x1*x4", "x2*x4", "x2*x5", "x3*x5")
    assert stanley_reisner_ideal(SimplicialComplex.simplex(3)).is_zero


def test_complex_from_ideal_examples(path4):
    assert complex_from_ideal(ideal(4, "x1*x3", "x1*x4", "x2*x4")) == path4
    assert complex_from_ideal(MonomialIdeal.zero(4)) == SimplicialComplex.simplex(4)
    assert complex_from_ideal(ideal(2, "x1*x2")).facet_labels() == [(1,), (2,)]


def test_complex_from_ideal_errors():
    with pytest.raises(NotSquarefree):
        complex_from_ideal(ideal(3, "x1^2*x2"))
    with pytest.raises(DegreeOneGenerator):
        complex_from_ideal(ideal(3, "x1"))


def test_sr_round_trip_exhaustive():
    for delta in all_complexes(6):
        assert complex_from_ideal(stanley_reisner_ideal(delta)) == delta


def test_power_generators_example_table(path4):
    sq = power_generators(stanley_reisner_ideal(path4), 2)
    assert list(sq.gens) == PATH4_SQUARE
    i = stanley_reisner_ideal(path4)
    assert power_generators(i, 1) == i
    assert power_generators(MonomialIdeal.zero(3), 4).is_zero


def test_power_generators_5gon_cube_count(gon5):
    # brute-force product expansion + minimalization gives 35
    assert len(power_generators(stanley_reisner_ideal(gon5), 3).gens) == 35


def test_contains_examples(gon5):
    cube = power_generators(stanley_reisner_ideal(gon5), 3)
    assert not contains(cube, (1, 1, 1, 1, 1))
    i = stanley_reisner_ideal(gon5)
    assert all(contains(i, g) for g in i.gens)
    assert not contains(i, (0,) * 5)


def test_colon_examples(gon5, path4):
    cube = power_generators(stanley_reisner_ideal(gon5), 3)
    assert in_colon_by_max_ideal(cube, (1, 1, 1, 1, 1))
    i = stanley_reisner_ideal(gon5)
    assert all(in_colon_by_max_ideal(i, g) for g in i.gens)
    # x1x2x3x4 is itself a generator of I^2 for the path, so it lies in I^2 : m
    sq = power_generators(stanley_reisner_ideal(path4), 2)
    assert contains(sq, (1, 1, 1, 1))
    assert in_colon_by_max_ideal(sq, (1, 1, 1, 1))


def test_colon_matches_bruteforce(path4):
    n, facets = as_oracle_input(path4)
    gens = oracles.sr_generators(n, oracles.face_set(n, facets))
    sq = power_generators(stanley_reisner_ideal(path4), 2)
    for m in itertools.product(range(3), repeat=4):
        bumped = [tuple(m[j] + (j == i) for j in range(4)) for i in range(4)]
        want = all(oracles.in_power(gens, 2, b) for b in bumped)
        assert in_colon_by_max_ideal(sq, m) == want
        assert contains(sq, m) == oracles.in_power(gens, 2, m)


def test_complete_intersection_examples(gon5):
    assert complete_intersection_blocks(ideal(5, "x1*x2", "x3*x4*x5")) == [(1, 2), (3, 4, 5)]
    assert not is_complete_intersection(stanley_reisner_ideal(gon5))
    assert complete_intersection_blocks(MonomialIdeal.zero(3)) == []
    with pytest.raises(NotSquarefree):
        is_complete_intersection(ideal(2, "x1^2*x2"))


def test_indeg_examples(gon5):
    i = stanley_reisner_ideal(gon5)
    assert indeg(i) == 2
    assert indeg(ideal(3, "x1*x2*x3")) == 3
    with pytest.raises(ZeroIdeal):
        indeg(MonomialIdeal.zero(2))


def test_indeg_of_powers():
    for delta in all_complexes(5):
        i = stanley_reisner_ideal(delta)
        if i.is_zero:
            continue
        for power in (1, 2, 3):
            p = power_generators(i, power)
            assert indeg(p) == power * indeg(i)
            assert all(power * indeg(i) <= degree(g) <= power * max_generator_degree(i) for g in p.gens)
            assert all(e <= power for g in p.gens for e in g)


def test_power_membership_matches_product_expansion():
    """m ∈ I^ℓ by minimal generators iff by raw products, n ≤ 5, ℓ ≤ 3."""
    for delta in all_complexes(5):
        i = stanley_reisner_ideal(delta)
        if i.is_zero or delta.n < 3:
            continue
        n = delta.n
        for power in (1, 2, 3):
            prods = oracles.power_products(list(i.gens), power)
            mins = power_generators(i, power)
            box = itertools.product(range(power + 1), repeat=n)
            for m in box:
                want = any(all(p[k] <= m[k] for k in range(n)) for p in prods)
                assert contains(mins, m) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=n), min_size=1, max_size=5),
    st.permutations(list(range(n))))))
def test_ci_invariant_under_permutation(data):
    n, supports, perm = data
    gens = [tuple(1 if i in s else 0 for i in range(n)) for s in supports]
    moved = [tuple(g[perm[i]] for i in range(n)) for g in gens]
    a = MonomialIdeal.from_generators(n, gens)
    b = MonomialIdeal.from_generators(n, moved)
    assert is_complete_intersection(a) == is_complete_intersection(b)


def _lci_complexes(max_n):
    return [d for d in all_complexes(max_n) if is_locally_ci(d)]


def test_two_quadrics_share_variable_on_lci_non_ci_connected():
    """Connected locally CI non-CI complexes have two quadric generators with a common variable."""
    for delta in _lci_complexes(6):
        i = stanley_reisner_ideal(delta)
        if is_complete_intersection(i) or not delta.is_connected:
            continue
        quads = [g for g in i.gens if degree(g) == 2]
        assert any(
            any(x and y for x, y in zip(a, b)) for a, b in itertools.combinations(quads, 2)
        ), delta


def test_two_quadrics_share_variable_on_pure_lci_non_ci():
    for delta in _lci_complexes(6):
        i = stanley_reisner_ideal(delta)
        if is_complete_intersection(i) or not delta.is_pure:
            continue
        quads = [g for g in i.gens if degree(g) == 2]
        assert any(any(x and y for x, y in zip(a, b)) for a, b in itertools.combinations(quads, 2)), delta


def test_three_vertex_rule_on_lci():
    """If X1*Y and X2*Y are in I, every other Z has X1*Z, X2*Z or Y*Z in I."""
    for delta in _lci_complexes(6):
        n = delta.n
        nonedge = {(a, b) for a in range(n) for b in range(n) if a != b and not delta.is_face_mask((1 << a) | (1 << b))}
        for x1, x2, y in itertools.permutations(range(n), 3):
            if x1 > x2 or (x1, y) not in nonedge or (x2, y) not in nonedge:
                continue
            for z in range(n):
                if z in (x1, x2, y):
                    continue
                assert (x1, z) in nonedge or (x2, z) in nonedge or (y, z) in nonedge


def test_lci_sample_is_nonempty():
    assert len(_lci_complexes(6)) > 50
    assert is_locally_ci(gon(5)) and is_locally_ci(pointed_path(5))
    assert len(complexes(6)) == 16143
    assert not is_locally_ci(from_facets(5, [(1, 2, 3), (3, 4, 5)]))
