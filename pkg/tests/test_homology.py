import random

import pytest

import oracles
from conftest import all_complexes, as_oracle_input
from srlci.complex import SimplicialComplex, from_facets, gon
from srlci.errors import InputError
from srlci.homology import QQ, Field, bareiss_rank, reduced_euler_characteristic, reduced_homology


def test_field_parse():
    assert Field.parse("q") == QQ
    assert Field.parse("p:2") == Field(2)
    assert str(Field(7)) == "GF(7)" and str(QQ) == "Q"
    with pytest.raises(InputError):
        Field.parse("p:4")
    with pytest.raises(InputError):
        Field.parse("r")


def test_homology_examples():
    assert reduced_homology(gon(5)) == {-1: 0, 0: 0, 1: 1}
    assert reduced_homology(from_facets(4, [(1, 2), (3, 4)]))[0] == 1
    assert reduced_homology(SimplicialComplex.simplex(4)) == {-1: 0, 0: 0, 1: 0, 2: 0, 3: 0}
    assert reduced_homology(()) == {}
    assert reduced_homology((0,)) == {-1: 1}


def test_torsion_differs_by_field():
    # six-vertex triangulation of the real projective plane
    rp2 = from_facets(6, [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                          (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)])
    assert reduced_homology(rp2, QQ).get(1, 0) == 0
    assert reduced_homology(rp2, Field(2))[1] == 1
    assert reduced_homology(rp2, Field(2))[2] == 1
    assert reduced_homology(rp2, Field(3)).get(2, 0) == 0


def test_bareiss_matches_fraction_oracle():
    rng = random.Random(5)
    for _ in range(200):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        assert bareiss_rank(rows, c) == oracles.rank_fraction(rows)


def test_homology_matches_oracle():
    for delta in all_complexes(5):
        n, facets = as_oracle_input(delta)
        faces = oracles.face_set(n, facets)
        for char, fld in ((0, QQ), (2, Field(2))):
            want = {k: v for k, v in oracles.reduced_betti(faces, char).items() if v}
            got = {k: v for k, v in reduced_homology(delta, fld).items() if v}
            assert got == want


def test_euler_poincare():
    for delta in all_complexes(6):
        h = reduced_homology(delta)
        assert sum((-1) ** k * v for k, v in h.items()) == reduced_euler_characteristic(delta.facets)
