import importlib
import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from srlci import _kernels, _pykernels
from srlci.complex import maximal_masks
from srlci.enumeration import complexes_up_to_iso

try:
    from srlci import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


@st.composite
def facet_lists(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    extra = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=8))
    return n, maximal_masks([1 << v for v in range(n)] + extra)


@st.composite
def matrices(draw):
    r = draw(st.integers(0, 8))
    c = draw(st.integers(1, 8))
    rows = draw(st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r))
    return rows, c


def permute(facets, perm):
    out = []
    for f in facets:
        m = 0
        for v, p in enumerate(perm):
            if f >> v & 1:
                m |= 1 << p
        out.append(m)
    return out


@settings(max_examples=150, deadline=None)
@given(facet_lists(), st.randoms(use_true_random=False))
def test_canonical_form_invariant(data, rnd):
    n, facets = data
    perm = list(range(n))
    rnd.shuffle(perm)
    assert _pykernels.canonical_form(n, facets) == _pykernels.canonical_form(n, permute(facets, perm))
    assert _kernels.canonical_form(n, facets) == _kernels.canonical_form(n, permute(facets, perm))


@settings(max_examples=150, deadline=None)
@given(facet_lists(), facet_lists())
def test_canonical_form_separates(a, b):
    """Equal forms imply an actual relabeling maps one facet set onto the other."""
    (na, fa), (nb, fb) = a, b
    if na != nb or _pykernels.canonical_form(na, fa) != _pykernels.canonical_form(nb, fb):
        return
    assert any(sorted(permute(fa, p)) == sorted(fb) for p in itertools.permutations(range(na)))


@needs_ext
@settings(max_examples=200, deadline=None)
@given(facet_lists(max_n=7))
def test_canonical_parity(data):
    n, facets = data
    assert _ckernels.refine_colors(n, facets) == _pykernels.refine_colors(n, facets)
    assert _ckernels.canonical_form(n, facets) == _pykernels.canonical_form(n, facets)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(matrices(), st.sampled_from([2, 3, 5, 7, 1000003]))
def test_rank_parity(mat, p):
    rows, c = mat
    assert _ckernels.rank_mod_p(rows, c, p) == _pykernels.rank_mod_p(rows, c, p)


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rank_gf2_matches_oracle(mat):
    rows, c = mat
    assert _kernels.rank_mod_p(rows, c, 2) == oracles.rank_gf2(rows)


@needs_ext
@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, (1 << n) - 1), max_size=30),
    st.integers(0, (1 << n) - 1),
    st.lists(st.integers(1, (1 << n) - 1), max_size=10))))
def test_filter_parity(data):
    faces, must, wit = data
    assert list(_ckernels.filter_faces(faces, must, wit)) == _pykernels.filter_faces(faces, must, wit)


def test_wide_inputs_take_python_path():
    n = 70
    facets = [(1 << v) | (1 << (v + 1)) for v in range(n - 1)]
    assert _kernels.refine_colors(n, facets) == _pykernels.refine_colors(n, facets)
    wide = [1 << 69, (1 << 69) | 1, 3]
    assert _kernels.filter_faces(wide, 1, [1 << 69], n) == [3]
    big = (1 << 61) - 1
    assert _kernels.rank_mod_p([[1, 2], [2, 4]], 2, big) == 1


def test_backend_selection():
    assert _kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, SRLCI_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from srlci import _kernels; print(_kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("n,want", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graph_counts(n, want):
    assert sum(1 for _ in complexes_up_to_iso(n, max_dim=1)) == want


@pytest.mark.parametrize("n,want", [(1, 1), (2, 2), (3, 5), (4, 20), (5, 180)])
def test_complex_counts(n, want):
    assert sum(1 for _ in complexes_up_to_iso(n)) == want


def test_fallback_enumeration_agrees():
    py = importlib.import_module("srlci._pykernels")
    got = {py.canonical_form(5, list(d.facets)) for d in complexes_up_to_iso(5)}
    assert len(got) == 180
