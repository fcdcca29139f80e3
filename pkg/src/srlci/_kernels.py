"""Kernel dispatch: compiled extension when available, Python otherwise.

Set ``SRLCI_PURE_PYTHON=1`` to force the fallback.  Inputs whose masks do
not fit in 64 bits always take the Python path.
"""

import os

from . import _pykernels

_impl = _pykernels
BACKEND = "python"
if not os.environ.get("SRLCI_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass


def canonical_form(n, facets):
    if n > 64:
        return _pykernels.canonical_form(n, facets)
    return _impl.canonical_form(n, facets)


def refine_colors(n, facets):
    if n > 64:
        return _pykernels.refine_colors(n, facets)
    return _impl.refine_colors(n, facets)


def rank_mod_p(rows, ncols, p):
    if p >= 1 << 31:
        return _pykernels.rank_mod_p(rows, ncols, p)
    return _impl.rank_mod_p(rows, ncols, p)


def filter_faces(faces, must_contain, witnesses, n):
    if n > 64:
        return _pykernels.filter_faces(faces, must_contain, witnesses)
    return _impl.filter_faces(faces, must_contain, witnesses)
