import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from srlci.complex import from_facets, gon, pointed_path  # noqa: E402
from srlci.enumeration import complexes_up_to_iso  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def complexes(n, max_dim=None):
    return tuple(complexes_up_to_iso(n, max_dim))


def all_complexes(max_n):
    for n in range(1, max_n + 1):
        yield from complexes(n)


def as_oracle_input(delta):
    doc = delta.to_document()
    return doc["vertices"], [tuple(f) for f in doc["facets"]]


@pytest.fixture
def gon5():
    return gon(5)


@pytest.fixture
def path4():
    return pointed_path(4)


@pytest.fixture
def glued_triangles():
    return from_facets(5, [(1, 2, 3), (3, 4, 5)])


@pytest.fixture
def star():
    return from_facets(4, [(1, 2), (1, 3), (1, 4)])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
