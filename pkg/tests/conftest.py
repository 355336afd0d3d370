import sys

import pytest

from parfus.group_core import (
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_symmetric,
)


def klein():
    return make_direct_product(make_cyclic(2), make_cyclic(2))


def all_small_groups():
    """One group of each isomorphism type up to order 8."""
    z = make_cyclic
    return [
        z(1), z(2), z(3), z(4), klein(), z(5), z(6), make_symmetric(3), z(7), z(8),
        make_direct_product(z(2), z(4)),
        make_direct_product(z(2), klein()),
        make_dihedral(4),
        make_dicyclic(2),
    ]


SMALL = all_small_groups()
UP_TO_6 = [G for G in SMALL if G.order <= 6]
TINY = [G for G in SMALL if G.order <= 4]


@pytest.fixture
def c3():
    return make_cyclic(3)


@pytest.fixture
def z4():
    return make_cyclic(4)


@pytest.fixture
def v4():
    return klein()


@pytest.fixture
def s3():
    return make_symmetric(3)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance gate lines after the run, uncaptured."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
