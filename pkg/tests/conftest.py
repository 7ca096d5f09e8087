import sys

import numpy as np
import pytest

from metric_complements import HPolytope, VPolytope


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def unit_square():
    return HPolytope.box_from_bounds([0, 0], [1, 1])


@pytest.fixture
def triangle():
    return VPolytope([[0, 0], [1, 0], [0, 1]])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
