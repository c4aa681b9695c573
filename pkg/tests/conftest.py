import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semitop.catalog import enumerate_topologies, named_space
from semitop.semi import SemiAnalysis


@pytest.fixture(scope="session")
def e1():
    return named_space("e1")


@pytest.fixture(scope="session")
def e33():
    return named_space("e33")


@pytest.fixture(scope="session")
def e3a():
    return named_space("e3a")


@pytest.fixture(scope="session")
def sierpinski():
    return named_space("sierpinski")


@pytest.fixture(scope="session")
def e1_an(e1):
    return SemiAnalysis(e1)


@pytest.fixture(scope="session")
def e33_an(e33):
    return SemiAnalysis(e33)


@pytest.fixture(scope="session")
def spaces3():
    return list(enumerate_topologies(3))


@pytest.fixture(scope="session")
def spaces4():
    return list(enumerate_topologies(4))
