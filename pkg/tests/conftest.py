import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bcfusion.fusion import AlcoveParams, FusionTable
from bcfusion.rootdata import make_root_datum


@pytest.fixture(scope="session")
def b2():
    return make_root_datum("B", 2)


@pytest.fixture(scope="session")
def b3():
    return make_root_datum("B", 3)


@pytest.fixture(scope="session")
def params29():
    return AlcoveParams(make_root_datum("B", 2), 9)


@pytest.fixture(scope="session")
def params211():
    return AlcoveParams(make_root_datum("B", 2), 11)


@pytest.fixture(scope="session")
def params313():
    return AlcoveParams(make_root_datum("B", 3), 13)


@pytest.fixture(scope="session")
def table29(params29):
    return FusionTable.build(params29)


@pytest.fixture(scope="session")
def table211(params211):
    return FusionTable.build(params211)


@pytest.fixture(scope="session")
def table313(params313):
    return FusionTable.build(params313)


def w(*entries):
    """Shorthand weight constructor from true coordinates given as strings or numbers."""
    from fractions import Fraction

    from bcfusion.rootdata import Weight

    return Weight.from_entries([Fraction(e) for e in entries])
