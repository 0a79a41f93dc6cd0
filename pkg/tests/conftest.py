import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from curvelab import BresinskyData  # noqa: E402


@pytest.fixture
def basic_data():
    """Parameters of the (19,29,26,43) curve; case 2, not ACM."""
    return BresinskyData(d21=2, d41=3, d32=3, d42=1, d13=2, d23=3, d14=1, d34=1)


@pytest.fixture
def big_data():
    """Parameters of the (1191,1239,582,2303) curve; case 2, ACM."""
    return BresinskyData(d21=9, d41=7, d32=1, d42=10, d13=9, d23=5, d14=6, d34=3)


def family_data(a: int) -> BresinskyData:
    """Parameters of the (2a^2+a-2, 2a+1, 2a+3, 2a^2+a-1) family, a >= 2;
    case 1, ACM exactly for a = 2."""
    return BresinskyData(d21=1, d41=1, d32=1, d42=a, d13=a - 1, d23=1, d14=1, d34=1)


def even_family_data(a: int) -> BresinskyData:
    """Parameters of the (a^2+5a, 7a+6, 6a+1, 3a^2+3a-2) family, even a > 2;
    case 2, ACM at every coprime shift."""
    return BresinskyData(d21=1, d41=2, d32=1, d42=a - 1, d13=2, d23=a, d14=1, d34=2)


@pytest.fixture
def noncm_a2():
    return family_data(2)


@pytest.fixture
def noncm_a3():
    return family_data(3)
