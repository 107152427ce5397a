import pytest

from qrwe.verify import cached_quartic_census


@pytest.fixture(scope="session")
def quartic_census_for():
    """Session-wide census cache; the big fields (q = 25, 27) take a few
    seconds each and are shared by several test modules."""
    return cached_quartic_census
