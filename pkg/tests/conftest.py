import pytest

from psituples import build_sieve


@pytest.fixture(scope="session")
def sieve_1k():
    return build_sieve(1_000)


@pytest.fixture(scope="session")
def sieve_10k():
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def sieve_100k():
    return build_sieve(100_000)


@pytest.fixture(scope="session")
def sieve_1m():
    return build_sieve(1_000_000)
