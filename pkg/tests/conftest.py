import numpy as np
import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running statistical or streaming checks")


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
