import numpy as np
import pytest

from hybridmac import default_timing


@pytest.fixture
def params():
    return default_timing()


@pytest.fixture
def params_100ms():
    return default_timing(t_frame=100_000.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
