import numpy as np
import pytest

from h22 import TruncatedSeries


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def poly(*coeffs) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs(list(coeffs))


def random_poly(rng, max_degree=32):
    deg = int(rng.integers(0, max_degree + 1))
    return TruncatedSeries(
        rng.uniform(-1, 1, deg + 1) + 1j * rng.uniform(-1, 1, deg + 1)
    )
