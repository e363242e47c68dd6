import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_unit_state(rng, spec):
    """Random complex state in the (N, degree+1) layout, norm 1."""
    state = rng.normal(size=(spec.vertex_count, spec.coin_dim, 2)) @ np.array([1.0, 1.0j])
    return state / np.linalg.norm(state)
