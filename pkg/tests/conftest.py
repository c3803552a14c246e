import numpy as np
import pytest


@pytest.fixture(scope="session")
def z_grid():
    """Probe abscissas strictly inside (0, 1), z = 0.01 .. 0.99."""
    return [round(0.01 * k, 2) for k in range(1, 100)]


@pytest.fixture(scope="session")
def pair_grid_50():
    """50 pairs at x + y = 2 with log-spaced half-spreads."""
    return [(1.0 - float(z), 1.0 + float(z)) for z in np.geomspace(1e-4, 0.99, 50)]
