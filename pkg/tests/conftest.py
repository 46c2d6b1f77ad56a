import numpy as np
import pytest
from hypothesis import settings

from fraccournot.cournot import DuopolyParams

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# parameter set of the numerical experiments
SECTION5 = DuopolyParams(alpha1=0.45, alpha2=0.12, b=6.0, d=4.1, c1=0.2, c2=0.3)


@pytest.fixture
def params():
    return SECTION5


def classical_iterate(f, x0, n_steps):
    """Direct iteration x(n+1) = x(n) + f(x(n)); the ν = 1 oracle."""
    xs = [np.asarray(x0, dtype=float)]
    for _ in range(n_steps):
        xs.append(xs[-1] + f(xs[-1]))
    return np.array(xs)
