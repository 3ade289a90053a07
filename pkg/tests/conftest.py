import logging

import numpy as np
import pytest

from qheat.constants.bath_kind import BathKind
from qheat.schemas.bath import BathSpec
from qheat.schemas.rates import Populations
from qheat.schemas.system import SystemParams

SEED = 20111004


@pytest.fixture(scope="function")
def default_params() -> SystemParams:
    return SystemParams(epsilon=0.2, kappa=1.0)


@pytest.fixture(scope="function")
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture(scope="function")
def random_point(rng):
    """Factory of random (params, left, right) nonequilibrium points.

    Gaps stay in [0.05, 3] and temperatures in [0.25, 5], so no population
    drops below ~1e-6.
    """
    def make():
        while True:
            epsilon, kappa = rng.uniform(0.05, 1.5, size=2)
            if abs(epsilon - kappa) >= 0.05:
                break
        while True:
            t_left, t_right = rng.uniform(0.25, 5.0, size=2)
            if abs(t_left - t_right) > 1e-3:
                break
        gamma_left, gamma_right = np.exp(rng.uniform(np.log(0.05), np.log(20.0), size=2))
        kind_left, kind_right = rng.choice([BathKind.BOSON, BathKind.SPIN], size=2)

        params = SystemParams(epsilon=float(epsilon), kappa=float(kappa))
        left = BathSpec(kind=kind_left, gamma=float(gamma_left), temperature=float(t_left))
        right = BathSpec(kind=kind_right, gamma=float(gamma_right), temperature=float(t_right))
        return params, left, right

    logging.info(f"random points seeded with {SEED}")
    return make


@pytest.fixture(scope="function")
def random_populations(rng):
    def make() -> Populations:
        weights = rng.dirichlet(np.ones(4))
        weights /= weights.sum()
        return Populations(p=tuple(float(w) for w in weights))

    return make
