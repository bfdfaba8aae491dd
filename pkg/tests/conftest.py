import numpy as np
import pytest

import memfric


@pytest.fixture(scope="session")
def bench_structure():
    return memfric.build_string(1.0, 0.1, 0.4, 160)


@pytest.fixture(scope="session")
def bench_law():
    return memfric.FrictionLaw(mu=4.0, kappa=0.32, sigma=1.0, v0=1.5)


@pytest.fixture(scope="session")
def bench_y0():
    return np.array([-2.9224, -2.7668])


@pytest.fixture(scope="session")
def bench_table(bench_structure):
    return memfric.build_kernel_table(bench_structure, 5e-4, 8.0)


@pytest.fixture(scope="session")
def bench_traj(bench_structure, bench_law, bench_y0):
    return memfric.simulate(bench_structure, bench_law, bench_y0, 8.0, 5e-4)
