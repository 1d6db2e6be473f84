import time

import pytest

from biramsey.solvers import brute_force_F, brute_force_f


@pytest.fixture(scope="session")
def oracle_grid():
    """Worst-case values over the exact-formula grid: n in 3..5, m in 0..n.

    Shared between the formula, monotonicity, and ordering checks; the
    elapsed wall time rides along for the runtime ceiling.
    """
    start = time.monotonic()
    grid = {}
    for n in (3, 4, 5):
        for m in range(n + 1):
            grid[(n, m)] = (brute_force_f(n, m).value, brute_force_F(n, m).value)
    return grid, time.monotonic() - start
