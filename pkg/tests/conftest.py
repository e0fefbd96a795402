"""Shared fixtures: the k=3, m <= 6 enumeration pool and a radius cache."""

import os

import pytest

from hyperspec import (
    IterationOptions,
    canonicalize,
    enumerate_linear_unicyclic,
    spectral_radius_tensor,
)

POOL_OPTS = IterationOptions(tolerance=1e-11, max_iterations=200000)


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HYPERSPEC_RUN_M8") == "1":
        return
    skip = pytest.mark.skip(reason="set HYPERSPEC_RUN_M8=1 to run full m=8 enumeration")
    for item in items:
        if "bigpool" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def pool_by_m():
    return {m: enumerate_linear_unicyclic(3, m) for m in (3, 4, 5, 6)}


@pytest.fixture(scope="session")
def rho_of():
    """Spectral radius by isomorphism class, cached on the canonical form."""
    cache = {}

    def get(h):
        c = canonicalize(h)
        key = (c.k, c.edges)
        if key not in cache:
            cache[key] = spectral_radius_tensor(c, POOL_OPTS)
        return cache[key]

    return get
