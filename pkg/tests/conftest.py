"""Shared fixtures: cached catalog cases and deterministic RNG."""

import numpy as np
import pytest

from sigmafluid.catalog import CASE_NAMES, load_case

_CASE_CACHE = {}


def get_case(name, **params):
    key = (name, tuple(sorted(params.items())))
    if key not in _CASE_CACHE:
        _CASE_CACHE[key] = load_case(name, **params)
    return _CASE_CACHE[key]


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)


@pytest.fixture(params=CASE_NAMES)
def catalog_case(request):
    return get_case(request.param)
