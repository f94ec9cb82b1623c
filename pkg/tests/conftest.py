"""Shared parameter sets used across the suite.

* unit_well:    4 V0 / T = 3 so the shape parameter is exactly 1
* wide_well:    deep oscillator regime, shape parameter ~ 199
* shallow_well: near-box regime, shape parameter ~ 0.0198
* box:          zero depth, pure particle in a box
"""

import math

import pytest

from ptoscillator import PTParameters


@pytest.fixture(scope="session")
def unit_well() -> PTParameters:
    return PTParameters(mass=1.0, well_depth=0.375, half_width=math.pi / 2, hbar=1.0)


@pytest.fixture(scope="session")
def wide_well() -> PTParameters:
    return PTParameters(mass=1.0, well_depth=0.5, half_width=50 * math.pi, hbar=1.0)


@pytest.fixture(scope="session")
def shallow_well() -> PTParameters:
    return PTParameters(mass=1.0, well_depth=0.005, half_width=math.pi / 2, hbar=1.0)


@pytest.fixture(scope="session")
def box() -> PTParameters:
    return PTParameters(mass=1.0, well_depth=0.0, half_width=1.0, hbar=1.0)
