"""Shared fixtures for staeckel_systems tests."""

from __future__ import annotations

import pytest

from staeckel_systems.models.phase_state import PhaseState
from staeckel_systems.models.sampling import sample_points
from staeckel_systems.models.system import SystemId, SystemParams, make_system

# Generic couplings per catalog entry; curved entries keep the open domain
# ends away from the default sampling box.
DEFAULT_PARAMS: dict[str, dict[str, float]] = {
    "free": {"alpha": 0.7},
    "flat-oscillator": {"beta": 0.8, "gamma": 0.3},
    "flat-kc": {"delta": -1.2, "xi": 0.4},
    "curved-kc": {"alpha": 1.0},
    "darboux3": {"lambda": 0.3, "alpha": -2.0},
    "spherical-osc": {"alpha": 0.5},
    "taubnut": {"eta": -1.0, "alpha": 0.3},
}

ALL_SYSTEMS = list(DEFAULT_PARAMS)
CURVED_SYSTEMS = ["curved-kc", "darboux3", "spherical-osc", "taubnut"]


def build(name: str, dim: int, **params: float):
    """Catalog system by CLI name, with DEFAULT_PARAMS overridden by ``params``."""
    values = {**DEFAULT_PARAMS[name], **params}
    return make_system(SystemId.from_name(name), dim, SystemParams.from_mapping(values))


@pytest.fixture
def system_factory():
    return build


@pytest.fixture(scope="session")
def curved_specs_n3():
    """The four curved systems at N=3 with default couplings."""
    return {name: build(name, 3) for name in CURVED_SYSTEMS}


@pytest.fixture(scope="session")
def curved_kc3():
    return build("curved-kc", 3)


@pytest.fixture(scope="session")
def curved_kc3_points(curved_kc3):
    return sample_points(curved_kc3, 20, seed=11, r_min_margin=0.1)


@pytest.fixture
def radial_point3():
    """q = (1, 0, 0), p = (1, 0, 0)."""
    return PhaseState(q=(1.0, 0.0, 0.0), p=(1.0, 0.0, 0.0))
