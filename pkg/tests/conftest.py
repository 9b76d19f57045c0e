import pytest

from bipstab.roots import SolverConfig


@pytest.fixture
def cfg():
    return SolverConfig()


@pytest.fixture
def extended_cfg():
    return SolverConfig(precision="extended")
