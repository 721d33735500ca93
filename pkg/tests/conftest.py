import pytest

from line_dispersal.core.model import ProblemInstance


def instance_of(values, delta, scale=1):
    """Instance from scaled integers given in input order."""
    return ProblemInstance.from_values(values, delta, scale)


@pytest.fixture
def make_instance():
    return instance_of
