"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from line_dispersal.core.model import Configuration, ProblemInstance


@st.composite
def instances(draw, max_n=8, max_coord=20, max_delta=5, min_n=0):
    n = draw(st.integers(min_n, max_n))
    values = draw(st.lists(st.integers(-max_coord, max_coord), min_size=n, max_size=n))
    delta = draw(st.integers(1, max_delta))
    return ProblemInstance.from_values(values, delta)


@st.composite
def independent_configurations(draw, max_n=8):
    """(instance, independent configuration) pairs with gaps of exactly delta mixed in."""
    inst = draw(instances(max_n=max_n))
    if inst.n == 0:
        return inst, Configuration(())
    start = draw(st.integers(-30, 30))
    extras = draw(st.lists(st.sampled_from([0, 0, 1, 2, 5]), min_size=inst.n - 1, max_size=inst.n - 1))
    positions = [start]
    for extra in extras:
        positions.append(positions[-1] + inst.delta + extra)
    return inst, Configuration(tuple(positions))
