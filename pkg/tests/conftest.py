import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_int = st.integers(-5, 5).map(Fraction)
small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
entry = st.one_of(small_int, small_int, small_frac)


def matrices(rows, cols, elements=entry):
    return st.lists(st.lists(elements, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda m: tuple(map(tuple, m)))


@st.composite
def square(draw, max_order=5, min_order=1, elements=entry):
    n = draw(st.integers(min_order, max_order))
    return draw(matrices(n, n, elements))


@st.composite
def square_pair(draw, max_order=5, min_order=1, uniform=False, elements=entry):
    a = draw(square(max_order, min_order, elements))
    if uniform:
        b = draw(matrices(len(a), len(a), elements))
    else:
        b = draw(square(max_order, min_order, elements))
    return a, b


@pytest.fixture
def data_dir():
    return DATA
