import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from asmkit.field import Cyclo12

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=50))
nonzero_rationals = rationals.filter(lambda x: x != 0)
cyclos = st.builds(Cyclo12, rationals, rationals, rationals, rationals)
nonzero_cyclos = cyclos.filter(lambda x: x != 0)


def rand_rational(rng):
    return Fraction(rng.randint(1, 50), rng.randint(1, 50)) * rng.choice((1, -1))


@pytest.fixture
def rng():
    return random.Random(20240501)
