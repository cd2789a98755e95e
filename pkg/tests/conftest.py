import os
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from awlab.poly import Poly  # noqa: E402
from awlab.scalar import QContext, Scalar  # noqa: E402

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

T_VALUES = (Fraction(1, 2), Fraction(2, 3))

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero())


def polys(max_deg: int = 6):
    return st.lists(scalars, min_size=0, max_size=max_deg + 1).map(Poly)


lattice_t = st.sampled_from(
    [Fraction(1, 2), Fraction(2, 3), Fraction(1, 3), Fraction(3, 4), Fraction(2, 5)]
)


@pytest.fixture(params=T_VALUES, ids=lambda t: f"t={t}")
def ctx(request):
    return QContext(request.param)


@pytest.fixture
def half():
    return QContext(Fraction(1, 2))
