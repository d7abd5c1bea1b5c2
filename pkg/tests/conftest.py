from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from hyperquat.quaternions import Biquaternion, Quaternion

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda r: r != 0)

quats = st.builds(Quaternion, small_ints, small_ints, small_ints, small_ints)
rational_quats = st.builds(Quaternion, rationals, rationals, rationals, rationals)
nonzero_quats = quats.filter(lambda q: not q.is_zero())
biquats = st.builds(Biquaternion, quats, quats)


def q(*c):
    return Quaternion(*c)


def F(p, d=1):
    return Fraction(p, d)
