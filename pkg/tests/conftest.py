from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


def F(x):
    return Fraction(x)
