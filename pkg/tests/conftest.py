import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from valchain.groundfield import PAdicRationals, Polynomial, RationalFunctions
from valchain.ratfunc import RatFunc

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

Q2 = PAdicRationals(2)
Q3 = PAdicRationals(3)
F2T = RationalFunctions(2)
F3T = RationalFunctions(3)


def rationals(p: int):
    return st.builds(
        lambda n, k, u: Fraction(n * p ** max(k, 0), u * p ** max(-k, 0)),
        st.integers(-40, 40), st.integers(-3, 4), st.sampled_from([1, 3, 5, 7, 11] if p != 3 else [1, 2, 5, 7]),
    )


def ratfuncs(p: int):
    digits = st.lists(st.integers(0, p - 1), min_size=1, max_size=4)
    return st.builds(lambda n, d: RatFunc(p, n, [1] + d[:-1] if d else [1]), digits,
                     st.lists(st.integers(0, p - 1), max_size=2))


def elements(field):
    return rationals(field.p) if isinstance(field, PAdicRationals) else ratfuncs(field.p)


def polys(field, max_degree=6, min_degree=0, monic=False, nonzero=True):
    def build(cs, lead):
        return Polynomial(field, list(cs) + [field.one if monic else lead])
    lead = elements(field).filter(bool)
    return st.integers(min_degree, max_degree).flatmap(
        lambda d: st.builds(build, st.lists(elements(field), min_size=d, max_size=d), lead)
    )
