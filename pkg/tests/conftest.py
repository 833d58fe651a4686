import random
from functools import reduce
from math import gcd

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("suite")


def _coprime(xs: list[int]) -> bool:
    return reduce(gcd, xs) == 1


@st.composite
def generator_tuples(draw, max_value: int = 18, max_size: int = 4):
    """Small valid generator lists: distinct, >= 2, gcd 1."""
    k = draw(st.integers(2, max_size))
    xs = draw(
        st.lists(
            st.integers(2, max_value), min_size=k, max_size=k, unique=True
        ).filter(_coprime)
    )
    return tuple(xs)


small_p = st.integers(0, 3)


def acceptance_instances(count: int = 200, seed: int = 20260810):
    """The fixed random instance pool used by the acceptance suite:
    k in {2,3,4}, generators <= 30, gcd 1, p <= 5."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice((2, 3, 4))
        elems = tuple(rng.sample(range(2, 31), k))
        if reduce(gcd, elems) != 1:
            continue
        out.append((elems, rng.randint(0, 5)))
    return out
