import pytest
from hypothesis import HealthCheck, settings, strategies as st

from permbij.perm import class_members

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def perms(min_size=0, max_size=9):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


def class_perms(pattern, min_size=0, max_size=8):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.sampled_from(class_members(n, pattern))
    )


def P(text):
    """Permutation from compact digits, or space separated when longer than nine."""
    return tuple(int(t) for t in (text.split() if " " in text else text))


@pytest.fixture(scope="session")
def catalog():
    from permbij.stats import build_catalog

    return build_catalog()
