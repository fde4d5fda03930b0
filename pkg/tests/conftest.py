import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from jpgeom import catalog
from jpgeom.exactla import QQ, Field, Matrix

F5 = Field.prime(5)
F7 = Field.prime(7)

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def rationals(draw):
    num = draw(st.integers(min_value=-6, max_value=6))
    den = draw(st.integers(min_value=1, max_value=4))
    return QQ(f"{num}/{den}")


def scalars(field: Field):
    if field.is_prime:
        return st.integers(min_value=0, max_value=field.p - 1)
    return rationals()


@st.composite
def matrices(draw, field: Field, rows: int, cols: int):
    return Matrix(field, [[draw(scalars(field)) for _ in range(cols)] for _ in range(rows)])


def vectors(field: Field, n: int):
    return st.tuples(*[scalars(field) for _ in range(n)])


@pytest.fixture(scope="session")
def sl2():
    return catalog.get("sl2", F5)


@pytest.fixture(scope="session")
def sl2q():
    return catalog.get("sl2", QQ)


@pytest.fixture(scope="session")
def sl3q():
    return catalog.get("sl3", QQ)
