import pytest
from hypothesis import HealthCheck, settings

from bsymbol import gf
from oracles import OracleField, span

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def F2():
    return gf(2)


@pytest.fixture
def F3():
    return gf(3)


@pytest.fixture
def F4():
    return gf(4)


def code_set(C):
    """Codewords of ``C`` recomputed by the oracle from the generator rows."""
    O = OracleField(C.field.p, C.field.e)
    return O, span(O, C.G.data, C.n)
