import pytest

from fieldlab.gfield import field_of_order, make_field
from fieldlab.polyring import PrimePoly


@pytest.fixture(scope="session")
def f4():
    return make_field(2, PrimePoly(2, (1, 1, 1)))


@pytest.fixture(scope="session")
def fano():
    from fieldlab.fingeo import projective_plane
    return projective_plane(make_field(2))


def small_fields(max_order):
    out = []
    for q in range(2, max_order + 1):
        try:
            out.append(field_of_order(q))
        except Exception:
            continue
    return out
