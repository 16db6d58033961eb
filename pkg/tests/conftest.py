import pytest

from fuhp import PlaneCtx, make_field_ctx

_CACHE: dict[int, PlaneCtx] = {}


def plane_for(q: int) -> PlaneCtx:
    """Session-cached plane contexts so expensive tables build once per q."""
    if q not in _CACHE:
        _CACHE[q] = PlaneCtx(make_field_ctx(q))
    return _CACHE[q]


@pytest.fixture
def plane3():
    return plane_for(3)


@pytest.fixture
def plane5():
    return plane_for(5)


@pytest.fixture
def plane7():
    return plane_for(7)
