import os

import pytest

from kloosterman.core.field import FieldCtx, field_new


RUN_SLOW = os.getenv("KLOOSTERMAN_RUN_SLOW", "0").lower() in {"1", "true", "yes"}


def pytest_collection_modifyitems(config, items):
    """Skip tests marked `slow` unless KLOOSTERMAN_RUN_SLOW is set."""
    if RUN_SLOW:
        return
    skip_slow = pytest.mark.skip(reason="slow; set KLOOSTERMAN_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def gf2() -> FieldCtx:
    return field_new(1)


@pytest.fixture(scope="session")
def gf4() -> FieldCtx:
    """GF(4) mod x^2 + x + 1; omega = 0b10, omega^2 = 0b11."""
    return field_new(2)


@pytest.fixture(scope="session")
def gf8() -> FieldCtx:
    return field_new(3)


@pytest.fixture(scope="session")
def gf16() -> FieldCtx:
    return field_new(4)


@pytest.fixture(scope="session")
def gf32() -> FieldCtx:
    return field_new(5)


@pytest.fixture(scope="session")
def gf64() -> FieldCtx:
    return field_new(6)


@pytest.fixture(scope="session")
def small_fields(gf2, gf4, gf8, gf16) -> list[FieldCtx]:
    return [gf2, gf4, gf8, gf16]
