import pytest

from kloosterman.core.charsums import additive_quadratic_sum, fourier_identity_check
from kloosterman.core.field import field_new


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_fourier_identity(r):
    ctx = field_new(r)
    assert fourier_identity_check(ctx, 0) == 1
    for beta in ctx.nonzero_elements():
        value = fourier_identity_check(ctx, beta)
        assert value in (ctx.q + 1, 1 - ctx.q)


def test_fourier_identity_at_one(gf4):
    # lambda(1) = 1 over GF(4)
    assert fourier_identity_check(gf4, 1) == 5


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_additive_quadratic_sum(r):
    ctx = field_new(r)
    values = [additive_quadratic_sum(ctx, x) for x in ctx.elements()]
    assert values[:2] == [ctx.q, ctx.q]
    assert all(v == 0 for v in values[2:])
