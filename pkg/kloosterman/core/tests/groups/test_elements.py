import pytest

from kloosterman.core.exceptions import DomainError
from kloosterman.core.groups import (
    GroupElement2x2,
    enumerate_sl2,
    is_o3_member,
    lift_to_o3,
    preserves_quadratic_form,
    quadratic_form,
)


@pytest.mark.parametrize("fixture", ["gf2", "gf4", "gf8"])
def test_lift_lands_in_o3(fixture, request):
    ctx = request.getfixturevalue(fixture)
    for w in enumerate_sl2(ctx):
        element = lift_to_o3(ctx, w)
        assert element.project() == w
        assert element.trace == w.trace() ^ 1
        assert is_o3_member(ctx, element.matrix())


def test_lift_preserves_quadratic_form(gf4):
    for w in enumerate_sl2(gf4):
        assert preserves_quadratic_form(gf4, lift_to_o3(gf4, w).matrix())


def test_non_members(gf4):
    shear = ((1, 0, 0), (0, 1, 0), (1, 0, 1))
    assert not is_o3_member(gf4, shear)
    assert not preserves_quadratic_form(gf4, shear)
    assert not is_o3_member(gf4, ((1, 0, 1), (0, 1, 0), (0, 0, 1)))


def test_quadratic_form(gf4):
    assert quadratic_form(gf4, (1, 1, 1)) == 0
    assert quadratic_form(gf4, (0b10, 0b10, 0)) == gf4.mul(0b10, 0b10)


def test_lift_rejects_singular(gf4):
    with pytest.raises(DomainError):
        lift_to_o3(gf4, GroupElement2x2(1, 1, 1, 1))
