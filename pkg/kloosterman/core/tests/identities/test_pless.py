import pytest

from kloosterman.core.codes import WeightDistribution
from kloosterman.core.config import ComputeLimits
from kloosterman.core.exceptions import IdentityViolationError, SizeGuardError
from kloosterman.core.field import field_new
from kloosterman.core.identities import pless_check


def test_small_values(gf2, gf4):
    row = pless_check(gf2, "o3", 1)
    assert (row.value, row.oracle, row.match) == (4, 4, True)
    row = pless_check(gf4, "o3", 1)
    assert row.value == 80
    assert row.check == "pless"
    assert row.method == "o3 dual moments"
    assert row.h == 1


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("which", ["o3", "sp2"])
def test_holds_for_full_distributions(r, which):
    ctx = field_new(r)
    for h in range(11):
        assert pless_check(ctx, which, h).match


def test_holds_for_truncated_distribution(gf16):
    for h in range(7):
        assert pless_check(gf16, "sp2", h).match


def test_corrupted_primal_is_detected(gf2):
    corrupted = WeightDistribution(n=6, mode="full", j_max=6, counts=[1, 3, 7, 12, 7, 2, 1])
    with pytest.raises(IdentityViolationError, match="Pless"):
        pless_check(gf2, "o3", 1, primal=corrupted)


def test_corrupted_dual_is_detected(gf4):
    with pytest.raises(IdentityViolationError, match="h=2"):
        pless_check(gf4, "sp2", 2, dual_spectrum={0: 1, 24: 1, 30: 2})


def test_guard():
    ctx = field_new(2, limits=ComputeLimits(pless_h_max=3))
    with pytest.raises(SizeGuardError):
        pless_check(ctx, "o3", 4)
