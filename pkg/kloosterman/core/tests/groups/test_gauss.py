import pytest

from kloosterman.core.config import ComputeLimits
from kloosterman.core.exceptions import DomainError, SizeGuardError
from kloosterman.core.field import field_new
from kloosterman.core.groups import (
    gauss_sum_bruteforce,
    gauss_sum_closed_form,
    gauss_sum_formula,
    orthogonal_gauss_sum_bruteforce,
)


def test_gf4_gauss_sums(gf4):
    assert gauss_sum_bruteforce(gf4, "o3", 1) == 12
    assert gauss_sum_bruteforce(gf4, "o3", 0b10) == 4
    assert gauss_sum_bruteforce(gf4, "sp2", 1) == 12
    assert gauss_sum_bruteforce(gf4, "sp2", 0b10) == -4


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_bruteforce_matches_closed_form(r):
    ctx = field_new(r)
    for which in ("o3", "sp2"):
        for a in ctx.nonzero_elements():
            assert gauss_sum_bruteforce(ctx, which, a) == gauss_sum_closed_form(ctx, which, a)


def test_formula_rank_one(gf4):
    assert gauss_sum_formula(gf4, 1) == 12


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_formula_rank_one_matches_enumeration(r):
    ctx = field_new(r)
    for c in ctx.nonzero_elements():
        assert gauss_sum_formula(ctx, 1, c) == orthogonal_gauss_sum_bruteforce(ctx, 1, c)


def test_formula_sp4_binary(gf2):
    assert gauss_sum_formula(gf2, 2) == -112
    assert orthogonal_gauss_sum_bruteforce(gf2, 2) == -112


@pytest.mark.slow
def test_formula_sp4_over_gf4(gf4):
    assert gauss_sum_formula(gf4, 2) == orthogonal_gauss_sum_bruteforce(gf4, 2)


def test_errors(gf4):
    with pytest.raises(DomainError):
        gauss_sum_bruteforce(gf4, "o3", 0)
    with pytest.raises(DomainError):
        gauss_sum_formula(gf4, 0)
    with pytest.raises(SizeGuardError):
        gauss_sum_formula(field_new(2, limits=ComputeLimits(gauss_formula_max_n=1)), 2)
