import pytest

from kloosterman.core.charsums import moments
from kloosterman.core.codes import d_sequence
from kloosterman.core.exceptions import DomainError, IdentityViolationError
from kloosterman.core.field import field_new
from kloosterman.core.identities import mk_recursion, mk_recursion_sequence, prop_h_closed_forms, t1k_recursion


@pytest.mark.parametrize("r", [2, 3, 4])
def test_mk_recursion_matches_moments(r):
    ctx = field_new(r)
    assert mk_recursion_sequence(ctx, 10) == moments(ctx, 10).mk


def test_mk_recursion_single(gf4):
    assert mk_recursion(gf4, 2) == 11
    with pytest.raises(DomainError):
        mk_recursion(gf4, 0)


def test_t1k_example(gf4):
    assert t1k_recursion(gf4, 1) == {1: -2}


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_t1k_recursion_matches_moments(r):
    ctx = field_new(r)
    table = moments(ctx, 9)
    assert t1k_recursion(ctx, 9) == {h: table.t1k[h] for h in (1, 3, 5, 7, 9)}


def test_t1k_from_supplied_differences(gf8):
    d = d_sequence(gf8, 5)
    assert t1k_recursion(gf8, 5, d) == t1k_recursion(gf8, 5)


def test_t1k_detects_fault(gf8):
    d = d_sequence(gf8, 3)
    d[1] += 1
    with pytest.raises(IdentityViolationError, match="q=8, h=1"):
        t1k_recursion(gf8, 3, d)


@pytest.mark.parametrize("h", [0, 2, 4])
def test_t1k_rejects_even_exponents(gf4, h):
    with pytest.raises(DomainError):
        t1k_recursion(gf4, h)


def test_t1k_rejects_short_input(gf4):
    with pytest.raises(DomainError):
        t1k_recursion(gf4, 3, [0, 4])


def test_prop_h_closed_forms(gf4, gf8):
    assert prop_h_closed_forms(gf4) == (3, -2)
    assert prop_h_closed_forms(gf8) == (-3, 4)
