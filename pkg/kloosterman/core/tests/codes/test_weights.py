from math import comb

import pytest

from kloosterman.core.charsums import moments
from kloosterman.core.codes import d_sequence, dual_weight_spectrum, weight_distribution_dp
from kloosterman.core.config import ComputeLimits
from kloosterman.core.exceptions import SizeGuardError
from kloosterman.core.field import field_new
from kloosterman.core.groups import TraceDistribution, trace_distribution


class TestSmallFields:
    def test_gf2(self, gf2):
        assert weight_distribution_dp(gf2, "o3").counts == [1, 2, 7, 12, 7, 2, 1]
        assert weight_distribution_dp(gf2, "sp2").counts == [1, 4, 7, 8, 7, 4, 1]

    def test_gf4_low_weights(self, gf4):
        o3 = weight_distribution_dp(gf4, "o3")
        sp2 = weight_distribution_dp(gf4, "sp2")
        assert (o3[1], o3[2]) == (20, 442)
        assert sp2[1] == 16
        assert o3[1] - sp2[1] == 4

    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("which", ["o3", "sp2"])
    def test_full_invariants(self, r, which):
        ctx = field_new(r)
        dist = weight_distribution_dp(ctx, which)
        assert dist.mode == "full"
        assert dist.n == dist.j_max == ctx.q * (ctx.q * ctx.q - 1)
        assert dist.total() == 2 ** (dist.n - r)
        assert dist.is_symmetric()

    def test_weight_two_counts_pairs(self, gf8):
        counts = trace_distribution(gf8, "o3").counts
        assert weight_distribution_dp(gf8, "o3", 2)[2] == sum(comb(n, 2) for n in counts)


def test_truncated_is_prefix_of_full(gf4):
    full = weight_distribution_dp(gf4, "sp2")
    truncated = weight_distribution_dp(gf4, "sp2", 7)
    assert truncated.mode == "truncated"
    assert truncated.counts == full.counts[:8]
    assert full.truncate(7) == truncated


def test_explicit_distribution(gf2):
    dist = TraceDistribution(q=2, group="o3", counts=[2, 4])
    assert weight_distribution_dp(gf2, "o3", distribution=dist).counts == [1, 2, 7, 12, 7, 2, 1]


@pytest.mark.parametrize(("r", "expected"), [(2, 4), (3, -8), (4, 16), (7, -128)])
def test_first_difference(r, expected):
    """D_1 = n_O3(0) - n_Sp2(0) is +q or -q with the parity of r."""
    assert d_sequence(field_new(r), 1)[1] == expected


def test_d_sequence_gf4(gf4):
    assert d_sequence(gf4, 2) == [0, 4, 0]


def test_representation_independence():
    """The codes do not depend on the choice of irreducible modulus."""
    fields = [field_new(4, modulus) for modulus in (0b10011, 0b11001, 0b11111)]
    tables = [moments(ctx, 10) for ctx in fields]
    assert tables[0] == tables[1] == tables[2]
    for which in ("o3", "sp2"):
        truncated = [weight_distribution_dp(ctx, which, 8).counts for ctx in fields]
        spectra = [dual_weight_spectrum(ctx, which) for ctx in fields]
        assert truncated[0] == truncated[1] == truncated[2]
        assert spectra[0] == spectra[1] == spectra[2]
    d = [d_sequence(ctx, 9) for ctx in fields]
    assert d[0] == d[1] == d[2]
    assert d[0][:4] == [0, 16, 0, 816]


def test_guards(gf16):
    with pytest.raises(SizeGuardError, match="full distribution"):
        weight_distribution_dp(gf16, "o3")
    with pytest.raises(SizeGuardError, match="j_max"):
        weight_distribution_dp(gf16, "o3", 65)
    small = field_new(2, limits=ComputeLimits(truncated_dp_max_j=3))
    with pytest.raises(SizeGuardError):
        d_sequence(small, 4)
