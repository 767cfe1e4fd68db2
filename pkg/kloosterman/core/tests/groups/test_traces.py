import tracemalloc

import pytest
from pydantic import ValidationError

from kloosterman.core.field import field_new
from kloosterman.core.groups import (
    TraceDistribution,
    group_order,
    symplectic_trace_distribution,
    trace_counts_from_gauss_sums,
    trace_distribution,
    trace_distribution_formula,
)


def test_gf4_distributions(gf4):
    assert trace_distribution(gf4, "o3").counts == [20, 16, 12, 12]
    assert trace_distribution(gf4, "sp2").counts == [16, 20, 12, 12]


def test_gf2_distributions(gf2):
    assert trace_distribution(gf2, "o3").counts == [2, 4]
    assert trace_distribution(gf2, "sp2").counts == [4, 2]


def test_enumeration_memory_stays_per_block():
    # |SL(2,256)| is about 1.7e7, so a materialized int64 trace vector alone would need 128 MiB
    ctx = field_new(8)
    tracemalloc.start()
    try:
        dist = trace_distribution(ctx, "o3")
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    assert dist.total == group_order(1, ctx.q)
    assert peak < 16 * 2**20


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("which", ["o3", "sp2"])
def test_three_derivations_agree(r, which):
    ctx = field_new(r)
    enumerated = trace_distribution(ctx, which)
    assert trace_distribution_formula(ctx, which).counts == enumerated.counts
    assert trace_counts_from_gauss_sums(ctx, which).counts == enumerated.counts


@pytest.mark.parametrize("r", range(1, 13))
def test_formula_invariants(r):
    ctx = field_new(r)
    for which in ("o3", "sp2"):
        dist = trace_distribution_formula(ctx, which)
        assert dist.total == group_order(1, ctx.q)
        assert dist.weighted_sum() == 0
        assert all(n > 0 for n in dist.counts)


def test_distribution_is_cached(gf8):
    assert trace_distribution(gf8, "o3") is trace_distribution(gf8, "o3")


def test_serialization(gf4):
    data = trace_distribution(gf4, "sp2").model_dump()
    assert data == {"q": 4, "group": "sp2", "counts": {"0x0": 16, "0x1": 20, "0x2": 12, "0x3": 12}}


def test_shift_and_character_sum(gf4):
    o3 = trace_distribution(gf4, "o3")
    assert o3.shifted(1, "sp2").counts == trace_distribution(gf4, "sp2").counts
    assert o3.character_sum(gf4, 1) == 12
    assert o3.character_sum(gf4, 0) == 60


def test_sp4_binary_trace_counts(gf2):
    assert symplectic_trace_distribution(gf2, 2).counts == [416, 304]
    assert symplectic_trace_distribution(gf2, 1).counts == [4, 2]


def test_validation():
    with pytest.raises(ValidationError, match="expected 4 counts"):
        TraceDistribution(q=4, group="o3", counts=[1, 2, 3])
    with pytest.raises(ValidationError, match="nonnegative"):
        TraceDistribution(q=2, group="o3", counts=[-1, 7])
