import numpy as np
import pytest
from pydantic import ValidationError

from kloosterman.core.codes import (
    DualCodeword,
    analytic_dual_spectrum,
    build_trace_vector,
    dual_codeword,
    dual_weight,
    dual_weight_spectrum,
)
from kloosterman.core.exceptions import SizeGuardError
from kloosterman.core.field import field_new
from kloosterman.core.groups import group_order


def test_trace_vector_multiset(gf4):
    tv = build_trace_vector(gf4, "o3")
    assert tv.length == 60
    assert np.bincount(tv.values, minlength=4).tolist() == [20, 16, 12, 12]
    assert not tv.values.flags.writeable


def test_gf2_dual_weights(gf2):
    assert dual_weight(gf2, "o3", 1) == 4
    assert dual_weight(gf2, "sp2", 1) == 2
    assert dual_weight_spectrum(gf2, "o3") == {0: 1, 4: 1}
    assert dual_weight_spectrum(gf2, "sp2") == {0: 1, 2: 1}


def test_gf4_dual_spectra(gf4):
    # K = 3 at a = 1 and -1 elsewhere; lambda(omega) = lambda(omega^2) = -1
    assert dual_weight_spectrum(gf4, "o3") == {24: 1, 28: 2, 0: 1}
    assert dual_weight_spectrum(gf4, "sp2") == {0: 1, 24: 1, 32: 2}


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("which", ["o3", "sp2"])
def test_analytic_spectrum_matches_popcount(r, which):
    ctx = field_new(r)
    spectrum = dual_weight_spectrum(ctx, which)
    assert analytic_dual_spectrum(ctx, which) == spectrum
    assert sum(spectrum.values()) == ctx.q
    assert all(0 < w < group_order(1, ctx.q) for w in spectrum if w)


def test_spectrum_does_not_depend_on_ordering(gf8):
    shuffled = build_trace_vector(gf8, "sp2", seed_order=7)
    assert shuffled.seed_order == 7
    assert sorted(shuffled.values.tolist()) == sorted(build_trace_vector(gf8, "sp2").values.tolist())
    assert dual_weight_spectrum(gf8, "sp2", shuffled) == dual_weight_spectrum(gf8, "sp2")


def test_dual_codeword(gf4):
    tv = build_trace_vector(gf4, "sp2")
    zero = dual_codeword(gf4, tv, 0)
    assert zero.weight == 0
    assert not zero.bits.any()
    assert dual_codeword(gf4, tv, 1).weight == 24


def test_dual_codeword_weight_is_validated():
    with pytest.raises(ValidationError, match="does not match"):
        DualCodeword(a=1, bits=np.array([1, 0, 1], dtype=np.uint8), weight=3)


def test_trace_vector_guard():
    with pytest.raises(SizeGuardError, match="trace vector"):
        build_trace_vector(field_new(7), "o3")
