"""The binary codes C(O(3,q)) and C(Sp(2,q)) and their duals.

C(G) = {u in GF(2)^N : u . v = 0} where v lists the traces of the group
elements. Its dual consists of the words c(a) = (tr(a v_1), ..., tr(a v_N)).
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from kloosterman.core.charsums import kloosterman, kloosterman_table
from kloosterman.core.exceptions import IdentityViolationError, InjectivityViolationError
from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.groups import GroupLiteral, sl2_traces, trace_distribution
from kloosterman.core.logger import get_logger


logger = get_logger(__name__)


class TraceVector(BaseModel):
    """v = (Tr g_1, ..., Tr g_N) for a fixed ordering of the group."""

    q: int
    group: GroupLiteral
    values: np.ndarray = Field(repr=False)
    seed_order: int | None = None

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def length(self) -> int:
        return len(self.values)


class DualCodeword(BaseModel):
    a: int
    bits: np.ndarray = Field(repr=False)
    weight: int

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_weight(self) -> "DualCodeword":
        if int(self.bits.sum()) != self.weight:
            raise ValueError(f"weight {self.weight} does not match the {int(self.bits.sum())} set bits")
        return self


def build_trace_vector(ctx: FieldCtx, which: GroupLiteral, seed_order: int | None = None) -> TraceVector:
    """Traces of the group in lexicographic enumeration order, or shuffled by `seed_order`."""
    ctx.limits.check("r for an explicit trace vector", ctx.r, ctx.limits.trace_vector_max_r)
    values = sl2_traces(ctx)
    if which == "o3":
        values = values ^ 1
    if seed_order is not None:
        values = values[np.random.default_rng(seed_order).permutation(len(values))]
    counts = np.bincount(values, minlength=ctx.q).tolist()
    expected = trace_distribution(ctx, which).counts
    if counts != expected:
        raise IdentityViolationError("trace vector multiset", counts, expected, context=f"q={ctx.q}, {which}")
    values.flags.writeable = False
    return TraceVector(q=ctx.q, group=which, values=values, seed_order=seed_order)


def o3_dual_weight(ctx: FieldCtx, a: FieldElement) -> int:
    """w(c(a)) = (q/2) ((q^2 - 1) - lambda(a) K(lambda; a)) for C(O(3,q)); 0 at a = 0."""
    if a == 0:
        return 0
    return (ctx.q // 2) * (ctx.q * ctx.q - 1 - ctx.character(a) * kloosterman(ctx, 1, a))


def sp2_dual_weight(ctx: FieldCtx, a: FieldElement) -> int:
    """w(c(a)) = (N - q K(lambda; a)) / 2 for C(Sp(2,q)); 0 at a = 0."""
    if a == 0:
        return 0
    return (ctx.q // 2) * (ctx.q * ctx.q - 1 - kloosterman(ctx, 1, a))


def dual_weight(ctx: FieldCtx, which: GroupLiteral, a: FieldElement) -> int:
    return o3_dual_weight(ctx, a) if which == "o3" else sp2_dual_weight(ctx, a)


def _codeword_bits(ctx: FieldCtx, tv: TraceVector, a: FieldElement) -> np.ndarray:
    return ctx.trace_array(ctx.mul_array(a, tv.values))


def dual_codeword(ctx: FieldCtx, tv: TraceVector, a: FieldElement) -> DualCodeword:
    """c(a) computed bit by bit, with its weight checked against the closed form."""
    ctx.element(a)
    bits = _codeword_bits(ctx, tv, a)
    weight = int(bits.sum())
    expected = dual_weight(ctx, tv.group, a)
    if weight != expected:
        raise IdentityViolationError(f"dual weight of {tv.group}", weight, expected, context=f"q={ctx.q}, a={a:#x}")
    return DualCodeword(a=a, bits=bits, weight=weight)


def dual_weight_spectrum(ctx: FieldCtx, which: GroupLiteral, tv: TraceVector | None = None) -> dict[int, int]:
    """Weight -> count over the q dual codewords c(a), a in GF(q).

    Also checks that a -> c(a) is injective and additive, so the dual has dimension r.
    """
    if tv is None:
        tv = build_trace_vector(ctx, which)
    packed: dict[bytes, int] = {}
    spectrum: dict[int, int] = {}
    for a in ctx.elements():
        word = dual_codeword(ctx, tv, a)
        key = np.packbits(word.bits).tobytes()
        if key in packed:
            raise InjectivityViolationError("dual codeword injectivity", f"c({packed[key]:#x})", f"c({a:#x})", context=f"q={ctx.q}, {which}")
        packed[key] = a
        spectrum[word.weight] = spectrum.get(word.weight, 0) + 1

    basis = [1 << i for i in range(ctx.r)]
    for x in basis:
        for y in basis:
            lhs = _codeword_bits(ctx, tv, x) ^ _codeword_bits(ctx, tv, y)
            if not np.array_equal(lhs, _codeword_bits(ctx, tv, x ^ y)):
                raise IdentityViolationError("dual codeword additivity", f"c({x:#x}) + c({y:#x})", f"c({x ^ y:#x})", context=f"q={ctx.q}, {which}")

    logger.info(f"Dual spectrum of {which} over GF({ctx.q}): {len(spectrum)} distinct weights")
    return dict(sorted(spectrum.items()))


def analytic_dual_spectrum(ctx: FieldCtx, which: GroupLiteral) -> dict[int, int]:
    """The dual spectrum from the closed weight formulas alone (no trace vector)."""
    table = kloosterman_table(ctx)
    spectrum: dict[int, int] = {0: 1}
    half = ctx.q // 2
    for a in ctx.nonzero_elements():
        k = int(table[a])
        if which == "o3":
            k *= ctx.character(a)
        w = half * (ctx.q * ctx.q - 1 - k)
        spectrum[w] = spectrum.get(w, 0) + 1
    assert sum(spectrum.values()) == ctx.q
    return dict(sorted(spectrum.items()))
