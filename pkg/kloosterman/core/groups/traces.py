import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from kloosterman.core.charsums import kloosterman_table
from kloosterman.core.exceptions import IdentityViolationError, InternalInconsistencyError
from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.logger import get_logger

from .combinatorics import group_order
from .elements import GroupLiteral
from .enumerate import enumerate_sp4_binary, enumerate_symplectic_closure, sl2_blocks


logger = get_logger(__name__)


class TraceDistribution(BaseModel):
    """n(beta) = number of group elements with trace beta, for every beta in GF(q).

    Serializes `counts` as a map from the hex bit-encoding of beta to the count.
    """

    q: int
    group: str = Field(description="Group label, e.g. 'o3', 'sp2' or 'sp4'.")
    counts: list[int] = Field(description="counts[beta] for beta = 0 .. q-1.")

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _check_length(self) -> "TraceDistribution":
        if len(self.counts) != self.q:
            raise ValueError(f"expected {self.q} counts, got {len(self.counts)}")
        if any(n < 0 for n in self.counts):
            raise ValueError("trace counts must be nonnegative")
        return self

    @field_serializer("counts")
    def _hex_keys(self, counts: list[int]) -> dict[str, int]:
        return {f"{beta:#x}": n for beta, n in enumerate(counts)}

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count(self, beta: FieldElement) -> int:
        return self.counts[beta]

    def as_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=np.int64)

    def shifted(self, delta: FieldElement, group: str) -> "TraceDistribution":
        """The distribution of Tr + delta."""
        return TraceDistribution(q=self.q, group=group, counts=[self.counts[beta ^ delta] for beta in range(self.q)])

    def weighted_sum(self) -> FieldElement:
        """sum_beta n(beta) beta in GF(q): only betas with odd n(beta) survive in characteristic 2."""
        acc = 0
        for beta, n in enumerate(self.counts):
            if n & 1:
                acc ^= beta
        return acc

    def character_sum(self, ctx: FieldCtx, a: FieldElement) -> int:
        """sum_beta n(beta) lambda(a beta), i.e. the Gauss sum of the group at a."""
        betas = np.arange(self.q, dtype=np.int64)
        chars = ctx.character_array(ctx.mul_array(a, betas))
        return int((chars * self.as_array()).sum())


def _o3_formula_count(ctx: FieldCtx, beta: FieldElement) -> int:
    q = ctx.q
    if beta == 1:
        return q * q
    return q * q + q if ctx.trace(ctx.inv(beta ^ 1)) == 0 else q * q - q


def trace_distribution_formula(ctx: FieldCtx, which: GroupLiteral) -> TraceDistribution:
    """Closed-form trace counts: q^2 at beta = 1, q^2 + q or q^2 - q by tr(1/(beta - 1)) for O(3,q).

    Sp(2,q) is the same table shifted by one, since Tr w = Tr iota(w) + 1.
    """
    o3 = TraceDistribution(q=ctx.q, group="o3", counts=[_o3_formula_count(ctx, beta) for beta in ctx.elements()])
    return o3 if which == "o3" else o3.shifted(1, "sp2")


def _enumerate_distribution(ctx: FieldCtx, which: GroupLiteral) -> TraceDistribution:
    shift = 1 if which == "o3" else 0
    counts = np.zeros(ctx.q, dtype=np.int64)
    for a, _, _, d in sl2_blocks(ctx):
        counts += np.bincount(a ^ d ^ shift, minlength=ctx.q)
    dist = TraceDistribution(q=ctx.q, group=which, counts=[int(n) for n in counts])
    order = group_order(1, ctx.q)
    if dist.total != order:
        raise InternalInconsistencyError(f"enumerated {dist.total} elements, expected |SL(2,{ctx.q})| = {order}")
    missing = [beta for beta, n in enumerate(dist.counts) if n == 0]
    if missing:
        raise IdentityViolationError("trace surjectivity", f"n({missing[0]:#x}) = 0", "n(beta) > 0", context=f"q={ctx.q}, {which}")
    expected = trace_distribution_formula(ctx, which)
    if dist.counts != expected.counts:
        bad = next(beta for beta in ctx.elements() if dist.counts[beta] != expected.counts[beta])
        raise IdentityViolationError("trace count formula", dist.counts[bad], expected.counts[bad], context=f"q={ctx.q}, {which}, beta={bad:#x}")
    logger.info(f"Trace distribution of {which} over GF({ctx.q}) enumerated ({order} elements)")
    return dist


def trace_distribution(ctx: FieldCtx, which: GroupLiteral) -> TraceDistribution:
    """Exact trace counts from one pass over SL(2,q), checked against the closed form."""
    return ctx.cached(("trace_distribution", which), lambda: _enumerate_distribution(ctx, which))


def trace_counts_from_gauss_sums(ctx: FieldCtx, which: GroupLiteral) -> TraceDistribution:
    """Recover n(beta) from q N(beta) = |G| + sum_{a != 0} lambda(a beta) sum_w lambda(a Tr w).

    The inner sums use their closed forms (lambda(a) q K(lambda; a) for O(3,q),
    q K(lambda; a) for Sp(2,q)), so the result is independent of any enumeration.
    """
    table = kloosterman_table(ctx)
    a = np.arange(1, ctx.q, dtype=np.int64)
    gauss = ctx.q * table[1:].astype(object)
    if which == "o3":
        gauss = gauss * ctx.character_array(a).astype(object)
    order = group_order(1, ctx.q)
    counts = []
    for beta in ctx.elements():
        chars = ctx.character_array(ctx.mul_array(a, beta)).astype(object)
        total = order + int((chars * gauss).sum())
        n, rem = divmod(total, ctx.q)
        if rem:
            raise InternalInconsistencyError(f"q N({beta:#x}) = {total} is not divisible by q = {ctx.q}")
        counts.append(n)
    return TraceDistribution(q=ctx.q, group=which, counts=counts)


def symplectic_trace_distribution(ctx: FieldCtx, n: int) -> TraceDistribution:
    """Trace counts of Sp(2n,q): SL(2,q) for n = 1, the binary filter for Sp(4,2), the closure otherwise."""
    if n == 1:
        return trace_distribution(ctx, "sp2")
    if n == 2 and ctx.q == 2:
        mats = enumerate_sp4_binary()
    else:
        mats = enumerate_symplectic_closure(ctx, n)
    traces = np.bitwise_xor.reduce(np.diagonal(mats, axis1=1, axis2=2), axis=1)
    counts = np.bincount(traces, minlength=ctx.q)
    return TraceDistribution(q=ctx.q, group=f"sp{2 * n}", counts=[int(c) for c in counts])
