from math import comb

from kloosterman.core.exceptions import IdentityViolationError, InternalInconsistencyError
from kloosterman.core.field import FieldCtx
from kloosterman.core.groups import GroupLiteral, TraceDistribution, trace_distribution, trace_distribution_formula
from kloosterman.core.logger import get_logger

from .distribution import WeightDistribution


logger = get_logger(__name__)


def _convolve_into(out: list[int], p: list[int], e: list[int]) -> None:
    """out += p * e, truncated to len(out)."""
    limit = len(out)
    for i, pi in enumerate(p):
        if not pi:
            continue
        for k, ek in enumerate(e):
            if i + k >= limit:
                break
            if ek:
                out[i + k] += pi * ek


def _default_distribution(ctx: FieldCtx, which: GroupLiteral) -> TraceDistribution:
    if ctx.r <= ctx.limits.trace_vector_max_r:
        return trace_distribution(ctx, which)
    logger.info(f"GF({ctx.q}) is beyond the enumeration guard; using the closed-form trace counts")
    return trace_distribution_formula(ctx, which)


def weight_distribution_dp(
    ctx: FieldCtx,
    which: GroupLiteral,
    j_max: int | None = None,
    distribution: TraceDistribution | None = None,
) -> WeightDistribution:
    """Weight distribution of C(G) by dynamic programming over the trace counts.

    A codeword picks nu_beta of the n(beta) coordinates carrying trace beta, with
    sum nu_beta = j and sum nu_beta beta = 0. The state is the partial sum
    s in GF(q) and the degree j. Since nu beta is beta or 0 by the parity of nu,
    each beta splits its binomials into even and odd parts: even parts keep s,
    odd parts move s to s + beta.

    `j_max=None` gives the full distribution.
    """
    dist = distribution if distribution is not None else _default_distribution(ctx, which)
    n = dist.total
    if j_max is None:
        ctx.limits.check("code length for a full distribution", n, ctx.limits.full_dp_max_length)
        limit, mode = n, "full"
    else:
        ctx.limits.check("j_max", j_max, ctx.limits.truncated_dp_max_j)
        limit, mode = min(j_max, n), "truncated"

    q = ctx.q
    dp = [[0] * (limit + 1) for _ in range(q)]
    dp[0][0] = 1
    for beta in ctx.elements():
        nb = dist.counts[beta]
        if nb == 0:
            continue
        top = min(nb, limit)
        even = [comb(nb, v) if v % 2 == 0 else 0 for v in range(top + 1)]
        odd = [comb(nb, v) if v % 2 == 1 else 0 for v in range(top + 1)]
        new = [[0] * (limit + 1) for _ in range(q)]
        for s in range(q):
            _convolve_into(new[s], dp[s], even)
            _convolve_into(new[s], dp[s ^ beta], odd)
        dp = new
        logger.debug(f"DP step beta={beta:#x} (n={nb}) done")

    result = WeightDistribution(n=n, mode=mode, j_max=limit, counts=dp[0])
    if result.counts[0] != 1:
        raise InternalInconsistencyError(f"C_0 = {result.counts[0]}, expected 1")
    if mode == "full":
        expected_total = 2 ** (n - ctx.r)
        if result.total() != expected_total:
            raise IdentityViolationError("codeword total", result.total(), expected_total, context=f"q={q}, {which}")
        pivot = dist.weighted_sum()
        if pivot != 0:
            raise IdentityViolationError("sum of n(beta) beta", pivot, 0, context=f"q={q}, {which}")
        if not result.is_symmetric():
            bad = next(j for j in range(n + 1) if result.counts[j] != result.counts[n - j])
            raise IdentityViolationError("weight symmetry C_j = C_(N-j)", result.counts[bad], result.counts[n - bad], context=f"q={q}, {which}, j={bad}")
    logger.info(f"Weight distribution of C({which}) over GF({q}) computed ({mode}, j <= {limit})")
    return result


def d_sequence(
    ctx: FieldCtx,
    j_max: int,
    o3: WeightDistribution | None = None,
    sp2: WeightDistribution | None = None,
) -> list[int]:
    """D_j = C_j - C^_j for 0 <= j <= j_max, the O(3,q) code minus the Sp(2,q) code."""
    ctx.limits.check("j_max", j_max, ctx.limits.truncated_dp_max_j)
    if o3 is None:
        o3 = weight_distribution_dp(ctx, "o3", j_max)
    if sp2 is None:
        sp2 = weight_distribution_dp(ctx, "sp2", j_max)
    return [o3[j] - sp2[j] for j in range(min(j_max, o3.n) + 1)]
