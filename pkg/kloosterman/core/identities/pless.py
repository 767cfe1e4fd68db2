from fractions import Fraction

from kloosterman.core.codes import (
    WeightDistribution,
    analytic_dual_spectrum,
    dual_weight_spectrum,
    weight_distribution_dp,
)
from kloosterman.core.exceptions import IdentityViolationError
from kloosterman.core.field import FieldCtx
from kloosterman.core.groups import GroupLiteral, group_order
from kloosterman.core.logger import get_logger

from .report import ReportRow, compare
from .transforms import pless_rhs


logger = get_logger(__name__)


def pless_sides(ctx: FieldCtx, h: int, primal: WeightDistribution, dual_spectrum: dict[int, int]) -> tuple[int, Fraction]:
    """Both sides of the binary Pless identity with B the r-dimensional dual code.

    Left: sum_w w^h B_w. Right: sum_{j<=min(N,h)} (-1)^j C_j sum_{t=j..h} t! S(h,t) 2^(r-t) C(N-j, N-t).
    """
    lhs = sum(b * w**h for w, b in dual_spectrum.items())
    rhs = pless_rhs(primal.n, primal.counts, h, Fraction(ctx.q))
    return lhs, rhs


def pless_check(
    ctx: FieldCtx,
    which: GroupLiteral,
    h: int,
    primal: WeightDistribution | None = None,
    dual_spectrum: dict[int, int] | None = None,
) -> ReportRow:
    """Verify the Pless power moment identity for C(G) and its dual at exponent h.

    Without a supplied primal distribution the full one is used when the DP
    allows it, otherwise the one truncated at j = h, which agrees on every
    coefficient the identity reads.
    """
    ctx.limits.check("h for the Pless identity", h, ctx.limits.pless_h_max)
    if primal is None:
        full = group_order(1, ctx.q) <= ctx.limits.full_dp_max_length
        primal = weight_distribution_dp(ctx, which, None if full else h)
    if dual_spectrum is None:
        if ctx.r <= ctx.limits.trace_vector_max_r:
            dual_spectrum = dual_weight_spectrum(ctx, which)
        else:
            dual_spectrum = analytic_dual_spectrum(ctx, which)

    lhs, rhs = pless_sides(ctx, h, primal, dual_spectrum)
    if rhs != lhs:
        raise IdentityViolationError("Pless power moment identity", lhs, rhs, context=f"q={ctx.q}, {which}, h={h}")
    logger.debug(f"Pless identity holds for {which} over GF({ctx.q}) at h={h}: {lhs}")
    return compare(ctx.q, ctx.r, "pless", f"{which} dual moments", lhs, int(rhs), h=h)
