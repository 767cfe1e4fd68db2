"""Recursions for the power moments of Kloosterman sums from code weight distributions.

Both come from the Pless identity applied to the duals of C(Sp(2,q)) and
C(O(3,q)), whose weights are affine in K(lambda; a). Expanding the powers of
those weights leaves the top moment with a known coefficient, so each moment
is solved for once all lower ones are known.
"""

from fractions import Fraction
from math import comb

from kloosterman.core.codes import d_sequence, weight_distribution_dp
from kloosterman.core.exceptions import DomainError, IdentityViolationError, InternalInconsistencyError
from kloosterman.core.field import FieldCtx
from kloosterman.core.groups import group_order
from kloosterman.core.logger import get_logger

from .transforms import pless_rhs


logger = get_logger(__name__)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalInconsistencyError(f"{what} = {value} is not an integer")
    return value.numerator


def _padded(values: list[int], n: int, h: int) -> list[int]:
    need = min(n, h) + 1
    if len(values) < need:
        raise DomainError("weight counts", len(values), f"Need coefficients for j <= {need - 1}.")
    return list(values)


def mk_recursion_sequence(ctx: FieldCtx, h_max: int, sp2_counts: list[int] | None = None) -> list[int]:
    """MK^0, ..., MK^h_max from the weight distribution of C(Sp(2,q)).

    Solves (q/2)^h sum_{j<=h} (-1)^j C(h,j) (q^2-1)^(h-j) MK^j
    = q sum_{j<=min(N,h)} (-1)^j C^_j sum_{t=j..h} t! S(h,t) 2^-t C(N-j, N-t)
    for the j = h term, starting from MK^0 = q - 1.
    """
    ctx.limits.check("h_max for the MK recursion", h_max, ctx.limits.moment_h_max)
    q = ctx.q
    n = group_order(1, q)
    if sp2_counts is None:
        sp2_counts = weight_distribution_dp(ctx, "sp2", max(h_max, 0)).counts
    sp2_counts = _padded(sp2_counts, n, h_max)

    base = q * q - 1
    mk = [q - 1]
    for h in range(1, h_max + 1):
        rhs = pless_rhs(n, sp2_counts, h, Fraction(q)) / Fraction(q, 2) ** h
        lower = sum((-1) ** j * comb(h, j) * base ** (h - j) * mk[j] for j in range(h))
        mk.append(_as_int((-1) ** h * (rhs - lower), f"MK^{h}"))
        logger.debug(f"MK^{h} = {mk[-1]} for q={q}")
    logger.info(f"MK recursion for q={q} solved up to h={h_max}")
    return mk


def mk_recursion(ctx: FieldCtx, h: int, sp2_counts: list[int] | None = None) -> int:
    if h < 1:
        raise DomainError("h", h, "The recursion starts at h = 1.")
    return mk_recursion_sequence(ctx, h, sp2_counts)[h]


def t1k_recursion(ctx: FieldCtx, h_max_odd: int, d: list[int] | None = None) -> dict[int, int]:
    """T1K^h for every odd h <= h_max_odd, keyed by h.

    T1K^h = -sum_{odd j <= h-2} C(h,j) (q^2-1)^(h-j) T1K^j
    + q^(1-h) sum_{j<=min(N,h)} (-1)^j D_j sum_{t=j..h} t! S(h,t) 2^(h-t-1) C(N-j, N-t),
    where D_j = C_j - C^_j compares the O(3,q) and Sp(2,q) codes. `d` may be
    supplied instead of being computed from the truncated DP.
    """
    if h_max_odd < 1 or h_max_odd % 2 == 0:
        raise DomainError("h_max", h_max_odd, "Trace-one moments are recovered for odd h only.")
    ctx.limits.check("h_max for the T1K recursion", h_max_odd, ctx.limits.t1k_h_max)
    q = ctx.q
    n = group_order(1, q)
    if d is None:
        d = d_sequence(ctx, h_max_odd)
    d = _padded(d, n, h_max_odd)

    base = q * q - 1
    t1k: dict[int, int] = {}
    for h in range(1, h_max_odd + 1, 2):
        # 2^(h-t-1) = 2^(h-1) 2^-t
        rhs = pless_rhs(n, d, h, Fraction(2 ** (h - 1))) / Fraction(q) ** (h - 1)
        lower = sum(comb(h, j) * base ** (h - j) * t1k[j] for j in range(1, h - 1, 2))
        value = rhs - lower
        if value.denominator != 1:
            raise IdentityViolationError(f"T1K^{h} integrality", str(value), "an integer", context=f"q={q}, h={h}")
        t1k[h] = value.numerator
        logger.debug(f"T1K^{h} = {t1k[h]} for q={q}")
    logger.info(f"T1K recursion for q={q} solved up to h={h_max_odd}")
    return t1k


def prop_h_closed_forms(ctx: FieldCtx) -> tuple[int, int]:
    """(T0K^1, T1K^1) = (1 + (-1)^r q/2, (-1)^(r+1) q/2)."""
    half = ctx.q // 2
    sign = -1 if ctx.r % 2 else 1
    return 1 + sign * half, -sign * half
