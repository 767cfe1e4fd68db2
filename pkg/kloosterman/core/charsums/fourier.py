import numpy as np

from kloosterman.core.exceptions import IdentityViolationError
from kloosterman.core.field import FieldCtx, FieldElement

from .kloosterman import kloosterman_table


def fourier_identity_check(ctx: FieldCtx, beta: FieldElement) -> int:
    """Return sum over a != 0 of lambda(a beta) K(lambda; a), checked against its closed form.

    The closed form is q lambda(1/beta) + 1 for beta != 0 and 1 for beta = 0
    (in characteristic 2, -a beta = a beta).
    """
    ctx.element(beta)
    a = np.arange(1, ctx.q, dtype=np.int64)
    chars = ctx.character_array(ctx.mul_array(a, beta))
    lhs = int((chars * kloosterman_table(ctx)[1:]).sum())
    rhs = ctx.q * ctx.character(ctx.inv(beta)) + 1 if beta else 1
    if lhs != rhs:
        raise IdentityViolationError("Kloosterman Fourier identity", lhs, rhs, context=f"q={ctx.q}, beta={beta:#x}")
    return lhs


def additive_quadratic_sum(ctx: FieldCtx, x: FieldElement) -> int:
    """Sum over alpha of lambda(x alpha^2 + x alpha); equals q for x in GF(2) and 0 otherwise."""
    ctx.element(x)
    alphas = np.arange(ctx.q, dtype=np.int64)
    args = ctx.mul_array(x, ctx.mul_array(alphas, alphas) ^ alphas)
    value = int(ctx.character_array(args).sum())
    expected = ctx.q if x in (0, 1) else 0
    if value != expected:
        raise IdentityViolationError("additive quadratic character sum", value, expected, context=f"q={ctx.q}, x={x:#x}")
    return value
