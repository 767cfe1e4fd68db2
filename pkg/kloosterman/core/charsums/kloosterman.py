import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from kloosterman.core.exceptions import DomainError, IdentityViolationError, TrivialCharacterError
from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.logger import get_logger


logger = get_logger(__name__)


class KloostermanValue(BaseModel):
    """K(psi_c; a) for one nonzero argument, with psi_c(x) = lambda(c x)."""

    a: int = Field(description="Nonzero argument, bit-encoded.")
    c: int = Field(default=1, description="Character parameter; c = 1 is the canonical character.")
    value: int = Field(description="Exact value of the sum.")

    model_config = ConfigDict(extra="forbid", frozen=True)


def _check_args(ctx: FieldCtx, c: FieldElement, a: FieldElement | None = None) -> None:
    ctx.element(c)
    if c == 0:
        raise TrivialCharacterError()
    if a is not None:
        ctx.element(a)
        if a == 0:
            raise DomainError("a", a, "Kloosterman sums are defined for nonzero arguments.")


def _weil_check(ctx: FieldCtx, a: int, value: int) -> None:
    # |K| <= 2 sqrt(q), squared to stay in integers
    if value * value > 4 * ctx.q:
        raise IdentityViolationError("Weil bound", value * value, 4 * ctx.q, context=f"q={ctx.q}, a={a:#x}")


def _sum_for(ctx: FieldCtx, c: FieldElement, a: FieldElement, alphas: np.ndarray, inv_alphas: np.ndarray) -> int:
    args = alphas ^ ctx.mul_array(a, inv_alphas)
    if c != 1:
        args = ctx.mul_array(c, args)
    return int(ctx.character_array(args).sum())


def _fill_table(ctx: FieldCtx, c: FieldElement) -> np.ndarray:
    alphas = np.arange(1, ctx.q, dtype=np.int64)
    inv_alphas = ctx.inv_array(alphas)
    values = np.zeros(ctx.q, dtype=np.int64)
    for a in range(1, ctx.q):
        values[a] = _sum_for(ctx, c, a, alphas, inv_alphas)
        _weil_check(ctx, a, int(values[a]))
    values.flags.writeable = False
    logger.debug(f"Kloosterman table filled for q={ctx.q}, c={c:#x}")
    return values


def kloosterman_table(ctx: FieldCtx, c: FieldElement = 1) -> np.ndarray:
    """Dense read-only array K with K[a] = K(psi_c; a) for a != 0 (K[0] is unused and 0).

    Filled once per (context, c) and shared afterwards.
    """
    _check_args(ctx, c)
    ctx.limits.check("r for a full Kloosterman table (table_max_r)", ctx.r, ctx.limits.table_max_r)
    return ctx.cached(("kloosterman", c), lambda: _fill_table(ctx, c))


def kloosterman(ctx: FieldCtx, c: FieldElement, a: FieldElement) -> int:
    """Exact value of sum over alpha != 0 of lambda(c (alpha + a / alpha))."""
    _check_args(ctx, c, a)
    if ctx.has_tables:
        return int(kloosterman_table(ctx, c)[a])
    alphas = np.arange(1, ctx.q, dtype=np.int64)
    value = _sum_for(ctx, c, a, alphas, ctx.inv_array(alphas))
    _weil_check(ctx, a, value)
    return value


def kloosterman_value(ctx: FieldCtx, a: FieldElement, c: FieldElement = 1) -> KloostermanValue:
    return KloostermanValue(a=a, c=c, value=kloosterman(ctx, c, a))
