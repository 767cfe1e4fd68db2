from math import prod

from kloosterman.core.charsums import gl_kloosterman, kloosterman
from kloosterman.core.exceptions import DomainError, IdentityViolationError
from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.logger import get_logger

from .combinatorics import qbinom
from .elements import GroupLiteral
from .traces import symplectic_trace_distribution, trace_distribution


logger = get_logger(__name__)


def gauss_sum_closed_form(ctx: FieldCtx, which: GroupLiteral, a: FieldElement) -> int:
    """lambda(a) q K(lambda; a) for O(3,q) and q K(lambda; a) for Sp(2,q)."""
    value = ctx.q * kloosterman(ctx, 1, a)
    return ctx.character(a) * value if which == "o3" else value


def gauss_sum_bruteforce(ctx: FieldCtx, which: GroupLiteral, a: FieldElement) -> int:
    """sum_w lambda(a Tr w) over O(3,q) or Sp(2,q), read off the enumerated trace distribution.

    The result is checked against the closed form in terms of K(lambda; a).
    """
    ctx.element(a)
    if a == 0:
        raise DomainError("a", a, "The Gauss sum needs a nontrivial character.")
    value = trace_distribution(ctx, which).character_sum(ctx, a)
    expected = gauss_sum_closed_form(ctx, which, a)
    if value != expected:
        raise IdentityViolationError(f"Gauss sum of {which}", value, expected, context=f"q={ctx.q}, a={a:#x}")
    return value


def gauss_sum_formula(ctx: FieldCtx, n: int, c: FieldElement = 1) -> int:
    """Closed form of sum_{w in O(2n+1,q)} psi(Tr w) with psi(x) = lambda(c x).

    psi(1) q^(n(n+1)/2) sum over even s <= n of
    q^(sn - s^2/4) [n choose s]_q prod_{j=1..s/2} (q^(2j-1) - 1) K_GL(n-s,q)(psi; 1).
    """
    if n < 1:
        raise DomainError("n", n, "The group rank must be positive.")
    ctx.limits.check("n for the Gauss sum formula", n, ctx.limits.gauss_formula_max_n)
    q = ctx.q
    total = 0
    for s in range(0, n + 1, 2):
        total += q ** (s * n - s * s // 4) * qbinom(n, s, q) * prod(q ** (2 * j - 1) - 1 for j in range(1, s // 2 + 1)) * gl_kloosterman(ctx, n - s, 1, c)
    return ctx.character(c) * q ** (n * (n + 1) // 2) * total


def orthogonal_gauss_sum_bruteforce(ctx: FieldCtx, n: int, c: FieldElement = 1) -> int:
    """psi(1) times sum_{w in Sp(2n,q)} psi(Tr w), from an explicit enumeration of Sp(2n,q)."""
    dist = symplectic_trace_distribution(ctx, n)
    value = ctx.character(c) * dist.character_sum(ctx, c)
    logger.info(f"Gauss sum of O({2 * n + 1},{ctx.q}) by enumeration: {value}")
    return value
