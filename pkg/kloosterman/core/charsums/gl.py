from itertools import product

import galois
import numpy as np

from kloosterman.core.exceptions import DomainError
from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.logger import get_logger

from .kloosterman import kloosterman


logger = get_logger(__name__)


def gl_kloosterman(ctx: FieldCtx, t: int, a: FieldElement, c: FieldElement = 1) -> int:
    """K_GL(t,q)(psi_c; a) by the three-term recursion in t.

    K_GL(0) = 1, K_GL(1) = K(psi; a) and for t >= 2
    K_GL(t) = q^(t-1) K_GL(t-1) K + q^(2t-2) (q^(t-1) - 1) K_GL(t-2).
    """
    if t < 0:
        raise DomainError("t", t, "Matrix size must be nonnegative.")
    if t == 0:
        return 1
    k1 = kloosterman(ctx, c, a)
    q = ctx.q
    prev, cur = 1, k1
    for s in range(2, t + 1):
        prev, cur = cur, q ** (s - 1) * cur * k1 + q ** (2 * s - 2) * (q ** (s - 1) - 1) * prev
    return cur


def field_array_class(ctx: FieldCtx) -> type[galois.FieldArray]:
    """The galois field class with the same modulus, so integer encodings agree with `ctx`."""

    def build() -> type[galois.FieldArray]:
        if ctx.r == 1:
            return galois.GF(2)
        return galois.GF(ctx.q, irreducible_poly=ctx.modulus)

    return ctx.cached(("galois_field",), build)


def gl_kloosterman_bruteforce(ctx: FieldCtx, t: int, a: FieldElement, c: FieldElement = 1) -> int:
    """Sum over every invertible t x t matrix w of psi_c(Tr w + a Tr w^-1)."""
    if t < 0:
        raise DomainError("t", t, "Matrix size must be nonnegative.")
    ctx.limits.check(f"q^(t^2) for t={t}, q={ctx.q}", ctx.q ** (t * t), ctx.limits.gl_bruteforce_max)
    kloosterman(ctx, c, a)  # argument validation
    if t == 0:
        return 1
    field = field_array_class(ctx)
    total = 0
    invertible = 0
    for entries in product(field.elements, repeat=t * t):
        w = np.reshape(entries, (t, t)).view(field)
        if np.linalg.det(w) == 0:
            continue
        invertible += 1
        w_inv = np.linalg.inv(w)
        arg = int(np.trace(w)) ^ ctx.mul(a, int(np.trace(w_inv)))
        total += ctx.character(ctx.mul(c, arg))
    logger.debug(f"GL({t},{ctx.q}) brute force walked {invertible} invertible matrices")
    return total
