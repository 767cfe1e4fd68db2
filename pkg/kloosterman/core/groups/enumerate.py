from typing import Iterator

import numpy as np

from kloosterman.core.exceptions import InternalInconsistencyError, SizeGuardError
from kloosterman.core.field import FieldCtx
from kloosterman.core.logger import get_logger

from .combinatorics import group_order
from .elements import GroupElement2x2


logger = get_logger(__name__)

# Columns (a, b, c, d) of every SL(2,q) element sharing one value of a.
Sl2Block = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def sl2_blocks(ctx: FieldCtx) -> Iterator[Sl2Block]:
    """Yield SL(2,q) partitioned by the entry a, in lexicographic order of (a, b, c, d).

    For a != 0 every (b, c) determines d = (1 + bc) / a. For a = 0 the
    determinant forces c = 1 / b and leaves d free.
    """
    ctx.limits.check("r for SL(2,q) enumeration", ctx.r, ctx.limits.enumeration_max_r)
    q = ctx.q
    elements = np.arange(q, dtype=np.int64)

    bs = np.arange(1, q, dtype=np.int64)
    yield np.zeros(q * (q - 1), dtype=np.int64), np.repeat(bs, q), np.repeat(ctx.inv_array(bs), q), np.tile(elements, q - 1)

    b, c = np.repeat(elements, q), np.tile(elements, q)
    bc_plus_one = ctx.mul_array(b, c) ^ 1
    for a in range(1, q):
        d = ctx.mul_array(ctx.inv(a), bc_plus_one)
        yield np.full_like(b, a), b, c, d


def enumerate_sl2(ctx: FieldCtx) -> Iterator[GroupElement2x2]:
    """Stream every element of SL(2,q) = Sp(2,q) exactly once, in lexicographic order."""
    for a, b, c, d in sl2_blocks(ctx):
        for entries in zip(a.tolist(), b.tolist(), c.tolist(), d.tolist()):
            yield GroupElement2x2(*entries)


def sl2_traces(ctx: FieldCtx) -> np.ndarray:
    """Tr w for every w in SL(2,q), in enumeration order."""
    return np.concatenate([a ^ d for a, _, _, d in sl2_blocks(ctx)])


# ============================================
# Sp(2n,q) for n >= 2
# ============================================


def _symplectic_form(m: int) -> np.ndarray:
    n = m // 2
    j = np.zeros((m, m), dtype=np.int64)
    j[:n, n:] = np.eye(n, dtype=np.int64)
    j[n:, :n] = np.eye(n, dtype=np.int64)
    return j


def enumerate_sp4_binary() -> np.ndarray:
    """All 720 elements of Sp(4,2), found by filtering the 2^16 binary 4x4 matrices against tw J w = J.

    Returns an array of shape (720, 4, 4) ordered by bit-encoding.
    """
    codes = np.arange(1 << 16, dtype=np.int64)
    mats = ((codes[:, None] >> np.arange(16)) & 1).reshape(-1, 4, 4)
    j = _symplectic_form(4)
    gram = np.einsum("nji,jk,nkl->nil", mats, j, mats) % 2
    members = mats[np.all(gram == j, axis=(1, 2))]
    if len(members) != group_order(2, 2):
        raise InternalInconsistencyError(f"Sp(4,2) filter found {len(members)} elements, expected {group_order(2, 2)}")
    return members


def _batch_matmul(ctx: FieldCtx, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Multiply every matrix in `left` (k, m, m) by the fixed matrix `right` (m, m)."""
    m = right.shape[0]
    out = np.zeros_like(left)
    for i in range(m):
        for j in range(m):
            acc = out[:, i, j]
            for k in range(m):
                coef = int(right[k, j])
                if coef:
                    acc ^= ctx.mul_array(left[:, i, k], coef)
            out[:, i, j] = acc
    return out


def _symplectic_generators(ctx: FieldCtx, n: int) -> list[np.ndarray]:
    m = 2 * n
    eye = np.eye(n, dtype=np.int64)

    def levi(a: np.ndarray, a_inv_t: np.ndarray) -> np.ndarray:
        out = np.zeros((m, m), dtype=np.int64)
        out[:n, :n] = a
        out[n:, n:] = a_inv_t
        return out

    g = ctx.generator
    scale = eye.copy()
    scale[0, 0] = g
    scale_inv_t = eye.copy()
    scale_inv_t[0, 0] = ctx.inv(g)
    gens = [_symplectic_form(m), levi(scale, scale_inv_t)]

    if n >= 2:
        elem = eye.copy()
        elem[0, 1] = 1
        # (I + E_12)^-1 = I + E_12 in characteristic 2, so its inverse transpose is I + E_21
        gens.append(levi(elem, elem.T.copy()))
        cycle = np.roll(eye, 1, axis=0)
        gens.append(levi(cycle, cycle.copy()))  # permutation matrices are orthogonal

    unipotent = np.eye(m, dtype=np.int64)
    unipotent[0, n] = 1
    gens.append(unipotent)
    return gens


def enumerate_symplectic_closure(ctx: FieldCtx, n: int) -> np.ndarray:
    """Sp(2n,q) as the closure of a Levi / unipotent / J generating set.

    Experimental: the walk is breadth-first over right multiplication by the
    generators, and the final size is checked against the group order.
    Returns an array of shape (|Sp(2n,q)|, 2n, 2n) ordered by packed encoding.
    """
    order = group_order(n, ctx.q)
    ctx.limits.check(f"|Sp({2 * n},{ctx.q})|", order, ctx.limits.closure_max_order)
    m = 2 * n
    if ctx.r * m * m > 62:
        raise SizeGuardError(f"packed key bits for Sp({m},{ctx.q})", ctx.r * m * m, 62)
    logger.warning(f"Building Sp({m},{ctx.q}) by generator closure (experimental, {order} elements)")

    weights = np.array([1 << (ctx.r * i) for i in range(m * m)], dtype=np.int64)

    def keys(mats: np.ndarray) -> np.ndarray:
        return mats.reshape(len(mats), -1) @ weights

    gens = _symplectic_generators(ctx, n)
    frontier = np.eye(m, dtype=np.int64)[None, :, :]
    seen_keys = keys(frontier)
    seen_mats = [frontier]
    while len(frontier):
        products = np.concatenate([_batch_matmul(ctx, frontier, gen) for gen in gens])
        prod_keys, first = np.unique(keys(products), return_index=True)
        fresh = ~np.isin(prod_keys, seen_keys)
        frontier = products[first[fresh]]
        seen_keys = np.union1d(seen_keys, prod_keys[fresh])
        seen_mats.append(frontier)
        logger.debug(f"closure step: {len(seen_keys)} of {order} elements")

    if len(seen_keys) != order:
        raise InternalInconsistencyError(f"closure produced {len(seen_keys)} elements of Sp({m},{ctx.q}), expected {order}")
    mats = np.concatenate(seen_mats)
    return mats[np.argsort(keys(mats), kind="stable")]
