from typing import Literal, NamedTuple

import numpy as np

from kloosterman.core.exceptions import DomainError
from kloosterman.core.field import FieldCtx, FieldElement


GroupLiteral = Literal["o3", "sp2"]
Matrix = tuple[tuple[FieldElement, ...], ...]


class GroupElement2x2(NamedTuple):
    """A row-major 2x2 matrix [[a, b], [c, d]] in SL(2,q) = Sp(2,q)."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def det(self, ctx: FieldCtx) -> FieldElement:
        # ad - bc = ad + bc in characteristic 2
        return ctx.mul(self.a, self.d) ^ ctx.mul(self.b, self.c)

    def trace(self) -> FieldElement:
        return self.a ^ self.d

    def matrix(self) -> Matrix:
        return ((self.a, self.b), (self.c, self.d))


class O3Element(NamedTuple):
    """An element of O(3,q) in block form [[A, B, 0], [C, D, 0], [g, h, 1]] with its trace."""

    A: FieldElement
    B: FieldElement
    C: FieldElement
    D: FieldElement
    g: FieldElement
    h: FieldElement
    trace: FieldElement

    def matrix(self) -> Matrix:
        return ((self.A, self.B, 0), (self.C, self.D, 0), (self.g, self.h, 1))

    def project(self) -> GroupElement2x2:
        """Drop the last row and column."""
        return GroupElement2x2(self.A, self.B, self.C, self.D)


def is_o3_member(ctx: FieldCtx, m: Matrix) -> bool:
    """Check the block relations of O(3,q) on an assembled 3x3 matrix.

    With 1x1 blocks, "AC + g^2 is alternating" means AC + g^2 = 0, likewise for BD + h^2,
    and AD + CB must be 1.
    """
    (a, b, z1), (c, d, z2), (g, h, one) = m
    if (z1, z2, one) != (0, 0, 1):
        return False
    if ctx.mul(a, c) ^ ctx.mul(g, g):
        return False
    if ctx.mul(b, d) ^ ctx.mul(h, h):
        return False
    return ctx.mul(a, d) ^ ctx.mul(c, b) == 1


def quadratic_form(ctx: FieldCtx, x: tuple[FieldElement, FieldElement, FieldElement]) -> FieldElement:
    """theta(x) = x1 x2 + x3^2."""
    return ctx.mul(x[0], x[1]) ^ ctx.mul(x[2], x[2])


def preserves_quadratic_form(ctx: FieldCtx, m: Matrix) -> bool:
    """True when theta(m x) = theta(x) for every column vector x in GF(q)^3."""
    grid = np.indices((ctx.q,) * 3).reshape(3, -1).astype(np.int64)
    images = []
    for row in m:
        acc = np.zeros(grid.shape[1], dtype=np.int64)
        for coef, coord in zip(row, grid):
            acc ^= ctx.mul_array(coef, coord)
        images.append(acc)

    def theta(v: list[np.ndarray] | np.ndarray) -> np.ndarray:
        return ctx.mul_array(v[0], v[1]) ^ ctx.mul_array(v[2], v[2])

    return bool(np.array_equal(theta(images), theta(grid)))


def lift_to_o3(ctx: FieldCtx, w: GroupElement2x2) -> O3Element:
    """The unique O(3,q) element whose upper-left 2x2 block is `w`.

    g and h are the unique square roots of AC and BD, and Tr = Tr w + 1.
    """
    if w.det(ctx) != 1:
        raise DomainError("w", w, "Only elements of SL(2,q) lift to O(3,q).")
    g = ctx.sqrt(ctx.mul(w.a, w.c))
    h = ctx.sqrt(ctx.mul(w.b, w.d))
    return O3Element(A=w.a, B=w.b, C=w.c, D=w.d, g=g, h=h, trace=w.a ^ w.d ^ 1)
