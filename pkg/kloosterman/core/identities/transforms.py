"""Shared inner sums of the Pless power moment identity."""

from fractions import Fraction
from math import comb, factorial

from .stirling import stirling_table


def pless_inner(n: int, j: int, h: int, scale: Fraction) -> Fraction:
    """sum_{t=j..h} t! S(h,t) scale 2^-t C(n-j, n-t)."""
    row = stirling_table(h)[h]
    total = Fraction(0)
    for t in range(j, h + 1):
        if row[t] == 0 or t > n:
            continue
        total += factorial(t) * row[t] * scale / 2**t * comb(n - j, n - t)
    return total


def pless_rhs(n: int, primal: list[int], h: int, scale: Fraction) -> Fraction:
    """sum_{j=0..min(n,h)} (-1)^j A_j pless_inner(n, j, h, scale)."""
    return sum(
        ((-1) ** j * primal[j] * pless_inner(n, j, h, scale) for j in range(min(n, h) + 1)),
        start=Fraction(0),
    )
