from functools import lru_cache
from math import comb, factorial

from kloosterman.core.exceptions import DomainError, InternalInconsistencyError


def stirling2(h: int, t: int) -> int:
    """S(h, t) = (1/t!) sum_{j=0..t} (-1)^(t-j) C(t, j) j^h, the number of partitions of h things into t blocks.

    0 when t > h.
    """
    if h < 0 or t < 0:
        raise DomainError("(h, t)", (h, t), "Stirling numbers take nonnegative arguments.")
    if t > h:
        return 0
    total = sum((-1) ** (t - j) * comb(t, j) * j**h for j in range(t + 1))
    value, rem = divmod(total, factorial(t))
    if rem:
        raise InternalInconsistencyError(f"S({h},{t}) sum {total} is not divisible by {t}!")
    return value


@lru_cache(maxsize=32)
def _table(h_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [[1]]
    for h in range(1, h_max + 1):
        prev = rows[-1] + [0]
        rows.append([0] + [t * prev[t] + prev[t - 1] for t in range(1, h + 1)])
    return tuple(tuple(row) for row in rows)


def stirling_table(h_max: int) -> tuple[tuple[int, ...], ...]:
    """Rows S(h, 0..h) for 0 <= h <= h_max from S(h,t) = t S(h-1,t) + S(h-1,t-1).

    Each row is checked against the alternating-sum form.
    """
    if h_max < 0:
        raise DomainError("h_max", h_max, "Must be nonnegative.")
    table = _table(h_max)
    for h, row in enumerate(table):
        for t, s in enumerate(row):
            if s != stirling2(h, t):
                raise InternalInconsistencyError(f"Stirling recurrence gives S({h},{t}) = {s}, sum form gives {stirling2(h, t)}")
    return table
