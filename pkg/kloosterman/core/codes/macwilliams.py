from collections.abc import Mapping

from kloosterman.core.exceptions import InconsistentInputError, InternalInconsistencyError
from kloosterman.core.logger import get_logger

from .distribution import WeightDistribution


logger = get_logger(__name__)


def krawtchouk(n: int, w: int, j_max: int) -> list[int]:
    """Binary Krawtchouk values K_0(w), ..., K_j_max(w) for length n.

    Uses (j+1) K_(j+1) = (n - 2w) K_j - (n - j + 1) K_(j-1); values past j = n are 0.
    """
    if not 0 <= w <= n:
        raise InconsistentInputError(f"weight {w} is outside 0..{n}")
    top = min(j_max, n)
    values = [1, n - 2 * w][: top + 1]
    for j in range(1, top):
        num = (n - 2 * w) * values[j] - (n - j + 1) * values[j - 1]
        k, rem = divmod(num, j + 1)
        if rem:
            raise InternalInconsistencyError(f"Krawtchouk recurrence left remainder {rem} at j = {j + 1}, n = {n}, w = {w}")
        values.append(k)
    return values + [0] * (j_max - top)


def macwilliams(
    dual_spectrum: Mapping[int, int],
    n: int,
    dual_dim: int,
    j_max: int | None = None,
) -> WeightDistribution:
    """Weight distribution of C from the spectrum of its dual: A_j = 2^-k sum_w B_w K_j(w)."""
    total = sum(dual_spectrum.values())
    if total != 2**dual_dim:
        raise InconsistentInputError(f"dual spectrum has {total} words, expected 2^{dual_dim}")
    if any(w < 0 or w > n for w in dual_spectrum):
        raise InconsistentInputError(f"dual spectrum has weights outside 0..{n}")

    top = n if j_max is None else min(j_max, n)
    sums = [0] * (top + 1)
    for w, b in dual_spectrum.items():
        for j, k in enumerate(krawtchouk(n, w, top)):
            sums[j] += b * k

    counts = []
    for j, s in enumerate(sums):
        a, rem = divmod(s, 2**dual_dim)
        if rem:
            raise InconsistentInputError(f"A_{j} = {s} / 2^{dual_dim} is not an integer")
        if a < 0:
            raise InconsistentInputError(f"A_{j} = {a} is negative")
        counts.append(a)
    logger.debug(f"MacWilliams transform of {len(dual_spectrum)} dual weights to length {n}")
    mode = "full" if j_max is None else "truncated"
    return WeightDistribution(n=n, mode=mode, j_max=top, counts=counts)
