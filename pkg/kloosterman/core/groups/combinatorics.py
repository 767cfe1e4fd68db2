from math import prod

from kloosterman.core.exceptions import DomainError, InternalInconsistencyError


def qbinom(n: int, r: int, q: int) -> int:
    """Gaussian binomial [n choose r]_q = prod_{j<r} (q^(n-j) - 1) / (q^(r-j) - 1).

    Out-of-range r gives 0, like an ordinary binomial coefficient.
    """
    if q < 2:
        raise DomainError("q", q, "The q-binomial needs q >= 2.")
    if r < 0 or r > n:
        return 0
    num = prod(q ** (n - j) - 1 for j in range(r))
    den = prod(q ** (r - j) - 1 for j in range(r))
    value, rem = divmod(num, den)
    if rem:
        raise InternalInconsistencyError(f"q-binomial [{n} choose {r}]_{q} is not integral")
    return value


def group_order(n: int, q: int) -> int:
    """|Sp(2n,q)| = |O(2n+1,q)| = q^(n^2) prod_{j=1..n} (q^(2j) - 1)."""
    if n < 1:
        raise DomainError("n", n, "The group rank must be positive.")
    return q ** (n * n) * prod(q ** (2 * j) - 1 for j in range(1, n + 1))
