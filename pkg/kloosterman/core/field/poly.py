"""Polynomials over GF(2) encoded as Python ints (bit i = coefficient of x^i)."""


def degree(p: int) -> int:
    return p.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def smallest_factor(m: int) -> int | None:
    """Return the smallest nontrivial factor of `m`, or None when `m` is irreducible.

    Trial division runs over every polynomial of degree 1 .. deg(m) // 2.
    """
    d = degree(m)
    if d < 1:
        return None
    for f in range(2, 1 << (d // 2 + 1)):
        if poly_mod(m, f) == 0:
            return f
    return None


def is_irreducible(m: int) -> bool:
    return degree(m) >= 1 and smallest_factor(m) is None


def irreducible_polynomials(r: int) -> list[int]:
    """All irreducible degree-r polynomials over GF(2), ascending by bit-encoding."""
    return [m for m in range(1 << r, 1 << (r + 1)) if smallest_factor(m) is None]


def smallest_irreducible(r: int) -> int:
    for m in range(1 << r, 1 << (r + 1)):
        if smallest_factor(m) is None:
            return m
    raise AssertionError(f"no irreducible polynomial of degree {r}")  # unreachable for r >= 1


def format_poly(p: int) -> str:
    """Render `p` as e.g. 'x^3 + x + 1'."""
    if p == 0:
        return "0"
    terms = []
    for i in range(degree(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms)
