from functools import cached_property
from threading import RLock
from typing import Callable, Hashable, TypeAlias, TypeVar

import numpy as np
from cachetools import LRUCache

from kloosterman.core.config import DEFAULT_LIMITS, ComputeLimits
from kloosterman.core.exceptions import FieldBoundsError, FieldDivisionByZeroError
from kloosterman.core.logger import get_logger

from .poly import clmul, poly_mod, smallest_irreducible
from .spec import FieldSpec


logger = get_logger(__name__)

# Polynomial-basis coordinates of an element, packed into an int in [0, q).
FieldElement: TypeAlias = int

T = TypeVar("T")


def _prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


class FieldCtx:
    """Arithmetic in GF(2^r) against a fixed modulus.

    Elements are plain ints holding their coordinate bit-vector. Addition is XOR.
    Multiplication goes through exp/log tables up to `table_max_r` and through a
    carry-less multiply with reduction above it. The trace is linear, so it is
    stored as a mask over the coordinates and a per-element table.

    The context is immutable after construction. The only mutable part is the
    cache of derived tables (see `cached`), which is filled under a lock.
    """

    def __init__(self, spec: FieldSpec, limits: ComputeLimits = DEFAULT_LIMITS):
        self.spec = spec
        self.r = spec.r
        self.q = spec.q
        self.modulus = spec.modulus
        self.limits = limits

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._exp_np: np.ndarray | None = None
        self._log_np: np.ndarray | None = None
        if self.r <= limits.table_max_r:
            self._build_tables()

        self.trace_mask = self._compute_trace_mask()
        elements = np.arange(self.q, dtype=np.int64)
        self._trace_np = (np.bitwise_count(elements & self.trace_mask) & 1).astype(np.uint8)
        self._trace_np.flags.writeable = False

        self._cache: LRUCache[Hashable, object] = LRUCache(maxsize=limits.kloosterman_cache_size)
        self._cache_lock = RLock()
        logger.debug(f"FieldCtx ready: {spec.describe()}, tables={self.has_tables}, trace_mask={self.trace_mask:#x}")

    # ---- construction helpers

    def _mul_slow(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def _pow_slow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, x)
            x = self._mul_slow(x, x)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        cofactors = [order // p for p in _prime_factors(order)]
        for g in range(2, self.q):
            if all(self._pow_slow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group has no generator")  # unreachable for a field

    def _build_tables(self) -> None:
        g = self._find_generator()
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            exp[i + n] = x
            log[x] = i
            x = self._mul_slow(x, g)
        self._exp, self._log = exp, log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        self._exp_np.flags.writeable = False
        self._log_np.flags.writeable = False
        self.__dict__["generator"] = g

    def _compute_trace_mask(self) -> int:
        mask = 0
        for i in range(self.r):
            t = self.trace_by_frobenius(1 << i)
            assert t in (0, 1), f"trace of x^{i} left the prime field: {t:#x}"
            mask |= t << i
        return mask

    # ---- identity

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash((self.r, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(r={self.r}, modulus={self.modulus:#x})"

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    @cached_property
    def generator(self) -> FieldElement:
        """Smallest element of multiplicative order q - 1."""
        return self._find_generator()

    # ---- elements

    def element(self, bits: int) -> FieldElement:
        if not 0 <= bits < self.q:
            raise FieldBoundsError("element", bits, f"Elements of GF({self.q}) are encoded in [0, {self.q}).")
        return bits

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    # ---- scalar arithmetic

    @staticmethod
    def add(x: FieldElement, y: FieldElement) -> FieldElement:
        return x ^ y

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x == 0 or y == 0:
            return 0
        if self._exp is not None and self._log is not None:
            return self._exp[self._log[x] + self._log[y]]
        return self._mul_slow(x, y)

    def square(self, x: FieldElement) -> FieldElement:
        return self.mul(x, x)

    def pow(self, x: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            return 1
        if x == 0:
            return 0
        if self._exp is not None and self._log is not None:
            return self._exp[(self._log[x] * e) % (self.q - 1)]
        return self._pow_slow(x, e)

    def inv(self, x: FieldElement) -> FieldElement:
        if x == 0:
            raise FieldDivisionByZeroError()
        if self._exp is not None and self._log is not None:
            return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]
        return self._pow_slow(x, self.q - 2)

    def div(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return self.mul(x, self.inv(y))

    def sqrt(self, x: FieldElement) -> FieldElement:
        # Squaring is a bijection in characteristic 2; its inverse is x^(2^(r-1)).
        return self.pow(x, self.q // 2)

    def trace(self, x: FieldElement) -> int:
        return (x & self.trace_mask).bit_count() & 1

    def trace_by_frobenius(self, x: FieldElement) -> FieldElement:
        """Evaluate x + x^2 + ... + x^(2^(r-1)) directly in the field."""
        total, y = x, x
        for _ in range(self.r - 1):
            y = self._mul_slow(y, y)
            total ^= y
        return total

    def character(self, x: FieldElement) -> int:
        """The canonical additive character lambda(x) = (-1)^tr(x)."""
        return 1 - 2 * self.trace(x)

    # ---- vectorized arithmetic

    def mul_array(self, x: np.ndarray | int, y: np.ndarray | int) -> np.ndarray:
        xa = np.asarray(x, dtype=np.int64)
        ya = np.asarray(y, dtype=np.int64)
        if self._exp_np is not None and self._log_np is not None:
            out = self._exp_np[self._log_np[xa] + self._log_np[ya]]
            return np.where((xa == 0) | (ya == 0), 0, out)
        xa, ya = np.broadcast_arrays(xa, ya)
        shifted = xa.copy()
        out = np.zeros_like(shifted)
        for i in range(self.r):
            out ^= np.where((ya >> i) & 1, shifted, 0)
            shifted = shifted << 1
            shifted ^= np.where((shifted >> self.r) & 1, self.modulus, 0)
        return out

    def inv_array(self, x: np.ndarray) -> np.ndarray:
        xa = np.asarray(x, dtype=np.int64)
        if np.any(xa == 0):
            raise FieldDivisionByZeroError()
        if self._exp_np is not None and self._log_np is not None:
            return self._exp_np[(self.q - 1 - self._log_np[xa]) % (self.q - 1)]
        result = np.ones_like(xa)
        base, e = xa, self.q - 2
        while e:
            if e & 1:
                result = self.mul_array(result, base)
            base = self.mul_array(base, base)
            e >>= 1
        return result

    def trace_array(self, x: np.ndarray) -> np.ndarray:
        return self._trace_np[np.asarray(x, dtype=np.int64)]

    def character_array(self, x: np.ndarray) -> np.ndarray:
        return 1 - 2 * self.trace_array(x).astype(np.int64)

    @property
    def trace_table(self) -> np.ndarray:
        """Read-only array t with t[x] = tr(x)."""
        return self._trace_np

    # ---- derived-table cache

    def cached(self, key: Hashable, factory: Callable[[], T]) -> T:
        """Return the cached value for `key`, computing it once under the lock."""
        with self._cache_lock:
            if key in self._cache:
                return self._cache[key]  # type: ignore[return-value]
            value = factory()
            self._cache[key] = value
            return value


def field_new(r: int, modulus: int | None = None, limits: ComputeLimits = DEFAULT_LIMITS) -> FieldCtx:
    """Create a verified GF(2^r) context.

    When `modulus` is omitted the lexicographically smallest irreducible polynomial
    of degree r is used, so results are reproducible without configuration.
    """
    if not 1 <= r <= limits.max_r:
        raise FieldBoundsError("r", r, f"Supported exponents are 1..{limits.max_r}.")
    if modulus is None:
        modulus = smallest_irreducible(r)
    return FieldCtx(FieldSpec(r=r, modulus=modulus), limits=limits)
