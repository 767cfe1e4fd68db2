import os
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from kloosterman.core.exceptions import SizeGuardError
from kloosterman.core.logger import get_logger


logger = get_logger(__name__)

TRACE_VECTOR_HARD_MAX_R = 10


class ComputeLimits(BaseModel):
    """Runtime guards for every enumeration and exact computation.

    Attributes:
        max_r: Largest field exponent accepted by `field_new`.
        table_max_r: Largest exponent for which exp/log tables are built. Above it multiplication is carry-less.
        moment_h_max: Largest exponent of a brute-force moment table.
        gl_bruteforce_max: Largest number of candidate matrices q^(t*t) the GL Kloosterman brute force may walk.
        gauss_formula_max_n: Largest n accepted by the closed Gauss sum formula.
        trace_vector_max_r: Largest exponent for which explicit trace vectors (length q(q^2-1)) are built.
        enumeration_max_r: Largest exponent for which SL(2,q) is walked element by element.
        full_dp_max_length: Largest code length for a FULL weight distribution.
        truncated_dp_max_j: Largest degree for a truncated weight distribution.
        pless_h_max: Largest exponent in the Pless identity check.
        t1k_h_max: Largest odd exponent for the trace-one recursion.
        closure_max_order: Largest group order the symplectic closure may build.
        kloosterman_cache_size: Number of (context, c) Kloosterman tables kept per context.
    """

    max_r: int = Field(default=20, ge=1)
    table_max_r: int = Field(default=16, ge=1)
    moment_h_max: int = Field(default=16, ge=0)
    gl_bruteforce_max: int = Field(default=2**24, ge=1)
    gauss_formula_max_n: int = Field(default=3, ge=1)
    trace_vector_max_r: int = Field(default=6, ge=1, le=TRACE_VECTOR_HARD_MAX_R)
    enumeration_max_r: int = Field(default=TRACE_VECTOR_HARD_MAX_R, ge=1, le=TRACE_VECTOR_HARD_MAX_R)
    full_dp_max_length: int = Field(default=600, ge=1)
    truncated_dp_max_j: int = Field(default=64, ge=0)
    pless_h_max: int = Field(default=12, ge=0)
    t1k_h_max: int = Field(default=13, ge=1)
    closure_max_order: int = Field(default=2**21, ge=1)
    kloosterman_cache_size: int = Field(default=16, ge=1)

    model_config = ConfigDict(extra="forbid", frozen=True)

    @classmethod
    def from_env(cls, **overrides: Any) -> "ComputeLimits":
        """Build limits, letting `KLOOSTERMAN_TRACE_VECTOR_MAX_R` raise the trace-vector guard."""
        env_r = os.getenv("KLOOSTERMAN_TRACE_VECTOR_MAX_R")
        if env_r is not None and "trace_vector_max_r" not in overrides:
            overrides["trace_vector_max_r"] = int(env_r)
            logger.debug(f"trace_vector_max_r overridden from environment: {env_r}")
        return cls(**overrides)

    def check(self, quantity: str, value: int, bound: int) -> None:
        if value > bound:
            raise SizeGuardError(quantity, value, bound)


DEFAULT_LIMITS = ComputeLimits.from_env()
