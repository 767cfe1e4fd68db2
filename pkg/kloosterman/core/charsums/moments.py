import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator

from kloosterman.core.field import FieldCtx, FieldElement
from kloosterman.core.logger import get_logger

from .kloosterman import kloosterman_table


logger = get_logger(__name__)


class MomentTable(BaseModel):
    """Power moments of Kloosterman sums, split by the trace of the argument.

    Entry h of each list is MK^h, T0K^h or T1K^h. Serializes to
    {"q", "h", "MK", "T0K", "T1K"} with the moments as decimal strings.
    """

    q: int
    c: int = Field(default=1, exclude=True)
    h: list[int]
    mk: list[int] = Field(serialization_alias="MK")
    t0k: list[int] = Field(serialization_alias="T0K")
    t1k: list[int] = Field(serialization_alias="T1K")

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    @field_serializer("mk", "t0k", "t1k")
    def _decimal(self, values: list[int]) -> list[str]:
        return [str(v) for v in values]

    @model_validator(mode="after")
    def _check_split(self) -> "MomentTable":
        for h, mk, t0, t1 in zip(self.h, self.mk, self.t0k, self.t1k):
            if mk != t0 + t1:
                raise ValueError(f"MK^{h} = {mk} differs from T0K^{h} + T1K^{h} = {t0 + t1}")
        if self.mk and self.mk[0] != self.q - 1:
            raise ValueError(f"MK^0 must be q - 1 = {self.q - 1}, got {self.mk[0]}")
        if len(self.mk) > 1 and self.mk[1] != 1:
            raise ValueError(f"MK^1 must be 1, got {self.mk[1]}")
        return self

    @property
    def h_max(self) -> int:
        return self.h[-1]

    def row(self, h: int) -> tuple[int, int, int]:
        return self.mk[h], self.t0k[h], self.t1k[h]


def _power_sums(values: np.ndarray, h_max: int) -> list[int]:
    distinct, counts = np.unique(values, return_counts=True)
    pairs = [(int(v), int(n)) for v, n in zip(distinct, counts)]
    return [sum(n * v**h for v, n in pairs) for h in range(h_max + 1)]


def moments(ctx: FieldCtx, h_max: int, c: FieldElement = 1) -> MomentTable:
    """Brute-force MK^h, T0K^h, T1K^h for 0 <= h <= h_max over all a != 0."""
    ctx.limits.check("h_max", h_max, ctx.limits.moment_h_max)
    table = kloosterman_table(ctx, c)
    a = np.arange(1, ctx.q, dtype=np.int64)
    traces = ctx.trace_array(a)
    values = table[1:]
    t0k = _power_sums(values[traces == 0], h_max)
    t1k = _power_sums(values[traces == 1], h_max)
    result = MomentTable(
        q=ctx.q,
        c=c,
        h=list(range(h_max + 1)),
        mk=[x + y for x, y in zip(t0k, t1k)],
        t0k=t0k,
        t1k=t1k,
    )
    logger.info(f"Moment table for q={ctx.q} up to h={h_max} computed")
    return result
