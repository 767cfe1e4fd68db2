import csv
import io
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer, model_validator


ModeLiteral = Literal["full", "truncated"]


class WeightDistribution(BaseModel):
    """Number of codewords of each Hamming weight j, for 0 <= j <= j_max.

    In full mode j_max equals the length n. Serializes as
    {"n", "mode", "j_max", "counts": {"j": "decimal"}} with zero entries omitted.
    """

    n: int = Field(description="Code length.")
    mode: ModeLiteral
    j_max: int
    counts: list[int]

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _check_shape(self) -> "WeightDistribution":
        if self.mode == "full" and self.j_max != self.n:
            raise ValueError(f"a full distribution must run to j = n = {self.n}, got j_max = {self.j_max}")
        if len(self.counts) != self.j_max + 1:
            raise ValueError(f"expected {self.j_max + 1} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("weight counts must be nonnegative")
        return self

    @field_serializer("counts")
    def _sparse_decimal(self, counts: list[int]) -> dict[str, str]:
        return {str(j): str(c) for j, c in enumerate(counts) if c}

    def __getitem__(self, j: int) -> int:
        if j > self.j_max:
            if self.mode == "full":
                return 0
            raise IndexError(f"weight {j} is beyond the truncation degree {self.j_max}")
        return self.counts[j]

    def total(self) -> int:
        return sum(self.counts)

    def is_symmetric(self) -> bool:
        return self.mode == "full" and self.counts == self.counts[::-1]

    def truncate(self, j_max: int) -> "WeightDistribution":
        j_max = min(j_max, self.j_max)
        return WeightDistribution(n=self.n, mode="truncated", j_max=j_max, counts=self.counts[: j_max + 1])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["j", "count"])
        for j, c in enumerate(self.counts):
            writer.writerow([j, c])
        return buf.getvalue()
