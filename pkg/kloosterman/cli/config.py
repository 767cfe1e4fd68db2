import re
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from kloosterman.core.config import DEFAULT_LIMITS
from kloosterman.core.exceptions import ConfigError
from kloosterman.core.field import FieldSpec


CommandLiteral = Literal["kloosterman", "moments", "gauss", "weights", "verify"]
FormatLiteral = Literal["json", "csv", "table"]

CHECKS: tuple[str, ...] = (
    "prop-h",
    "prop-c",
    "prop-e",
    "prop-f",
    "theorem-b",
    "gl-kloosterman",
    "gauss-formula",
    "prop-j",
    "lemma-l",
    "weights",
    "pless",
    "theorem-o",
    "theorem-a",
)

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_sweep(text: str) -> list[int]:
    """'2,3,5' -> [2, 3, 5]; '2..5' -> [2, 3, 4, 5]; pieces may be mixed."""
    values: list[int] = []
    for piece in text.split(","):
        if not piece.strip():
            continue
        m = _RANGE.match(piece)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise ConfigError("sweep", text, f"Range {lo}..{hi} is empty.")
            values.extend(range(lo, hi + 1))
        elif piece.strip().isdigit():
            values.append(int(piece))
        else:
            raise ConfigError("sweep", text, "Use comma lists like 2,3,5 or ranges like 2..10.")
    if not values:
        raise ConfigError("sweep", text, "No extension degrees given.")
    return sorted(set(values))


class RunConfig(BaseModel):
    """Configuration of one CLI invocation.

    Attributes:
        command: Subcommand to run.
        r: Extension degree of GF(2^r).
        q: Field size; must be a power of two and agree with r when both are set.
        modulus: Irreducible modulus overriding the default one (single field only).
        h_max: Largest moment exponent.
        sweep: Extension degrees to run; defaults to [r].
        format: Output format.
        out: Output file; stdout when unset.
        seed_order: Shuffle the group enumeration order with this seed.
        code: Which trace code `weights` reports.
        full: Compute full weight distributions instead of truncated ones.
        j_max: Truncation degree for weight distributions; defaults to h_max.
        n: Rank for the O(2n+1,q) Gauss sum formula.
        only: Verification checks to run; all when unset.
        inject_fault: Add one to D_j at this index before the trace-one recursion.
        cross_check: Compare brute-force moments with the MK recursion.
        jobs: Worker processes for `verify` sweeps.
    """

    command: CommandLiteral
    r: int | None = Field(default=None)
    q: int | None = Field(default=None)
    modulus: int | None = Field(default=None)
    h_max: int = Field(default=9, ge=0)
    sweep: list[int] = Field(default_factory=list)
    format: FormatLiteral = Field(default="table")
    out: Path | None = Field(default=None)
    seed_order: int | None = Field(default=None)
    code: Literal["o3", "sp2", "both"] = Field(default="both")
    full: bool = Field(default=False)
    j_max: int | None = Field(default=None, ge=0)
    n: int = Field(default=1, ge=1)
    only: list[str] | None = Field(default=None)
    inject_fault: int | None = Field(default=None, ge=0)
    cross_check: bool = Field(default=False)
    jobs: int = Field(default=1, ge=1)

    model_config = ConfigDict(extra="forbid")

    @field_validator("modulus", mode="before")
    @classmethod
    def _parse_modulus(cls, v: Any) -> Any:
        if isinstance(v, str):
            try:
                return int(v, 16)
            except ValueError:
                raise ConfigError("modulus", v, "Expected a hexadecimal polynomial such as 0x13.")
        return v

    @field_validator("sweep", mode="before")
    @classmethod
    def _parse_sweep(cls, v: Any) -> Any:
        if isinstance(v, str):
            return parse_sweep(v)
        return v or []

    @field_validator("only", mode="before")
    @classmethod
    def _parse_only(cls, v: Any) -> Any:
        if isinstance(v, str):
            v = [name.strip() for name in v.split(",") if name.strip()]
        if v is None:
            return None
        unknown = [name for name in v if name not in CHECKS]
        if unknown:
            raise ConfigError("only", ",".join(unknown), f"Known checks: {', '.join(CHECKS)}.")
        return [name for name in CHECKS if name in v]

    @model_validator(mode="after")
    def _resolve_field(self) -> "RunConfig":
        r = self.r
        if self.q is not None:
            if self.q < 2 or self.q & (self.q - 1):
                raise ConfigError("q", self.q, "q must be a power of two.")
            from_q = self.q.bit_length() - 1
            if r is not None and r != from_q:
                raise ConfigError("q", self.q, f"Inconsistent with r = {r}.")
            r = from_q
        if r is None and not self.sweep:
            raise ConfigError("r", None, "Give --r, --q or --sweep.")
        sweep = self.sweep or [r]
        for degree in sweep:
            if not 1 <= degree <= DEFAULT_LIMITS.max_r:
                raise ConfigError("r", degree, f"Supported range is 1..{DEFAULT_LIMITS.max_r}.")
        if self.modulus is not None and len(sweep) > 1:
            raise ConfigError("modulus", f"{self.modulus:#x}", "A modulus override needs a single field.")
        if self.command == "verify" and "theorem-a" in self.checks and self.h_max % 2 == 0:
            raise ConfigError("h_max", self.h_max, "The trace-one recursion runs over odd h; pass an odd --hmax.")
        if self.inject_fault is not None and self.inject_fault > self.h_max:
            raise ConfigError("inject_fault", self.inject_fault, f"The fault index must not exceed --hmax = {self.h_max}.")
        if self.modulus is not None:
            FieldSpec(r=sweep[0] if r is None else r, modulus=self.modulus)
        self.r = sweep[0] if r is None else r
        self.q = 1 << self.r
        self.sweep = sweep
        return self

    @property
    def checks(self) -> list[str]:
        return list(self.only) if self.only is not None else list(CHECKS)

    @property
    def truncation(self) -> int:
        return self.h_max if self.j_max is None else self.j_max
