from typing import Any

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from kloosterman.core.config import DEFAULT_LIMITS
from kloosterman.core.exceptions import FieldBoundsError, ReducibleModulusError

from .poly import degree, format_poly, smallest_factor


class FieldSpec(BaseModel):
    """A concrete realization of GF(2^r): the exponent and a degree-r irreducible modulus.

    Serializes as {"r": int, "modulus_hex": str}; bit i of the modulus is the coefficient of x^i.
    Construction verifies irreducibility by trial division.
    """

    r: int = Field(description="Field exponent, q = 2^r.")
    modulus: int = Field(
        validation_alias=AliasChoices("modulus", "modulus_hex"),
        serialization_alias="modulus_hex",
        description="Degree-r irreducible polynomial over GF(2), bit-encoded.",
    )

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    @field_validator("modulus", mode="before")
    @classmethod
    def _parse_hex(cls, value: Any) -> Any:
        if isinstance(value, str):
            try:
                return int(value, 16)
            except ValueError:
                raise FieldBoundsError("modulus", value, "Expected a hexadecimal polynomial encoding such as 0x13.")
        return value

    @field_serializer("modulus")
    def _modulus_hex(self, modulus: int) -> str:
        return f"{modulus:#x}"

    @model_validator(mode="after")
    def _check_modulus(self) -> "FieldSpec":
        if not 1 <= self.r <= DEFAULT_LIMITS.max_r:
            raise FieldBoundsError("r", self.r, f"Supported exponents are 1..{DEFAULT_LIMITS.max_r}.")
        if degree(self.modulus) != self.r:
            raise FieldBoundsError("modulus", f"{self.modulus:#x}", f"Expected a polynomial of degree exactly {self.r}.")
        factor = smallest_factor(self.modulus)
        if factor is not None:
            raise ReducibleModulusError(self.modulus, factor)
        return self

    @property
    def q(self) -> int:
        return 1 << self.r

    def describe(self) -> str:
        return f"GF(2^{self.r}) mod {format_poly(self.modulus)}"
