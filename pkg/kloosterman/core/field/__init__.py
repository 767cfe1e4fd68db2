from .context import FieldCtx, FieldElement, field_new
from .poly import irreducible_polynomials, is_irreducible, smallest_irreducible
from .spec import FieldSpec


__all__ = [
    "FieldCtx",
    "FieldElement",
    "FieldSpec",
    "field_new",
    "irreducible_polynomials",
    "is_irreducible",
    "smallest_irreducible",
]
