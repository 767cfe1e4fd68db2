from .fourier import additive_quadratic_sum, fourier_identity_check
from .gl import gl_kloosterman, gl_kloosterman_bruteforce
from .kloosterman import KloostermanValue, kloosterman, kloosterman_table, kloosterman_value
from .moments import MomentTable, moments


__all__ = [
    "KloostermanValue",
    "MomentTable",
    "additive_quadratic_sum",
    "fourier_identity_check",
    "gl_kloosterman",
    "gl_kloosterman_bruteforce",
    "kloosterman",
    "kloosterman_table",
    "kloosterman_value",
    "moments",
]
