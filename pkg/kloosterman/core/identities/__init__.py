from .pless import pless_check, pless_sides
from .recursions import mk_recursion, mk_recursion_sequence, prop_h_closed_forms, t1k_recursion
from .report import ReportRow, VerificationReport, compare
from .stirling import stirling2, stirling_table


__all__ = [
    "ReportRow",
    "VerificationReport",
    "compare",
    "mk_recursion",
    "mk_recursion_sequence",
    "pless_check",
    "pless_sides",
    "prop_h_closed_forms",
    "stirling2",
    "stirling_table",
    "t1k_recursion",
]
