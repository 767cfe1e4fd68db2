from .combinatorics import group_order, qbinom
from .elements import GroupElement2x2, GroupLiteral, O3Element, is_o3_member, lift_to_o3, preserves_quadratic_form, quadratic_form
from .enumerate import enumerate_sl2, enumerate_sp4_binary, enumerate_symplectic_closure, sl2_blocks, sl2_traces
from .gauss import gauss_sum_bruteforce, gauss_sum_closed_form, gauss_sum_formula, orthogonal_gauss_sum_bruteforce
from .traces import (
    TraceDistribution,
    symplectic_trace_distribution,
    trace_counts_from_gauss_sums,
    trace_distribution,
    trace_distribution_formula,
)


__all__ = [
    "GroupElement2x2",
    "GroupLiteral",
    "O3Element",
    "TraceDistribution",
    "enumerate_sl2",
    "enumerate_sp4_binary",
    "enumerate_symplectic_closure",
    "gauss_sum_bruteforce",
    "gauss_sum_closed_form",
    "gauss_sum_formula",
    "group_order",
    "is_o3_member",
    "lift_to_o3",
    "orthogonal_gauss_sum_bruteforce",
    "preserves_quadratic_form",
    "qbinom",
    "quadratic_form",
    "sl2_blocks",
    "sl2_traces",
    "symplectic_trace_distribution",
    "trace_counts_from_gauss_sums",
    "trace_distribution",
    "trace_distribution_formula",
]
