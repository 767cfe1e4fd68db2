from .distribution import WeightDistribution
from .macwilliams import krawtchouk, macwilliams
from .trace_code import (
    DualCodeword,
    TraceVector,
    analytic_dual_spectrum,
    build_trace_vector,
    dual_codeword,
    dual_weight,
    dual_weight_spectrum,
    o3_dual_weight,
    sp2_dual_weight,
)
from .weights import d_sequence, weight_distribution_dp


__all__ = [
    "DualCodeword",
    "TraceVector",
    "WeightDistribution",
    "analytic_dual_spectrum",
    "build_trace_vector",
    "d_sequence",
    "dual_codeword",
    "dual_weight",
    "dual_weight_spectrum",
    "krawtchouk",
    "macwilliams",
    "o3_dual_weight",
    "sp2_dual_weight",
    "weight_distribution_dp",
]
