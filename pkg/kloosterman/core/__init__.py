from importlib.metadata import PackageNotFoundError, version

from .charsums import MomentTable, kloosterman, moments
from .codes import WeightDistribution, macwilliams, weight_distribution_dp
from .config import DEFAULT_LIMITS, ComputeLimits
from .exceptions import KloostermanError
from .field import FieldCtx, FieldSpec, field_new
from .groups import TraceDistribution, trace_distribution
from .identities import VerificationReport, mk_recursion, t1k_recursion
from .logger import get_logger


try:
    __version__ = version("kloosterman-core")
except PackageNotFoundError:
    __version__ = "0.0.0"  # fallback for editable/unbuilt environments

__all__ = [
    "FieldCtx",
    "FieldSpec",
    "field_new",
    "ComputeLimits",
    "DEFAULT_LIMITS",
    "KloostermanError",
    "kloosterman",
    "moments",
    "MomentTable",
    "TraceDistribution",
    "trace_distribution",
    "WeightDistribution",
    "weight_distribution_dp",
    "macwilliams",
    "VerificationReport",
    "mk_recursion",
    "t1k_recursion",
    "get_logger",
    "__version__",
]
