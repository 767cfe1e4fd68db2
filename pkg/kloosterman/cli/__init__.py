from importlib.metadata import PackageNotFoundError, version

from .commands import COMMANDS, CommandOutput, cmd_gauss, cmd_kloosterman, cmd_moments, cmd_verify, cmd_weights
from .config import RunConfig
from .main import main


try:
    __version__ = version("kloosterman-cli")
except PackageNotFoundError:
    __version__ = "0.0.0"  # fallback for editable/unbuilt environments

__all__ = [
    "COMMANDS",
    "CommandOutput",
    "RunConfig",
    "cmd_gauss",
    "cmd_kloosterman",
    "cmd_moments",
    "cmd_verify",
    "cmd_weights",
    "main",
    "__version__",
]
