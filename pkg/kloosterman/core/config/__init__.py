from .limits import DEFAULT_LIMITS, ComputeLimits


__all__ = ["ComputeLimits", "DEFAULT_LIMITS"]
