from .cache_service import CacheService, cache_key
from .run_service import RunService

__all__ = [
    "CacheService",
    "cache_key",
    "RunService",
]
