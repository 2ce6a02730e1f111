from .database import Base, get_session, init_db, session_scope
from .models import CachedValue, CheckRecord, VerificationRun
from .services import CacheService, RunService

__all__ = [
    "Base",
    "get_session",
    "init_db",
    "session_scope",
    "CachedValue",
    "CheckRecord",
    "VerificationRun",
    "CacheService",
    "RunService",
]
