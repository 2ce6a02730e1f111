# verify_db/services/cache_service.py

import hashlib
import logging
from typing import Callable, List, Optional, Sequence

from sqlalchemy import select
from sqlalchemy.orm import Session

from ..models import CachedValue

logger = logging.getLogger(__name__)


def cache_key(scenario_digest: str, operator: str, input_text: str) -> str:
    """sha256 over the scenario digest, the operator name and the canonical input text"""
    payload = "\x1f".join((scenario_digest, operator, input_text)).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


class CacheService:
    """Operator-evaluation cache keyed by canonical text digests"""

    @staticmethod
    def get(session: Session, key: str) -> Optional[str]:
        stmt = select(CachedValue.value_text).where(CachedValue.key_digest == key)
        return session.execute(stmt).scalar_one_or_none()

    @staticmethod
    def put(session: Session, key: str, operator: str, value_text: str) -> CachedValue:
        """Insert or overwrite a cached value"""
        if not key or not operator:
            raise ValueError("key and operator are required")
        entry = session.get(CachedValue, key)
        if entry is None:
            entry = CachedValue(key_digest=key, operator=operator, value_text=value_text)
            session.add(entry)
        else:
            entry.operator = operator
            entry.value_text = value_text
        session.flush()
        return entry

    @staticmethod
    def count(session: Session, operator: Optional[str] = None) -> int:
        stmt = select(CachedValue.key_digest)
        if operator:
            stmt = stmt.where(CachedValue.operator == operator)
        return len(session.execute(stmt).all())

    @staticmethod
    def spot_check(
        session: Session,
        keys: Sequence[str],
        recompute: Callable[[str], Optional[str]],
    ) -> List[str]:
        """
        Recompute the given cached entries and return the keys whose stored
        text differs. recompute returns None for keys it cannot rebuild.
        """
        mismatches = []
        for key in keys:
            stored = CacheService.get(session, key)
            if stored is None:
                continue
            fresh = recompute(key)
            if fresh is None:
                continue
            if fresh != stored:
                logger.warning(f"cache mismatch for {key[:12]}")
                mismatches.append(key)
        return mismatches
