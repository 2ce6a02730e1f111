# harness/cache.py
"""Database-backed cache of cochain evaluations with per-run spot checks."""
import logging
import threading
from typing import Callable, Dict, List, Sequence

from groups import AlgebraElem
from scalars import Scalar, parse_scalar
from verify_db import CacheService, session_scope
from verify_db.services import cache_key

logger = logging.getLogger(__name__)


class EvaluationCache:
    """
    Cochain values keyed by scenario digest, operator name and the canonical
    text of the input tuple. Every entry written or read during a run keeps a
    recompute closure so spot_check can re-evaluate it from scratch.
    """

    def __init__(self, spot_checks: int = 5):
        self.spot_checks = spot_checks
        self._lock = threading.Lock()
        self._recompute: Dict[str, Callable[[], str]] = {}
        self.hits = 0
        self.misses = 0

    def evaluate(self, scenario, operator: str, cochain, xs: Sequence[AlgebraElem]) -> Scalar:
        input_text = "\x1d".join(x.to_text() for x in xs)
        key = cache_key(scenario.digest, operator, input_text)
        with self._lock:
            with session_scope() as session:
                stored = CacheService.get(session, key)
        if stored is not None:
            with self._lock:
                self.hits += 1
                self._recompute.setdefault(key, lambda: cochain.evaluate(xs).to_text())
            return parse_scalar(stored)
        value = cochain.evaluate(xs)
        with self._lock:
            self.misses += 1
            self._recompute[key] = lambda: cochain.evaluate(xs).to_text()
            with session_scope() as session:
                CacheService.put(session, key, operator, value.to_text())
        return value

    def spot_keys(self) -> List[str]:
        """The keys spot_check re-evaluates, in a run-independent order."""
        with self._lock:
            return sorted(self._recompute)[: self.spot_checks]

    def spot_check(self) -> List[str]:
        """Keys whose stored value differs from a fresh evaluation."""
        keys = self.spot_keys()
        with self._lock:
            with session_scope() as session:
                mismatches = CacheService.spot_check(
                    session, keys, lambda key: self._recompute[key]()
                )
        logger.debug(f"cache spot check: {len(keys)} keys, {len(mismatches)} mismatches")
        return mismatches

    def reset(self) -> None:
        with self._lock:
            self._recompute.clear()
            self.hits = self.misses = 0
