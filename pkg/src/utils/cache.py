"""Simple in-memory memo for expensive numerical objects"""
from typing import Any, Callable, Hashable, Optional
import threading

from .logger import setup_logger

logger = setup_logger(__name__)


class SimpleCache:
    """Thread-safe in-memory cache with a bounded number of entries"""

    def __init__(self, max_items: int = 256):
        """
        Initialize cache

        Args:
            max_items: Oldest entries are evicted past this size
        """
        self._cache = {}
        self._lock = threading.Lock()
        self.max_items = max_items

    def get(self, key: Hashable) -> Optional[Any]:
        """
        Get item from cache

        Args:
            key: Cache key

        Returns:
            Cached value or None if not found
        """
        with self._lock:
            if key not in self._cache:
                return None
            logger.debug(f"Cache hit: {key}")
            return self._cache[key]

    def set(self, key: Hashable, value: Any):
        """
        Set item in cache

        Args:
            key: Cache key
            value: Value to cache (must be immutable)
        """
        with self._lock:
            if key not in self._cache and len(self._cache) >= self.max_items:
                oldest = next(iter(self._cache))
                del self._cache[oldest]
            self._cache[key] = value
            logger.debug(f"Cache set: {key}")

    def get_or_create(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Return the cached value or build, store and return it

        Args:
            key: Cache key
            factory: Zero-argument builder called on a miss

        Returns:
            Cached or freshly built value
        """
        value = self.get(key)
        if value is None:
            value = factory()
            self.set(key, value)
        return value

    def clear(self):
        """Clear all cache"""
        with self._lock:
            count = len(self._cache)
            self._cache.clear()
            logger.info(f"Cache cleared ({count} items)")

    def __len__(self) -> int:
        with self._lock:
            return len(self._cache)


# Loss Kraus sets keyed by (R, n_trunc); each is n_trunc^3 complex entries
kraus_cache = SimpleCache(max_items=16)
