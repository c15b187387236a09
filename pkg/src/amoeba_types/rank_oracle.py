import threading
from typing import Callable, Dict

from amoeba_types.types import SubsetMask, MAX_GROUND_SIZE

DEFAULT_MAX_CACHE = 2 ** 20


class RankOracle:
    """
    Houses a matroid rank function r: 2^E -> N on the ground set {0,...,n-1}.

    Ranks are memoized by bit mask. `calls` counts cache misses only, which is
    the "rank evaluations in M" accounting used by the complexity checks. The
    memo and the counter are updated under one lock so concurrent readers see
    a consistent pair.
    """

    def __init__(
        self,
        ground_size: int,
        rank_fn: Callable[[SubsetMask], int],
        name: str = "oracle",
        max_cache: int = DEFAULT_MAX_CACHE,
    ):
        if not 0 <= ground_size <= MAX_GROUND_SIZE:
            raise ValueError(f"ground size {ground_size} outside 0..{MAX_GROUND_SIZE}")
        self.ground_size = ground_size
        self.name = name
        self._rank_fn = rank_fn
        self._cache: Dict[SubsetMask, int] = {}
        self._max_cache = max_cache
        self._calls = 0
        self._lock = threading.Lock()

    @property
    def ground(self) -> SubsetMask:
        return (1 << self.ground_size) - 1

    @property
    def calls(self) -> int:
        with self._lock:
            return self._calls

    def reset_calls(self) -> None:
        with self._lock:
            self._calls = 0

    def rank(self, mask: SubsetMask) -> int:
        with self._lock:
            cached = self._cache.get(mask)
        if cached is not None:
            return cached

        value = self._rank_fn(mask)

        with self._lock:
            # Another thread may have filled the slot meanwhile; count once.
            if mask not in self._cache:
                self._calls += 1
                if len(self._cache) < self._max_cache:
                    self._cache[mask] = value
        return value

    def rank_uncached(self, mask: SubsetMask) -> int:
        """Evaluate without touching the memo or the counter"""
        return self._rank_fn(mask)

    def __repr__(self) -> str:
        return f"RankOracle(name={self.name!r}, n={self.ground_size})"
