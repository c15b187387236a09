import logging
import threading
from typing import Dict, Optional

from amoeba_types.types import AmoebaConfig, OptimalPartitionResult, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from derived.coarsest_optimal_partition import coarsest_optimal_partition
from error.errors import LoopError
from utils.load_config import load_config
from utils.mask_elements import mask_elements

logger = logging.getLogger(__name__)


class DerivedOracle(RankOracle):
    """
    Rank oracle of the derived matroid M' of a loopless base oracle.

    rank(S) = r'(S). The full coarsest-optimal-partition result for each
    queried S is kept as well, so partitions and bases are available without
    recomputation.
    Usable anywhere a RankOracle is, including as the base of another
    DerivedOracle.
    """

    def __init__(self, base: RankOracle, config: AmoebaConfig):
        super().__init__(
            base.ground_size,
            lambda S: self.result(S).rprime,
            name=f"derived({base.name})",
            max_cache=config.max_cache_entries,
        )
        self.base = base
        self.config = config
        self._results: Dict[SubsetMask, OptimalPartitionResult] = {}
        self._results_lock = threading.Lock()

    def result(self, S: SubsetMask) -> OptimalPartitionResult:
        with self._results_lock:
            cached = self._results.get(S)
        if cached is not None:
            return cached

        computed = coarsest_optimal_partition(self.base, S, config=self.config)
        with self._results_lock:
            if len(self._results) < self.config.max_cache_entries:
                self._results.setdefault(S, computed)
        return computed


def derived_oracle(M: RankOracle, config: Optional[AmoebaConfig] = None) -> DerivedOracle:
    """
    Wrap M as the derived matroid M'.

    Raises:
        LoopError: if M has a loop
    """
    if config is None:
        config = load_config()
    for e in mask_elements(M.ground):
        if M.rank(1 << e) == 0:
            raise LoopError(e)
    logger.debug(f"derived oracle over {M.name} ready")
    return DerivedOracle(M, config)
