from typing import Optional

from amoeba_types.types import AmoebaConfig, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from derived.coarsest_optimal_partition import coarsest_optimal_partition


def rprime(M: RankOracle, S: SubsetMask, config: Optional[AmoebaConfig] = None) -> int:
    """r'(S) = min over partitions of S of the sum of 2r(P_i) - 1"""
    return coarsest_optimal_partition(M, S, config=config).rprime
