from functools import reduce
from typing import Optional

from amoeba_types.types import AmoebaConfig, Partition, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from error.errors import LatticeViolationError
from partitions.join import join
from partitions.tilde_r import tilde_r
from verify.rprime_bruteforce import rprime_bruteforce


def coarsest_bruteforce(M: RankOracle, S: SubsetMask, config: Optional[AmoebaConfig] = None) -> Partition:
    """
    Join of all optimal partitions of S, found by enumeration.

    Raises:
        GroundTooLargeError: if |S| exceeds the enumeration limit
        LatticeViolationError: if the join is not itself optimal
    """
    best, optimal = rprime_bruteforce(M, S, config)
    coarsest = reduce(join, optimal)
    if tilde_r(M, coarsest) != best:
        raise LatticeViolationError(f"join of optimal partitions weighs {tilde_r(M, coarsest)}, optimum is {best}")
    return coarsest
