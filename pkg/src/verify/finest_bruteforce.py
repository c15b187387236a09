from functools import reduce
from typing import Optional

from amoeba_types.types import AmoebaConfig, Partition, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from error.errors import LatticeViolationError
from partitions.meet import meet
from partitions.tilde_r import tilde_r
from verify.rprime_bruteforce import rprime_bruteforce


def finest_bruteforce(M: RankOracle, S: SubsetMask, config: Optional[AmoebaConfig] = None) -> Partition:
    """
    Meet of all optimal partitions of S, found by enumeration.

    Raises:
        GroundTooLargeError: if |S| exceeds the enumeration limit
        LatticeViolationError: if the meet is not itself optimal
    """
    best, optimal = rprime_bruteforce(M, S, config)
    finest = reduce(meet, optimal)
    if tilde_r(M, finest) != best:
        raise LatticeViolationError(f"meet of optimal partitions weighs {tilde_r(M, finest)}, optimum is {best}")
    return finest
