from typing import Optional

from amoeba_types.types import AmoebaConfig, SubsetMask
from amoeba_types.rank_oracle import RankOracle
from derived.rprime import rprime


def independent_in_mprime(M: RankOracle, S: SubsetMask, config: Optional[AmoebaConfig] = None) -> bool:
    """S is independent in M' iff r'(S) = |S|"""
    return rprime(M, S, config) == S.bit_count()
